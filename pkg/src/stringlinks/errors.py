"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class DegenerateConfigurationError(ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class SamplingError(RuntimeError):
    pass
