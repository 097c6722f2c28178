"""Pass/fail records shared by every verifier."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import ResourceLimitError


def _plain(obj):
    # witnesses carry tuples, numpy scalars and arrays; make them JSON-able
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return repr(obj)


@dataclass
class Check:
    name: str
    passed: bool
    residual: float | None = None
    witness: Any = None
    count: int = 0

    def to_dict(self):
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "residual": None if self.residual is None else float(self.residual),
            "witness": _plain(self.witness),
            "count": int(self.count),
        }


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.residual, c.witness, c.count))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __bool__(self):
        return self.passed

    def __str__(self):
        lines = [f"{self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            tag = "pass" if c.passed else "FAIL"
            res = "" if c.residual is None else f" residual={c.residual:.3g}"
            lines.append(f"  [{tag}] {c.name} (n={c.count}){res}")
            if not c.passed and c.witness is not None:
                lines.append(f"         witness: {c.witness}")
        return "\n".join(lines)


class Budget:
    """Counts enumerated instances and raises once a cap is crossed."""

    def __init__(self, limit: int | None, what: str = "composite checks"):
        self.limit = limit
        self.used = 0
        self.what = what

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise ResourceLimitError(
                f"enumeration budget of {self.limit} {self.what} exceeded", budget=self.limit)
