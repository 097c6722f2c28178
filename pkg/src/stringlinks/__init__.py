"""Choose-two operad, its divided powers, the Kontsevich conditions and cosimplicial models."""
__version__ = "0.1.0"
