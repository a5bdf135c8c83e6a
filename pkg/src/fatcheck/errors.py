"""Exception types shared across the package."""

from .symfun.multipoly import DivisionNotExact

__all__ = [
    "FatcheckError",
    "UnsupportedGroup",
    "ZeroVector",
    "ComplexityLimit",
    "MissingClassNumber",
    "DegreeMismatch",
    "AllZero",
    "InconsistentProportionality",
    "DegenerateDenominator",
    "DegenerateSlope",
    "ParametrizationUnconfirmed",
    "BundleFormatError",
    "CrossCheckFailed",
    "DivisionNotExact",
]


class FatcheckError(Exception):
    """Base class for domain errors."""


class UnsupportedGroup(FatcheckError):
    pass


class ZeroVector(FatcheckError, ValueError):
    pass


class ComplexityLimit(FatcheckError):
    pass


class MissingClassNumber(FatcheckError, KeyError):
    def __init__(self, monomial: str):
        self.monomial = monomial
        super().__init__(f"no characteristic number for monomial {monomial}")

    def __str__(self) -> str:
        return self.args[0]


class DegreeMismatch(FatcheckError, ValueError):
    pass


class AllZero(FatcheckError):
    """The polynomial vanishes identically on the requested domain."""


class InconsistentProportionality(FatcheckError, ValueError):
    pass


class DegenerateDenominator(FatcheckError, ZeroDivisionError):
    pass


class DegenerateSlope(FatcheckError, ValueError):
    pass


class ParametrizationUnconfirmed(FatcheckError):
    pass


class BundleFormatError(FatcheckError, ValueError):
    pass


class CrossCheckFailed(FatcheckError):
    """Two independent computations of the same quantity disagree."""
