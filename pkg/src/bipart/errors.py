"""Exception types shared across the library.

Everything derives from ValueError so that callers who do not care about
the distinction can catch a single class.
"""

__all__ = [
    "BipartError",
    "WeightMismatchError",
    "BasisMismatchError",
    "PartitionParseError",
    "LimitError",
    "UnitDiagonalError",
    "AmbiguousMaximumError",
]


class BipartError(ValueError):
    """Base class for all library-specific errors."""


class WeightMismatchError(BipartError):
    """Partitions or vectors of different weights were combined.

    Comparing objects indexed by P(n) and P(m) with n != m is a caller
    bug, not a value of the computation.
    """


class BasisMismatchError(BipartError):
    """Vectors carrying incompatible basis tags were combined."""


class PartitionParseError(BipartError):
    """A partition string could not be parsed."""


class LimitError(BipartError):
    """A configured resource guard (max weight, cell limit) was exceeded."""


class UnitDiagonalError(BipartError):
    """A matrix required to be unitriangular has a non-unit diagonal entry."""


class AmbiguousMaximumError(BipartError):
    """A vector's support has several incomparable dominance-maximal partitions."""
