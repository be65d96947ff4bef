"""Custom exceptions for partition-algebra.

Every error carries a stable ``code`` so the CLI (and scripts parsing its
``--json`` output) can tell failures apart without matching on messages.
"""

from typing import Optional


class PartitionAlgebraError(Exception):
    """Base exception for all partition-algebra errors."""

    code = "error"


class ParseError(PartitionAlgebraError):
    """Raised when text (rational function, diagram, word, shape) cannot be parsed."""

    code = "parse-error"

    def __init__(self, message: str, position: Optional[int] = None) -> None:
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DivisionByZeroError(PartitionAlgebraError, ZeroDivisionError):
    """Raised when inverting or dividing by the zero rational function."""

    code = "division-by-zero"


class PoleAtPointError(PartitionAlgebraError):
    """Raised when a rational function is evaluated at a root of its denominator."""

    code = "pole-at-point"


class NotAPartitionError(PartitionAlgebraError):
    """Raised when blocks do not form a set partition of the 2n marked points."""

    code = "not-a-partition"


class SizeMismatchError(PartitionAlgebraError):
    """Raised when combining diagrams or elements with different strand counts."""

    code = "size-mismatch"


class IndexOutOfRangeError(PartitionAlgebraError):
    """Raised when a generator index is invalid for the strand count."""

    code = "index-out-of-range"


class BoundExceededError(PartitionAlgebraError):
    """Raised when an exhaustive computation is requested beyond the configured bound."""

    code = "bound-exceeded"


class ShapeNotAtLevelError(PartitionAlgebraError):
    """Raised when a shape is not a vertex of the Bratteli graph at the given level."""

    code = "shape-not-at-level"


class InvalidDirectionError(PartitionAlgebraError, ValueError):
    """Raised when asking for box removals of a hat shape or box additions of a tilde shape."""

    code = "invalid-direction"


class NotOneBoxApartError(PartitionAlgebraError):
    """Raised when two augmented shapes do not differ by exactly one box."""

    code = "not-one-box-apart"


class CoordinateOutOfRangeError(PartitionAlgebraError):
    """Raised when a generator acts on path coordinates beyond the level."""

    code = "coordinate-out-of-range"


class NotACoveringChainError(PartitionAlgebraError):
    """Raised when partitions do not form a chain adding one box at each step."""

    code = "not-a-covering-chain"


class ReductiveUnsupportedError(PartitionAlgebraError):
    """Raised when s_i acts on a reductive path pattern with no tabulated matrix."""

    code = "reductive-unsupported"


class ConfigError(PartitionAlgebraError):
    """Raised when configuration is invalid."""

    code = "config-error"
