"""
Error hierarchy shared by every module.
"""

from typing import Optional


class PowerfulSetError(Exception):
    """Base class for all domain errors."""


class OrderTooLarge(PowerfulSetError):
    """The requested order exceeds a configured cap."""

    def __init__(self, order: int, cap: int, what: str = "operation"):
        self.order = order
        self.cap = cap
        super().__init__(f"{what}: order {order} exceeds cap {cap}")


class NotPowerOfTwoSize(PowerfulSetError):
    """The set size is not a power of 2."""


class UndefinedRank(PowerfulSetError):
    """Rank requested for a set without the zero word."""


class IndexOutOfRange(PowerfulSetError):
    """An element index is outside 1..order."""

    def __init__(self, element: int, order: int):
        self.element = element
        self.order = order
        super().__init__(f"element {element} outside ground set 1..{order}")


class InvalidNearFramePartner(PowerfulSetError):
    """The near-frame partner is zero or not a member of the set."""


class OrderMismatch(PowerfulSetError):
    """Two operands have different orders."""


class TooManyGenerators(PowerfulSetError):
    """Disjunctive closure requested for too many generators."""


class SeedPreconditionViolated(PowerfulSetError):
    """A diamond family seed fails one of the required predicates."""

    def __init__(self, seed_index: int, predicate: str):
        self.seed_index = seed_index
        self.predicate = predicate
        super().__init__(f"seed {seed_index} is not {predicate}")


class InvalidDigit(PowerfulSetError):
    """A Z4 word contains a digit outside 0..3."""


class CacheMismatch(PowerfulSetError):
    """A census cache file failed verification."""


class CacheOrderMismatch(CacheMismatch):
    """A census cache file holds a different order than the one requested."""

    def __init__(self, cached: int, requested: int):
        self.cached = cached
        self.requested = requested
        super().__init__(f"cache holds order {cached}, requested {requested}")


class SetFileError(PowerfulSetError):
    """A text file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class MissingZeroWord(PowerfulSetError):
    """The operation requires the zero word to be a member."""


class NotPowerful(PowerfulSetError):
    """An operand that must be powerful is not."""
