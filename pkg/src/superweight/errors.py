"""Exception hierarchy.

Every domain error derives from `SuperweightError`; the CLI prints the class
name and exits with status 1. `UsageError` subclasses map to exit status 2.
"""


class SuperweightError(Exception):
    pass


class UsageError(SuperweightError):
    """Malformed literal or command line input."""


class ParseError(UsageError):
    pass


# weights
class NonIntegralWeight(SuperweightError):
    pass


class NotDominant(SuperweightError):
    pass


class ShapeMismatch(SuperweightError):
    pass


class IndexOutOfRange(SuperweightError):
    pass


# roots and Borels
class RankMismatch(SuperweightError):
    pass


class MissingSignMap(SuperweightError):
    pass


class IllegalSignOnMaxDeltaSlot(SuperweightError):
    pass


class BadBorel(SuperweightError):
    pass


# diagrams
class BadInterval(SuperweightError):
    pass


class NoIntegralAlignment(SuperweightError):
    pass


# odd reflections
class NotOddSimple(SuperweightError):
    pass


class SlotMismatch(SuperweightError):
    pass


class BadPartition(SuperweightError):
    pass


class NonPositiveRank(SuperweightError):
    pass


# catalog
class InvalidFamily(SuperweightError):
    pass


class RankTooSmall(SuperweightError):
    pass


class BadParity(SuperweightError):
    pass


class UnsupportedOrderRule(SuperweightError):
    pass


class NotInRootLatticeTranslate(SuperweightError):
    pass


# characters
class BudgetExceeded(SuperweightError):
    pass


# blocks
class MultipleMoves(SuperweightError):
    pass


class WindowTooSmall(SuperweightError):
    pass


class UnstableVerdict(SuperweightError):
    pass
