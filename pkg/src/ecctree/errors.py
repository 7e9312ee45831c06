"""Exception types raised across the package."""


class EccTreeError(Exception):
    """Base class for all package errors."""


class NotATree(EccTreeError, ValueError):
    pass


class BadLabel(EccTreeError, ValueError):
    pass


class ParseError(EccTreeError, ValueError):
    pass


class InvalidSequence(EccTreeError, ValueError):
    """A sequence that is not a tree eccentric sequence.

    ``reason`` is one of ``CenterCondition``, ``MultiplicityGap``,
    ``NotSorted`` or ``TooShort``.
    """

    REASONS = ("CenterCondition", "MultiplicityGap", "NotSorted", "TooShort")

    def __init__(self, reason, detail=""):
        if reason not in self.REASONS:
            raise ValueError(f"unknown rejection reason {reason!r}")
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


class BadParameters(EccTreeError, ValueError):
    pass


class NotReducible(EccTreeError, ValueError):
    pass


class BadSubset(EccTreeError, ValueError):
    pass


class BadK(EccTreeError, ValueError):
    pass


class SizeLimit(EccTreeError, ValueError):
    pass


class AlreadyCaterpillar(EccTreeError, ValueError):
    pass


class DomainError(EccTreeError, ArithmeticError):
    pass
