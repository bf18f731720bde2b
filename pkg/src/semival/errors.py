"""Exception hierarchy shared by every module of the package."""


class SemivalError(Exception):
    """Base class for all errors raised by semival."""


class ParseError(SemivalError):
    """The curve document or a polynomial string is malformed."""


class ValidationError(SemivalError):
    """A parsed curve violates a structural invariant."""


class OrderUnknown(SemivalError):
    """A series has no known coefficient below its precision."""


class InfiniteValue(SemivalError):
    """A finite value was required but the element vanishes on the branch."""


class UnresolvedTruncation(SemivalError):
    """A truncated value would decide the outcome of a comparison."""


class PrecisionInsufficient(SemivalError):
    """Branch precision is too low for the requested saturation bound."""

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class MissingData(SemivalError):
    """Neither defining polynomials nor a user conductor bound were given."""


class NonTermination(SemivalError):
    """The completion loop exceeded its iteration guard."""


class VerificationFailure(SemivalError):
    """A computed basis failed its a posteriori certificate."""
