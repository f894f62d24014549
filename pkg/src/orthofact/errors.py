"""Exception hierarchy shared by every module."""


class FactError(Exception):
    """Base class for all errors raised by orthofact."""


class InvalidPoset(FactError):
    pass


class NotALattice(FactError):
    pass


class NotBounded(FactError):
    pass


class BadInterval(FactError):
    pass


class LimitExceeded(FactError):
    pass


class SizeLimit(LimitExceeded):
    """Isomorphism search refused because the carrier is too large."""


class PreconditionFailed(FactError):
    pass


class NotAnOmp(FactError):
    pass


class NotAnOa(FactError):
    pass


class MissingMeet(FactError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIdempotent(FactError):
    pass


class InvalidRing(FactError):
    pass


class SizeMismatch(FactError):
    pass


class EmptySet(FactError):
    pass


class FormatError(FactError):
    pass


class UsageError(FactError):
    pass
