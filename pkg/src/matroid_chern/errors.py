"""Exception hierarchy shared by every module of the package."""


class MatroidError(Exception):
    """Base class for all errors raised by matroid_chern."""


class InvalidInput(MatroidError, ValueError):
    pass


class InvalidLinearSpace(InvalidInput):
    """Two lines of a proposed linear space share two or more points."""


class NotAMatroid(InvalidInput):
    pass


class UnsupportedOrder(InvalidInput):
    """No finite field of the requested order is built in."""


class TooLarge(MatroidError):
    pass


class LoopError(MatroidError):
    pass


class RankError(MatroidError):
    pass


class CoLoopError(MatroidError):
    pass


class DimensionError(MatroidError):
    pass


class InvalidFlat(InvalidInput):
    pass


class InvalidExponents(InvalidInput):
    pass


class BalancingViolation(MatroidError):
    pass


class LiftFailure(MatroidError):
    pass


class ParseError(InvalidInput):
    """Malformed matroid file; the message carries the offending field."""
