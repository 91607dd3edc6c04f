"""Exception types raised across the package."""


class GPencilError(Exception):
    """Base class for every error raised by gpencil."""


class InvalidSet(GPencilError, ValueError):
    pass


class DimensionMismatch(GPencilError, ValueError):
    pass


class InvalidParameter(GPencilError, ValueError):
    pass


class UnsupportedSet(GPencilError, ValueError):
    """The set has no closed form here; use the numeric solver instead."""


class NotPositiveDefinite(GPencilError, ArithmeticError):
    pass


class NoConvergence(GPencilError, RuntimeError):
    pass


class InternalConsistencyError(GPencilError, RuntimeError):
    """An exact computation produced a remainder it should never produce."""


class VerificationFailure(GPencilError, AssertionError):
    """A checked mathematical statement did not hold on concrete data."""
