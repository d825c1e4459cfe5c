"""Exception types shared across the library."""


class PolyConnectError(Exception):
    """Base class for all library-specific errors."""


class InvalidInputError(PolyConnectError, ValueError):
    """An argument lies outside an operation's documented domain."""


class NonTerminatingError(PolyConnectError):
    """No numerator parameter is a nonpositive integer, so the series never terminates."""


class DenominatorPoleError(PolyConnectError):
    """A denominator parameter vanishes strictly inside the summation range."""


class ZeroDenominatorParameterError(PolyConnectError):
    """A denominator parameter is zero where a nonzero value is required."""


class PoleInParamsError(PolyConnectError):
    """Expansion parameters produce a vanishing factor that would be divided by."""


class UnsupportedPairError(PolyConnectError):
    """No closed form is implemented for the requested source/target basis pair."""
