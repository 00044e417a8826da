"""Exception types shared across the library."""


class RotheLabError(Exception):
    """Base class for all library-specific errors."""


class CapExceededError(RotheLabError):
    """An enumeration request exceeds the configured size cap."""


class NoMatchError(RotheLabError):
    """No pair of equal-weight nonempty prefixes exists.

    Only reachable when the matcher's weight hypotheses are violated, so
    inside the bijections it signals a caller bug.
    """


class NotInDomainError(RotheLabError, ValueError):
    """A word or parameter tuple lies outside a bijection's domain."""


class InvariantViolationError(RotheLabError, ValueError):
    """A decomposition's membership invariants do not hold."""


class ParameterError(RotheLabError, ValueError):
    """An identity checker was called with parameters outside its preconditions."""


class UnsupportedArgumentError(RotheLabError, ValueError):
    """An argument outside the supported domain (e.g. a negative upper index
    for a Gaussian binomial)."""
