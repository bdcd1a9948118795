"""Exception hierarchy.

Domain errors (bad input, violated preconditions) map to CLI exit code 1;
identity and conjecture violations map to exit code 2.
"""

from fractions import Fraction


class VerlindeError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 1


class DomainError(VerlindeError, ValueError):
    """An input lies outside the domain of the operation."""


class SingularIsogenyError(DomainError):
    pass


class DegenerateTripleError(DomainError):
    pass


class HypothesisError(DomainError):
    """Input lies outside the hypotheses a computation relies on."""


class IdentityViolation(VerlindeError):
    """An exact identity that should hold failed."""

    exit_code = 2

    def __init__(self, identity: str, detail: str = ""):
        self.identity = identity
        self.detail = detail
        msg = f"identity failed: {identity}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class OracleDivergence(IdentityViolation):
    """Two independent derivations of the same quantity disagree."""


class ConjectureViolation(VerlindeError):
    """A conjectured multiplicity came out negative or fractional."""

    exit_code = 2

    def __init__(self, order: int, value: Fraction):
        self.order = order
        self.value = value
        super().__init__(f"multiplicity for order {order} is {value}, not a nonnegative integer")


class InternalInvariantError(VerlindeError, AssertionError):
    """Something that is provably impossible happened; indicates a bug."""

    exit_code = 2
