"""Exception types shared across the library."""


class LegdualError(Exception):
    """Base class for all library errors."""


class PoleError(LegdualError):
    """A gamma function or Pochhammer denominator hit a pole."""


class DivergenceError(LegdualError):
    """A nonterminating series was requested outside its convergence disk."""


class MaxTermsError(LegdualError):
    """The term budget was exhausted before the stopping rule fired."""


class NotTerminatingError(LegdualError):
    """No numerator parameter terminates the sum at the requested index."""


class DomainError(LegdualError):
    """Argument outside the supported evaluation window."""


class EntireLimitUnsupported(LegdualError):
    """1+mu is a nonpositive integer and the series does not terminate."""


class DuplicateNodeError(LegdualError):
    """Factor nodes must be pairwise distinct."""


class NodeMismatchError(LegdualError):
    """Two factor lists were expected to share the same node list."""


class DegenerateError(LegdualError):
    """A dominant exponent is a nonpositive integer; the leading term vanishes."""


class BoundUnavailableError(LegdualError):
    """The stated remainder bound is not finite for these parameters."""


class UnknownIdentityError(LegdualError):
    """Identity id is not registered."""


class ConvergenceError(LegdualError):
    """Series tail is not decaying; the policy cannot be satisfied."""


class OracleUnstableError(LegdualError):
    """Doubling the oracle term count did not stabilize the value."""
