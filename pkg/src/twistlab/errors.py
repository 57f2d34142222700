"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: parse problems exit 2, domain
precondition violations exit 3, internal invariant violations exit 4.
"""


class TwistlabError(Exception):
    """Base class for all package errors."""


class ParseError(TwistlabError):
    """Malformed user input (polynomial text, CLI values)."""


class PreconditionError(TwistlabError):
    """A documented domain precondition was violated."""


class InternalInvariantError(TwistlabError):
    """An internal consistency check failed; indicates a bug."""


# -- polynomial layer ------------------------------------------------------

class InvalidPrime(PreconditionError):
    """Modulus is 2 or composite."""


class ModulusMismatch(PreconditionError):
    """Two prime-field polynomials with different moduli were combined."""


class DegreeTooSmall(PreconditionError):
    """Operation requires a higher-degree polynomial."""


class ZeroPolynomial(PreconditionError):
    """Operation undefined for the zero polynomial."""


class NotSquarefree(PreconditionError):
    """Polynomial has a repeated factor where a squarefree one is required."""


# -- curve layer -----------------------------------------------------------

class SingularCurve(PreconditionError):
    """Vanishing discriminant: the equation does not define a smooth curve."""


class GenusTooSmall(PreconditionError):
    """deg f < 3 (genus < 1) is not supported."""


class ZeroTwist(PreconditionError):
    """Twisting by 0 is undefined."""


class NonIntegralTransform(PreconditionError):
    """Coordinate change produces non-integral coefficients."""


class SingularTransform(PreconditionError):
    """Coordinate change with vanishing determinant."""


class BadPrime(PreconditionError):
    """Operation requires a prime of good reduction."""


# -- local solubility layer ------------------------------------------------

class ExcludedPrime(PreconditionError):
    """p = 2 is outside the scope of the solubility routines."""


class InvalidDepth(PreconditionError):
    """Non-positive recursion depth."""


class PreconditionFailed(PreconditionError):
    """Generic named-precondition failure (message says which)."""


# -- fiber layer -----------------------------------------------------------

class NotAFiber(PreconditionError):
    """Component graph violates the fundamental fiber identity."""


class ShapeMismatch(PreconditionError):
    """Factor-degree multiset inconsistent with the number of leaves."""


class UnknownType(PreconditionError):
    """Component graph matches no recognized reduction type."""


# -- density layer ---------------------------------------------------------

class BoundTooSmall(PreconditionError):
    """Sieve bound below the smallest odd prime."""


class OddDegreeUnsupported(PreconditionError):
    """Twist search requires an even-degree polynomial."""
