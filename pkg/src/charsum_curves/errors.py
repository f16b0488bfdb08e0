"""Exception hierarchy shared across the package."""


class CharsumCurvesError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimeError(CharsumCurvesError):
    """The given modulus is not prime."""


class EvenPrimeError(CharsumCurvesError):
    """p = 2 is prime but not an odd prime; no field context is built for it."""


class NonResidueError(CharsumCurvesError):
    """Square root requested for a quadratic non-residue."""


class NoRepresentationError(CharsumCurvesError):
    """No two-squares representation exists (p is 3 mod 4)."""


class ZeroArgumentError(CharsumCurvesError):
    """An operation that needs a nonzero field element received zero."""


class ContextMismatchError(CharsumCurvesError):
    """Operands were built over different prime fields."""


class DegenerateLambdaError(CharsumCurvesError):
    """The series argument is 0 or 1, where the exact path is undefined."""


class BadLambdaError(CharsumCurvesError):
    """Argument outside the supported special-value set {-1, 1/2, 2}."""


class InvalidModelError(CharsumCurvesError):
    """Curve parameters violate the model's nondegeneracy condition."""


class UnsupportedModelError(CharsumCurvesError):
    """The requested operation is not defined for this curve model."""


class ExceptionalAdditionError(CharsumCurvesError):
    """An addition-law denominator vanished; the affine formula does not apply."""


class NotOnCurveError(CharsumCurvesError):
    """A point handed to the addition law does not satisfy the curve equation."""


class SingularCurveError(CharsumCurvesError):
    """The Weierstrass cubic y^2 = x(x-a)(x-b) is singular."""
