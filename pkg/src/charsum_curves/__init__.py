"""Point counts on Edwards-family curves over F_p via character sums.

The package builds small prime fields with full discrete-log tables, exposes
their multiplicative character group, evaluates Jacobi and Gauss sums and the
finite-field hypergeometric series exactly where rationality is guaranteed,
and counts rational points on Edwards, twisted Edwards, Legendre, and Clausen
curve models both by enumeration and by formula.
"""

from .characters import (
    CharValue,
    Character,
    all_characters,
    character_by_index,
    quadratic_character,
    trivial_character,
)
from .curves import (
    AffinePoint,
    Clausen,
    ClausenIdentityReport,
    CountReport,
    CurveModel,
    Edwards,
    Legendre,
    TwistedEdwards,
    clausen_identity_check,
    count_points_brute,
    count_points_formula,
    count_weierstrass_points,
    edwards_add,
    edwards_negate,
    edwards_neutral,
    enumerate_affine_points,
    is_on_curve,
    isogenous_legendre_partner,
    twisted_partner_of_weierstrass,
    validate_model,
    within_hasse_bound,
)
from .errors import (
    BadLambdaError,
    CharsumCurvesError,
    ContextMismatchError,
    DegenerateLambdaError,
    EvenPrimeError,
    ExceptionalAdditionError,
    InvalidModelError,
    NonResidueError,
    NoRepresentationError,
    NotOnCurveError,
    NotPrimeError,
    SingularCurveError,
    UnsupportedModelError,
    ZeroArgumentError,
)
from .field import (
    FieldContext,
    TwoSquares,
    build_field_context,
    discrete_log,
    is_prime,
    least_primitive_root,
    primes_in_range,
    quadratic_character_value,
    sqrt_mod,
    two_squares_decomposition,
)
from .hypergeometric import (
    HypergeomParams,
    binomial_symbol,
    gauss_sum,
    hypergeometric_series,
    jacobi_sum,
    trivial_indicator,
    two_f_one_phi_eps_phi_exact,
    two_f_one_quadratic_exact,
    two_f_one_special_value,
    zero_indicator,
)
from .scan import SUITE_NAMES, VerificationRecord, run_suite, summarize

__version__ = "0.1.0"
