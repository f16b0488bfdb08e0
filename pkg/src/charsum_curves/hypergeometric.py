"""Jacobi sums, Gauss sums, the character binomial symbol, and the finite-field
hypergeometric series built from them.

Numeric strategy: every single character sum is accumulated as an integer
histogram over powers of the fixed (p-1)-th root of unity and converted to a
complex number exactly once, with compensated summation.  The series
evaluator combines such values in floating point; the three quadratic
specializations that are known to be rational also get integer-only paths
returning exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import fsum, pi
import cmath

from .characters import Character, all_characters, roots_of_unity
from .errors import (
    BadLambdaError,
    ContextMismatchError,
    DegenerateLambdaError,
    ZeroArgumentError,
)
from .field import FieldContext, quadratic_character_value, two_squares_decomposition

_binomial_cache: dict[tuple[int, int, int], complex] = {}
_gauss_cache: dict[tuple[int, int], complex] = {}


def clear_caches() -> None:
    _binomial_cache.clear()
    _gauss_cache.clear()
    two_f_one_quadratic_exact.cache_clear()


def zero_indicator(x: int) -> int:
    """1 if x is zero, else 0."""
    return 1 if x == 0 else 0


def trivial_indicator(chi: Character) -> int:
    """1 if chi is the trivial character, else 0."""
    return 1 if chi.is_trivial else 0


def evaluate_exponent_histogram(counts: list[int], n: int) -> complex:
    """Sum counts[e] * zeta**e for the primitive n-th root of unity zeta."""
    roots = roots_of_unity(n)
    re = fsum(c * roots[e].real for e, c in enumerate(counts) if c)
    im = fsum(c * roots[e].imag for e, c in enumerate(counts) if c)
    return complex(re, im)


def _require_same_field(a: Character, b: Character) -> None:
    if a.ctx.p != b.ctx.p:
        raise ContextMismatchError(f"characters over p={a.ctx.p} and p={b.ctx.p}")


def jacobi_sum(a: Character, b: Character) -> complex:
    """J(A, B) = sum over x in F_p of A(x) B(1-x).

    The x = 0 and x = 1 terms vanish because every character, the trivial one
    included, sends 0 to 0; the rest is collected exactly in an exponent
    histogram before the single conversion to complex.
    """
    _require_same_field(a, b)
    ctx = a.ctx
    p, n = ctx.p, ctx.group_order
    log = ctx.log_table
    ai, bi = a.index, b.index
    counts = [0] * n
    for x in range(2, p):
        counts[(ai * log[x] + bi * log[p + 1 - x]) % n] += 1
    return evaluate_exponent_histogram(counts, n)


def gauss_sum(chi: Character) -> complex:
    """g(chi) = sum over nonzero x of chi(x) exp(2*pi*i*x/p)."""
    ctx = chi.ctx
    key = (ctx.p, chi.index)
    cached = _gauss_cache.get(key)
    if cached is not None:
        return cached
    p, n = ctx.p, ctx.group_order
    zn = roots_of_unity(n)
    log = ctx.log_table
    k = chi.index
    terms = [zn[(k * log[x]) % n] * cmath.exp(2j * pi * x / p) for x in range(1, p)]
    value = complex(fsum(t.real for t in terms), fsum(t.imag for t in terms))
    _gauss_cache[key] = value
    return value


def binomial_symbol(a: Character, b: Character, method: str = "direct") -> complex:
    """The character binomial symbol B(-1)/p * J(A, conj(B)).

    method="direct" evaluates the Jacobi sum from its definition (and caches
    the result); method="gauss" routes through g(A) g(conj B) / g(A conj B),
    valid whenever A != B, and falls back to the direct path when A == B.
    """
    _require_same_field(a, b)
    ctx = a.ctx
    p, n = ctx.p, ctx.group_order
    if method == "gauss":
        diff = (a.index - b.index) % n
        if diff == 0:
            return binomial_symbol(a, b)
        bbar = b.conjugate()
        jac = gauss_sum(a) * gauss_sum(bbar) / gauss_sum(Character(ctx, diff))
        return b.at_minus_one() / p * jac
    if method != "direct":
        raise ValueError(f"unknown binomial symbol method {method!r}")
    key = (p, a.index, b.index)
    cached = _binomial_cache.get(key)
    if cached is None:
        cached = b.at_minus_one() / p * jacobi_sum(a, b.conjugate())
        _binomial_cache[key] = cached
    return cached


@dataclass(frozen=True)
class HypergeomParams:
    """Parameter block for the series: one more upper character than lower."""

    upper: tuple[Character, ...]
    lower: tuple[Character, ...]
    argument: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if len(self.upper) != len(self.lower) + 1:
            raise ValueError(
                f"need exactly one more upper character: got {len(self.upper)} upper, "
                f"{len(self.lower)} lower"
            )
        p = self.upper[0].ctx.p
        for chi in (*self.upper, *self.lower):
            if chi.ctx.p != p:
                raise ContextMismatchError("series parameters over different fields")

    @property
    def ctx(self) -> FieldContext:
        return self.upper[0].ctx


def hypergeometric_series(params: HypergeomParams) -> complex:
    """(n+1)F_n evaluated by the defining sum over all p-1 characters.

    Term k pairs the binomial symbols of the shifted parameters with
    chi_k(argument); the result is scaled by p/(p-1).  Floating point with
    compensated summation; values are bounded by p.
    """
    ctx = params.ctx
    p, n = ctx.p, ctx.group_order
    x = params.argument % p
    if x == 0:
        return 0j
    a0 = params.upper[0]
    tail = tuple(zip(params.upper[1:], params.lower))
    roots = roots_of_unity(n)
    logx = ctx.log_table[x]
    res: list[float] = []
    ims: list[float] = []
    for chi in all_characters(ctx):
        term = binomial_symbol(a0 * chi, chi)
        for ai, bi in tail:
            term *= binomial_symbol(ai * chi, bi * chi)
        term *= roots[(chi.index * logx) % n]
        res.append(term.real)
        ims.append(term.imag)
    return p / (p - 1) * complex(fsum(res), fsum(ims))


@lru_cache(maxsize=1 << 16)
def two_f_one_quadratic_exact(ctx: FieldContext, lam: int) -> Fraction:
    """Exact value of 2F1 with quadratic upper pair and trivial lower at lam.

    Computed with integers only, as phi(-1)/p times the full quadratic trace
    sum of x(x-1)(x-lam).  Undefined at lam in {0, 1}.
    """
    p = ctx.p
    lam %= p
    if lam in (0, 1):
        raise DegenerateLambdaError(f"argument {lam} is degenerate for the exact path")
    trace = 0
    for x in range(2, p):
        trace += quadratic_character_value(ctx, x * (x - 1) % p * (x - lam) % p)
    phi_m1 = quadratic_character_value(ctx, p - 1)
    return Fraction(phi_m1 * trace, p)


def two_f_one_special_value(p: int, lam: int) -> Fraction:
    """Closed form of the quadratic 2F1 at the arguments -1, 1/2, and 2.

    Zero when p = 3 mod 4; otherwise 2x(-1)**((x+y+1)/2)/p from the
    two-squares decomposition p = x**2 + y**2 with x odd.  1/2 means the
    inverse of 2 mod p.  Integer arithmetic only.
    """
    lam %= p
    allowed = {p - 1, (p + 1) // 2, 2 % p}
    if lam not in allowed:
        raise BadLambdaError(f"lambda={lam} mod {p} is not one of -1, 1/2, 2")
    if p % 4 == 3:
        return Fraction(0)
    ts = two_squares_decomposition(p)
    sign = -1 if ((ts.x + ts.y + 1) // 2) % 2 else 1
    return Fraction(2 * ts.x * sign, p)


def two_f_one_phi_eps_phi_exact(ctx: FieldContext, lam: int) -> Fraction:
    """Exact value -(phi(-lam) + phi(-1))/p of the mixed 2F1 specialization.

    This is the evaluation used inside the twisted Edwards count; it agrees
    with the series for lam outside {0, 1}.
    """
    p = ctx.p
    lam %= p
    if lam == 0:
        raise ZeroArgumentError("mixed 2F1 closed form needs a nonzero argument")
    return Fraction(
        -(quadratic_character_value(ctx, -lam) + quadratic_character_value(ctx, p - 1)), p
    )
