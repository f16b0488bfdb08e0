"""Curve models over F_p, point counting, and the Edwards addition law.

Four plane models are supported: Edwards x^2+y^2 = a^2(1+x^2y^2), twisted
Edwards ax^2+y^2 = 1+dx^2y^2, Legendre y^2 = x(x-1)(x-lam), and the Clausen
cubic y^2 = (x-1)(x^2+lam).  Brute counts run in O(p) by solving each model
for a square and reading the quadratic character; formula counts go through
the exact rational hypergeometric specializations.

Counting conventions beyond the affine plane: the two singular points at
infinity of an Edwards model each resolve to two rational points (the model
always has square d = a^4), so Edwards counts add 4; a twisted Edwards model
adds 2 plus the number of roots of d*y^2 = a; the cubic models add the usual
single point at infinity.  These conventions are exactly the ones the count
formulas and the Hasse bound confirm across the verification sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import Character, quadratic_character, trivial_character
from .errors import (
    DegenerateLambdaError,
    ExceptionalAdditionError,
    InvalidModelError,
    NotOnCurveError,
    SingularCurveError,
    UnsupportedModelError,
)
from .field import FieldContext, quadratic_character_value, sqrt_mod
from .hypergeometric import (
    HypergeomParams,
    hypergeometric_series,
    two_f_one_phi_eps_phi_exact,
    two_f_one_quadratic_exact,
)


@dataclass(frozen=True)
class Edwards:
    a: int


@dataclass(frozen=True)
class TwistedEdwards:
    a: int
    d: int


@dataclass(frozen=True)
class Legendre:
    lam: int


@dataclass(frozen=True)
class Clausen:
    lam: int


CurveModel = Edwards | TwistedEdwards | Legendre | Clausen


@dataclass(frozen=True)
class AffinePoint:
    x: int
    y: int


@dataclass(frozen=True)
class CountReport:
    model: CurveModel
    p: int
    method: str
    affine: int
    non_affine: int
    total: int
    hyper_value: Fraction | None = None
    isogeny_partner: CurveModel | None = None


def model_label(model: CurveModel) -> str:
    return {
        Edwards: "edwards",
        TwistedEdwards: "twisted",
        Legendre: "legendre",
        Clausen: "clausen",
    }[type(model)]


def model_params(model: CurveModel) -> dict[str, int]:
    if isinstance(model, Edwards):
        return {"a": model.a}
    if isinstance(model, TwistedEdwards):
        return {"a": model.a, "d": model.d}
    return {"lam": model.lam}


def invariant_violation(model: CurveModel, ctx: FieldContext) -> str | None:
    """The violated nondegeneracy condition, or None when the model is valid."""
    p = ctx.p
    if isinstance(model, Edwards):
        a = model.a % p
        if a == 0 or pow(a, 4, p) == 1:
            return f"a^5 ≡ a (mod {p}) for a={model.a}"
        return None
    if isinstance(model, TwistedEdwards):
        a, d = model.a % p, model.d % p
        if a * d % p * ((a - d) % p) % p == 0:
            return f"a·d·(a−d) ≡ 0 (mod {p}) for a={model.a}, d={model.d}"
        return None
    if isinstance(model, Legendre):
        lam = model.lam % p
        if lam * ((lam - 1) % p) % p == 0:
            return f"λ·(λ−1) ≡ 0 (mod {p}) for λ={model.lam}"
        return None
    lam = model.lam % p
    if lam * ((lam + 1) % p) % p == 0:
        return f"λ·(λ+1) ≡ 0 (mod {p}) for λ={model.lam}"
    return None


def validate_model(model: CurveModel, ctx: FieldContext) -> None:
    violation = invariant_violation(model, ctx)
    if violation is not None:
        raise InvalidModelError(violation)


def is_on_curve(point: AffinePoint, model: CurveModel, ctx: FieldContext) -> bool:
    p = ctx.p
    x, y = point.x % p, point.y % p
    if isinstance(model, Edwards):
        a = model.a % p
        return (x * x + y * y) % p == a * a % p * (1 + x * x % p * (y * y) % p) % p
    if isinstance(model, TwistedEdwards):
        a, d = model.a % p, model.d % p
        return (a * x % p * x + y * y) % p == (1 + d * x % p * x % p * y % p * y) % p
    if isinstance(model, Legendre):
        return y * y % p == x * ((x - 1) % p) % p * ((x - model.lam) % p) % p
    return y * y % p == ((x - 1) % p) * ((x * x + model.lam) % p) % p


def _phi_table(ctx: FieldContext) -> list[int]:
    # quadratic character per residue, from the parity of the discrete log
    phi = [0] * ctx.p
    for m, val in enumerate(ctx.exp_table):
        phi[val] = 1 - 2 * (m & 1)
    return phi


def _non_affine_count(model: CurveModel, ctx: FieldContext) -> int:
    p = ctx.p
    if isinstance(model, Edwards):
        return 4
    if isinstance(model, TwistedEdwards):
        ratio = model.a % p * pow(model.d, p - 2, p) % p
        return 3 + quadratic_character_value(ctx, ratio)
    return 1


def count_points_brute(model: CurveModel, ctx: FieldContext) -> CountReport:
    """Count rational points by an O(p) scan over one coordinate.

    Each abscissa (ordinate for twisted models) contributes 1 + phi(rhs)
    solutions of the solved-for square, or none at all on the excluded lines
    where the solved form degenerates.
    """
    validate_model(model, ctx)
    p = ctx.p
    phi = _phi_table(ctx)
    affine = 0
    if isinstance(model, Edwards):
        aa = model.a * model.a % p
        for x in range(p):
            xx = x * x % p
            denom = (1 - aa * xx) % p
            if denom == 0:
                continue  # a^2 - x^2 = a^2 - a^-2 != 0 there, so no points
            affine += 1 + phi[(aa - xx) * denom % p]
    elif isinstance(model, TwistedEdwards):
        a, d = model.a % p, model.d % p
        for y in range(p):
            yy = y * y % p
            denom = (a - d * yy) % p
            if denom == 0:
                continue  # 1 - y^2 != 0 there since a != d
            affine += 1 + phi[(1 - yy) * denom % p]
    elif isinstance(model, Legendre):
        lam = model.lam % p
        for x in range(p):
            affine += 1 + phi[x * ((x - 1) % p) % p * ((x - lam) % p) % p]
    else:
        lam = model.lam % p
        for x in range(p):
            affine += 1 + phi[((x - 1) % p) * ((x * x + lam) % p) % p]
    non_affine = _non_affine_count(model, ctx)
    return CountReport(
        model=model,
        p=p,
        method="brute",
        affine=affine,
        non_affine=non_affine,
        total=affine + non_affine,
    )


def _as_integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} did not come out an integer: {value}")
    return value.numerator


def count_points_formula(model: CurveModel, ctx: FieldContext) -> CountReport:
    """Count rational points from the exact rational series specializations."""
    validate_model(model, ctx)
    p = ctx.p
    if isinstance(model, Edwards):
        arg = (1 - pow(model.a, 4, p)) % p
        value = two_f_one_quadratic_exact(ctx, arg)
        total = _as_integer(1 + p + p * value, "edwards count")
    elif isinstance(model, TwistedEdwards):
        a, d = model.a % p, model.d % p
        lam = pow(a, p - 2, p) * d % p
        value = two_f_one_quadratic_exact(ctx, lam)
        mixed = two_f_one_phi_eps_phi_exact(ctx, lam)
        phi_neg_a = quadratic_character_value(ctx, -a)
        long_form = 2 + p + quadratic_character_value(ctx, a) + p * phi_neg_a * (value + mixed)
        particular = 2 + p - quadratic_character_value(ctx, d) + p * phi_neg_a * value
        total = _as_integer(particular, "twisted count")
        assert _as_integer(long_form, "twisted count, long form") == total
    elif isinstance(model, Legendre):
        value = two_f_one_quadratic_exact(ctx, model.lam)
        phi_m1 = quadratic_character_value(ctx, p - 1)
        total = _as_integer(1 + p + p * phi_m1 * value, "legendre count")
    else:
        raise UnsupportedModelError(
            "the clausen identity only pins (1+p-N)^2; use count_points_brute"
        )
    non_affine = _non_affine_count(model, ctx)
    return CountReport(
        model=model,
        p=p,
        method="formula",
        affine=total - non_affine,
        non_affine=non_affine,
        total=total,
        hyper_value=value,
    )


def enumerate_affine_points(model: CurveModel, ctx: FieldContext) -> list[AffinePoint]:
    """All affine rational points, via modular square roots per abscissa."""
    validate_model(model, ctx)
    p = ctx.p
    points = []

    def roots_of(rhs: int) -> list[int]:
        rhs %= p
        if rhs == 0:
            return [0]
        if quadratic_character_value(ctx, rhs) != 1:
            return []
        r = sqrt_mod(ctx, rhs)
        return [r, p - r]

    if isinstance(model, Edwards):
        aa = model.a * model.a % p
        for x in range(p):
            xx = x * x % p
            denom = (1 - aa * xx) % p
            if denom == 0:
                continue
            for y in roots_of((aa - xx) * pow(denom, p - 2, p)):
                points.append(AffinePoint(x, y))
    elif isinstance(model, TwistedEdwards):
        a, d = model.a % p, model.d % p
        for y in range(p):
            yy = y * y % p
            denom = (a - d * yy) % p
            if denom == 0:
                continue
            for x in roots_of((1 - yy) * pow(denom, p - 2, p)):
                points.append(AffinePoint(x, y))
    elif isinstance(model, Legendre):
        lam = model.lam % p
        for x in range(p):
            for y in roots_of(x * ((x - 1) % p) % p * ((x - lam) % p)):
                points.append(AffinePoint(x, y))
    else:
        lam = model.lam % p
        for x in range(p):
            for y in roots_of(((x - 1) % p) * ((x * x + lam) % p)):
                points.append(AffinePoint(x, y))
    return points


def edwards_add(
    p1: AffinePoint, p2: AffinePoint, model: Edwards, ctx: FieldContext
) -> AffinePoint:
    """Add two points with the affine Edwards law; (0, a) is the neutral element.

    Refuses the exceptional cases where a denominator 1 +- x1x2y1y2 vanishes
    rather than completing the law at infinity.
    """
    validate_model(model, ctx)
    p = ctx.p
    for pt in (p1, p2):
        if not is_on_curve(pt, model, ctx):
            raise NotOnCurveError(f"({pt.x}, {pt.y}) is not on the curve")
    x1, y1, x2, y2 = p1.x % p, p1.y % p, p2.x % p, p2.y % p
    cross = x1 * x2 % p * y1 % p * y2 % p
    den_x = (1 + cross) % p
    den_y = (1 - cross) % p
    if den_x == 0 or den_y == 0:
        raise ExceptionalAdditionError("addition denominator vanished for this pair")
    inv_a = pow(model.a, p - 2, p)
    x3 = inv_a * ((x1 * y2 + x2 * y1) % p) % p * pow(den_x, p - 2, p) % p
    y3 = inv_a * ((y1 * y2 - x1 * x2) % p) % p * pow(den_y, p - 2, p) % p
    return AffinePoint(x3, y3)


def edwards_neutral(model: Edwards, ctx: FieldContext) -> AffinePoint:
    return AffinePoint(0, model.a % ctx.p)


def edwards_negate(point: AffinePoint, ctx: FieldContext) -> AffinePoint:
    return AffinePoint((-point.x) % ctx.p, point.y % ctx.p)


def isogenous_legendre_partner(model: Edwards, ctx: FieldContext) -> Legendre:
    """The Legendre model with the same rational point count, lam = a^4."""
    validate_model(model, ctx)
    return Legendre(pow(model.a, 4, ctx.p))


def twisted_partner_of_weierstrass(ctx: FieldContext, a: int, b: int) -> TwistedEdwards:
    """Twisted Edwards partner 4a x^2 + y^2 = 1 + 4b x^2 y^2 of y^2 = x(x-a)(x-b)."""
    p = ctx.p
    a %= p
    b %= p
    if a == 0 or b == 0 or a == b:
        raise SingularCurveError(f"y^2 = x(x-a)(x-b) is singular for a={a}, b={b} mod {p}")
    return TwistedEdwards(4 * a % p, 4 * b % p)


def count_weierstrass_points(ctx: FieldContext, a: int, b: int) -> int:
    """Rational points on y^2 = x(x-a)(x-b), affine plus one point at infinity."""
    p = ctx.p
    a %= p
    b %= p
    if a == 0 or b == 0 or a == b:
        raise SingularCurveError(f"y^2 = x(x-a)(x-b) is singular for a={a}, b={b} mod {p}")
    phi = _phi_table(ctx)
    affine = 0
    for x in range(p):
        affine += 1 + phi[x * ((x - a) % p) % p * ((x - b) % p) % p]
    return affine + 1


def within_hasse_bound(total: int, p: int) -> bool:
    """|total - p - 1| <= 2 sqrt(p), checked in integers."""
    return (total - p - 1) ** 2 <= 4 * p


@dataclass(frozen=True)
class ClausenIdentityReport:
    p: int
    lam: int
    count_total: int
    lhs: int
    rhs: complex
    passed: bool


def clausen_identity_check(
    ctx: FieldContext, lam: int, tol: float = 1e-6
) -> ClausenIdentityReport:
    """Check (1+p-N)^2 against p + p^2 phi(lam+1) 3F2(lam/(lam+1)).

    N is the brute count of the Clausen model; the 3F2 value comes from the
    general series evaluator, so this doubles as an end-to-end test of it.
    Passes when the two sides differ by less than tol * p^2.
    """
    p = ctx.p
    lam %= p
    if lam * ((lam + 1) % p) % p == 0:
        raise DegenerateLambdaError(f"λ·(λ+1) ≡ 0 (mod {p}) for λ={lam}")
    report = count_points_brute(Clausen(lam), ctx)
    lhs = (1 + p - report.total) ** 2
    phi = quadratic_character(ctx)
    eps = trivial_character(ctx)
    arg = lam * pow(lam + 1, p - 2, p) % p
    series = hypergeometric_series(
        HypergeomParams(upper=(phi, phi, phi), lower=(eps, eps), argument=arg)
    )
    rhs = p + p * p * quadratic_character_value(ctx, lam + 1) * series
    return ClausenIdentityReport(
        p=p,
        lam=lam,
        count_total=report.total,
        lhs=lhs,
        rhs=rhs,
        passed=abs(lhs - rhs) < tol * p * p,
    )
