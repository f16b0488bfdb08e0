"""Bulk verification sweeps over prime ranges.

Each suite exhaustively re-derives one family of identities at desk scale:
count formulas against brute enumeration, isogeny partner counts, special
values against trace sums, the binomial-symbol lemmas, and the Clausen
square identity.  Results come back as flat records suitable for table,
JSON, or CSV rendering; a scan passes when no record mismatches.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

from .characters import Character, all_characters, roots_of_unity
from .curves import (
    Edwards,
    Legendre,
    TwistedEdwards,
    clausen_identity_check,
    count_points_brute,
    count_points_formula,
    count_weierstrass_points,
    invariant_violation,
    isogenous_legendre_partner,
    twisted_partner_of_weierstrass,
    within_hasse_bound,
)
from .errors import NoRepresentationError
from .field import FieldContext, build_field_context, primes_in_range
from .hypergeometric import (
    binomial_symbol,
    evaluate_exponent_histogram,
    two_f_one_quadratic_exact,
    two_f_one_special_value,
    zero_indicator,
)

SUITE_NAMES = ("thm1", "thm2", "cor-iso", "prop1", "lemmas", "clausen", "all")

_DEFAULT_PMIN = {
    "thm1": 7,
    "thm2": 3,
    "cor-iso": 3,
    "prop1": 5,
    "lemmas": 3,
    "clausen": 3,
    "all": 3,
}

_DEFAULT_TOL = {"lemmas": 1e-8, "clausen": 1e-6}


@dataclass
class VerificationRecord:
    p: int
    params: str
    brute_total: int | None
    formula_total: int | None
    match: bool
    hyper_value: str


def summarize(records: list[VerificationRecord]) -> tuple[int, int]:
    """(checked, mismatches) over a record list."""
    return len(records), sum(1 for r in records if not r.match)


def _fraction_str(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def _valid_edwards_coefficients(ctx: FieldContext) -> list[int]:
    return [a for a in range(1, ctx.p) if invariant_violation(Edwards(a), ctx) is None]


def _thm1_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    for a in _valid_edwards_coefficients(ctx):
        brute = count_points_brute(Edwards(a), ctx)
        formula = count_points_formula(Edwards(a), ctx)
        ok = brute.total == formula.total and within_hasse_bound(brute.total, p)
        records.append(
            VerificationRecord(
                p=p,
                params=f"edwards a={a}",
                brute_total=brute.total,
                formula_total=formula.total,
                match=ok,
                hyper_value=_fraction_str(formula.hyper_value),
            )
        )
    return records


def _thm2_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    for a in range(1, p):
        for d in range(1, p):
            if a == d:
                continue
            model = TwistedEdwards(a, d)
            brute = count_points_brute(model, ctx)
            formula = count_points_formula(model, ctx)  # checks both displayed forms
            ok = brute.total == formula.total and within_hasse_bound(brute.total, p)
            records.append(
                VerificationRecord(
                    p=p,
                    params=f"twisted a={a} d={d}",
                    brute_total=brute.total,
                    formula_total=formula.total,
                    match=ok,
                    hyper_value=_fraction_str(formula.hyper_value),
                )
            )
    return records


def _coriso_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    for a in _valid_edwards_coefficients(ctx):
        partner = isogenous_legendre_partner(Edwards(a), ctx)
        edwards_total = count_points_brute(Edwards(a), ctx).total
        legendre_total = count_points_brute(partner, ctx).total
        ok = (
            edwards_total == legendre_total
            and within_hasse_bound(edwards_total, p)
            and within_hasse_bound(legendre_total, p)
        )
        records.append(
            VerificationRecord(
                p=p,
                params=f"edwards a={a} | legendre λ={partner.lam}",
                brute_total=edwards_total,
                formula_total=legendre_total,
                match=ok,
                hyper_value="",
            )
        )
    records.extend(_weierstrass_partner_for_prime(p, tol))
    return records


def _weierstrass_partner_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    for a in range(1, p):
        for b in range(1, p):
            if a == b:
                continue
            cubic_total = count_weierstrass_points(ctx, a, b)
            partner = twisted_partner_of_weierstrass(ctx, a, b)
            partner_total = count_points_brute(partner, ctx).total
            ok = cubic_total == partner_total and within_hasse_bound(cubic_total, p)
            records.append(
                VerificationRecord(
                    p=p,
                    params=f"weierstrass a={a} b={b} | twisted a={partner.a} d={partner.d}",
                    brute_total=cubic_total,
                    formula_total=partner_total,
                    match=ok,
                    hyper_value="",
                )
            )
    return records


_SPECIAL_LAMBDA_LABELS = ("-1", "1/2", "2")


def _prop1_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    seen = set()
    for label in _SPECIAL_LAMBDA_LABELS:
        lam = {"-1": p - 1, "1/2": (p + 1) // 2, "2": 2 % p}[label]
        if lam in seen:
            continue
        seen.add(lam)
        try:
            closed = two_f_one_special_value(p, lam)
        except NoRepresentationError:
            closed = None
        trace = two_f_one_quadratic_exact(ctx, lam)
        ok = closed == trace
        records.append(
            VerificationRecord(
                p=p,
                params=f"λ={label} ({lam} mod {p})" if ok else
                f"λ={label} ({lam} mod {p}) trace={trace}",
                brute_total=None,
                formula_total=None,
                match=ok,
                hyper_value=_fraction_str(closed) if closed is not None else "",
            )
        )
    return records


def _clausen_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    ctx = build_field_context(p)
    records = []
    for lam in range(1, p):
        if (lam + 1) % p == 0:
            continue
        check = clausen_identity_check(ctx, lam, tol=tol)
        records.append(
            VerificationRecord(
                p=p,
                params=f"clausen λ={lam} lhs={check.lhs} rhs={check.rhs.real:.8f}",
                brute_total=check.count_total,
                formula_total=None,
                match=check.passed,
                hyper_value="",
            )
        )
    return records


def _row_transform(row: list[complex], logx: int, n: int, roots) -> complex:
    """sum over k of row[k] * zeta**(k*logx), exponent stepped incrementally."""
    e = 0
    tre = 0.0
    tim = 0.0
    for z in row:
        r = roots[e]
        tre += z.real * r.real - z.imag * r.imag
        tim += z.real * r.imag + z.imag * r.real
        e += logx
        if e >= n:
            e -= n
    return complex(tre, tim)


def _lemmas_for_prime(p: int, tol: float) -> list[VerificationRecord]:
    """One record per identity family, carrying the worst deviation seen."""
    ctx = build_field_context(p)
    n = p - 1
    chars = all_characters(ctx)
    eps = chars[0]
    phi = chars[n // 2]
    roots = roots_of_unity(n)
    log = ctx.log_table

    def chival(k: int, x: int) -> complex:
        x %= p
        return 0j if x == 0 else roots[(k * log[x]) % n]

    deviations: dict[str, float] = {}

    def note(name: str, err: float) -> None:
        if err > deviations.get(name, 0.0):
            deviations[name] = err

    scale = p / (p - 1)
    for a_char in chars:
        row_1a = [binomial_symbol(a_char, chi) for chi in chars]
        row_1b = [binomial_symbol(a_char * chi, chi) for chi in chars]
        ai = a_char.index
        for x in range(p):
            if x == 0:
                rhs_a = rhs_b = 1 + 0j
            else:
                rhs_a = scale * _row_transform(row_1a, log[x], n, roots)
                rhs_b = scale * _row_transform(row_1b, log[x], n, roots)
            note("1a", abs(chival(ai, 1 + x) - rhs_a))
            note("1b", abs(chival(-ai % n, 1 - x) - rhs_b))

    for a_char in chars:
        for b_char in chars:
            lhs = binomial_symbol(a_char, b_char)
            note("1c", abs(lhs - binomial_symbol(a_char, a_char * b_char.conjugate())))
            note(
                "1d",
                abs(
                    lhs
                    - binomial_symbol(b_char * a_char.conjugate(), b_char)
                    * b_char.at_minus_one()
                ),
            )
        expected = -1 / p + (p - 1) / p * (1 if a_char.is_trivial else 0)
        note("1e", abs(binomial_symbol(a_char, eps) - expected))
        note("1e", abs(binomial_symbol(a_char, a_char) - expected))

    skipped_1f = 0
    for b_char in chars:
        denom = binomial_symbol(phi, phi * b_char)
        if abs(denom) < 1e-12:
            skipped_1f += len(chars)
            continue
        for chi in chars:
            lhs = binomial_symbol(b_char * b_char * chi * chi, chi)
            rhs = (
                binomial_symbol(phi * b_char * chi, chi)
                * binomial_symbol(b_char * chi, b_char * b_char * chi)
                / denom
                * chival((b_char * chi).index, 4)
            )
            note("1f", abs(lhs - rhs))

    for a_char in chars:
        lhs = binomial_symbol(a_char * a_char, a_char)
        if a_char.is_trivial:
            note("2a", abs(lhs - (p - 2) / p))
        else:
            note(
                "2a",
                abs(lhs - binomial_symbol(phi * a_char, a_char) * chival(a_char.index, 4)),
            )

    for a_char in chars:
        abar = a_char.conjugate()
        sym = binomial_symbol(abar * abar, abar)
        sym_phi = binomial_symbol(phi * abar, abar)
        for a in range(1, p):
            aa = a * a % p
            counts = [0] * n
            for x in range(p):
                v = (aa - x * x) % p
                if v:
                    counts[(a_char.index * log[v]) % n] += 1
            lhs = evaluate_exponent_histogram(counts, n)
            note("2b", abs(lhs - p * chival(a_char.index, 4 * aa) * sym))
            if a_char.is_trivial:
                note("2b", abs(lhs - (p - 2)))
            else:
                note("2b", abs(lhs - p * chival(a_char.index, aa) * sym_phi))

    phi_m1 = phi.at_minus_one()
    for chi in chars:
        counts = [0] * n
        for x in range(1, p):
            u = x * x % p
            v = (1 - u) % p
            if v == 0:
                continue
            sign = 1 if log[v] % 2 == 0 else -1
            counts[(chi.index * log[u]) % n] += sign
        lhs = evaluate_exponent_histogram(counts, n)
        rhs = p * phi_m1 * (
            binomial_symbol(phi * chi, chi) + binomial_symbol(chi, phi * chi)
        )
        note("3", abs(lhs - rhs))

    records = []
    for name in ("1a", "1b", "1c", "1d", "1e", "1f", "2a", "2b", "3"):
        err = deviations.get(name, 0.0)
        extra = f" skipped={skipped_1f}" if name == "1f" else ""
        records.append(
            VerificationRecord(
                p=p,
                params=f"lemma={name} max_err={err:.3e}{extra}",
                brute_total=None,
                formula_total=None,
                match=err <= tol,
                hyper_value="",
            )
        )
    return records


_SUITE_WORKERS = {
    "thm1": _thm1_for_prime,
    "thm2": _thm2_for_prime,
    "cor-iso": _coriso_for_prime,
    "prop1": _prop1_for_prime,
    "lemmas": _lemmas_for_prime,
    "clausen": _clausen_for_prime,
}


def _records_for_prime(suite: str, p: int, tol: float | None) -> list[VerificationRecord]:
    if suite == "all":
        out = []
        for name, worker in _SUITE_WORKERS.items():
            if p >= _DEFAULT_PMIN[name]:
                out.extend(worker(p, tol if tol is not None else _DEFAULT_TOL.get(name, 1e-8)))
        return out
    worker = _SUITE_WORKERS[suite]
    return worker(p, tol if tol is not None else _DEFAULT_TOL.get(suite, 1e-8))


def run_suite(
    suite: str,
    pmax: int,
    pmin: int | None = None,
    tol: float | None = None,
    jobs: int = 1,
) -> list[VerificationRecord]:
    """Run one verification suite over all odd primes in [pmin, pmax].

    With jobs > 1 the primes are farmed out to a process pool; records are
    merged back in ascending-p order either way.
    """
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if pmin is None:
        pmin = _DEFAULT_PMIN[suite]
    primes = [p for p in primes_in_range(max(pmin, 3), pmax)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_records_for_prime, repeat(suite), primes, repeat(tol)))
    else:
        chunks = [_records_for_prime(suite, p, tol) for p in primes]
    return [record for chunk in chunks for record in chunk]
