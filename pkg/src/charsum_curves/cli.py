"""Command-line front end.

Subcommands: count (point counts, brute and/or formula), hyper (series
evaluation), special-values (closed-form table over a prime range), isogeny
(partner model and count comparison), verify (bulk identity sweeps).
Results go to stdout in table, JSON, or CSV form; diagnostics and scan
summaries go to stderr.  Exit codes: 0 success, 1 verification mismatch,
2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, fields

from .characters import Character, quadratic_character, trivial_character
from .curves import (
    Clausen,
    CountReport,
    CurveModel,
    Edwards,
    Legendre,
    TwistedEdwards,
    count_points_brute,
    count_points_formula,
    count_weierstrass_points,
    isogenous_legendre_partner,
    model_label,
    model_params,
    twisted_partner_of_weierstrass,
)
from .errors import CharsumCurvesError
from .field import build_field_context, primes_in_range
from .hypergeometric import (
    HypergeomParams,
    hypergeometric_series,
    two_f_one_phi_eps_phi_exact,
    two_f_one_quadratic_exact,
    two_f_one_special_value,
)
from .scan import SUITE_NAMES, VerificationRecord, run_suite, summarize

DEFAULT_PRIME_CEILING = 10_000


@dataclass
class RunConfig:
    fmt: str
    ceiling: int
    tolerance: float | None = None
    jobs: int = 1


class CliInputError(Exception):
    """Invalid command-line input; maps to exit code 2."""


def _fraction_str(value) -> str:
    return f"{value.numerator}/{value.denominator}"


def emit_report(records: list[VerificationRecord], fmt: str) -> str:
    """Render verification records as a table, JSON array, or CSV text."""
    names = [f.name for f in fields(VerificationRecord)]
    if fmt == "json":
        return json.dumps([asdict(r) for r in records], indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(names)
        for r in records:
            row = [getattr(r, name) for name in names]
            writer.writerow(["" if v is None else v for v in row])
        return buf.getvalue().rstrip("\n")
    widths = {name: len(name) for name in names}
    cells = []
    for r in records:
        cell = {name: "" if getattr(r, name) is None else str(getattr(r, name)) for name in names}
        cells.append(cell)
        for name in names:
            widths[name] = max(widths[name], len(cell[name]))
    lines = ["  ".join(name.ljust(widths[name]) for name in names)]
    for cell in cells:
        lines.append("  ".join(cell[name].ljust(widths[name]) for name in names))
    return "\n".join(lines)


def _count_report_dict(report: CountReport) -> dict:
    out = {
        "model": model_label(report.model),
        "params": model_params(report.model),
        "p": report.p,
        "method": report.method,
        "affine": report.affine,
        "non_affine": report.non_affine,
        "total": report.total,
        "hyper_value": None if report.hyper_value is None else _fraction_str(report.hyper_value),
    }
    return out


def _render_count(reports: list[CountReport], match: bool | None, fmt: str) -> str:
    if fmt == "json":
        payload = {"reports": [_count_report_dict(r) for r in reports]}
        if match is not None:
            payload["match"] = match
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["model", "p", "method", "affine", "non_affine", "total", "hyper_value"])
        for r in reports:
            writer.writerow(
                [
                    model_label(r.model),
                    r.p,
                    r.method,
                    r.affine,
                    r.non_affine,
                    r.total,
                    "" if r.hyper_value is None else _fraction_str(r.hyper_value),
                ]
            )
        return buf.getvalue().rstrip("\n")
    first = reports[0]
    params = " ".join(f"{k}={v}" for k, v in model_params(first.model).items())
    lines = [f"model: {model_label(first.model)} ({params}) over F_{first.p}"]
    for r in reports:
        extra = "" if r.hyper_value is None else f"  2F1={_fraction_str(r.hyper_value)}"
        lines.append(
            f"{r.method}: affine={r.affine} non_affine={r.non_affine} total={r.total}{extra}"
        )
    if match is not None:
        lines.append(f"match: {match}")
    return "\n".join(lines)


def _build_model(args: argparse.Namespace) -> CurveModel:
    if args.model == "edwards":
        if args.a is None:
            raise CliInputError("edwards model needs --a")
        return Edwards(args.a)
    if args.model == "twisted":
        if args.a is None or args.d is None:
            raise CliInputError("twisted model needs --a and --d")
        return TwistedEdwards(args.a, args.d)
    if args.lam is None:
        raise CliInputError(f"{args.model} model needs --lambda")
    return Legendre(args.lam) if args.model == "legendre" else Clausen(args.lam)


def _check_ceiling(p: int, ceiling: int) -> None:
    if p > ceiling:
        raise CliInputError(
            f"prime bound {p} exceeds the ceiling {ceiling}; "
            "raise it with --unsafe-pmax or CHARSUM_PMAX"
        )


def _cmd_count(args: argparse.Namespace, cfg: RunConfig) -> int:
    _check_ceiling(args.p, cfg.ceiling)
    ctx = build_field_context(args.p)
    model = _build_model(args)
    method = args.method
    if method is None:
        method = "brute" if isinstance(model, Clausen) else "both"
    reports = []
    if method in ("brute", "both"):
        reports.append(count_points_brute(model, ctx))
    if method in ("formula", "both"):
        reports.append(count_points_formula(model, ctx))
    match = reports[0].total == reports[1].total if method == "both" else None
    print(_render_count(reports, match, cfg.fmt))
    return 0 if match is None or match else 1


def _parse_character_list(spec: str, ctx) -> list[Character]:
    out = []
    for token in spec.split(","):
        token = token.strip().lower()
        if token == "eps":
            out.append(trivial_character(ctx))
        elif token == "phi":
            out.append(quadratic_character(ctx))
        else:
            try:
                out.append(Character(ctx, int(token)))
            except ValueError:
                raise CliInputError(f"bad character token {token!r}; use eps, phi, or an integer")
    return out


def _recognized_exact(params: HypergeomParams):
    """Exact rational value for the recognized specializations, if any."""
    ctx = params.ctx
    x = params.argument % ctx.p
    upper = [c.index for c in params.upper]
    lower = [c.index for c in params.lower]
    phi_idx = ctx.group_order // 2
    if len(upper) != 2:
        return None
    from fractions import Fraction

    if x == 0:
        return Fraction(0)
    if upper == [phi_idx, phi_idx] and lower == [0] and x != 1:
        return two_f_one_quadratic_exact(ctx, x)
    if upper == [phi_idx, 0] and lower == [phi_idx] and x != 1:
        return two_f_one_phi_eps_phi_exact(ctx, x)
    return None


def _cmd_hyper(args: argparse.Namespace, cfg: RunConfig) -> int:
    _check_ceiling(args.p, cfg.ceiling)
    ctx = build_field_context(args.p)
    upper = _parse_character_list(args.upper, ctx)
    lower = _parse_character_list(args.lower, ctx) if args.lower else []
    try:
        params = HypergeomParams(upper=tuple(upper), lower=tuple(lower), argument=args.x % args.p)
    except ValueError as exc:
        raise CliInputError(str(exc))
    value = hypergeometric_series(params)
    exact = _recognized_exact(params)
    payload = {
        "p": args.p,
        "upper": [c.index for c in upper],
        "lower": [c.index for c in lower],
        "x": args.x % args.p,
        "re": value.real,
        "im": value.imag,
        "exact": None if exact is None else _fraction_str(exact),
        "abs_diff": None if exact is None else abs(value - complex(exact)),
    }
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(payload.keys())
        writer.writerow(["" if v is None else v for v in payload.values()])
        print(buf.getvalue().rstrip("\n"))
    else:
        lines = [
            f"series over F_{args.p} at x={payload['x']}",
            f"value: {value.real:.12f} {value.imag:+.12f}i",
        ]
        if exact is not None:
            lines.append(f"exact: {_fraction_str(exact)}")
            lines.append(f"abs diff: {payload['abs_diff']:.3e}")
        print("\n".join(lines))
    return 0


def _cmd_special_values(args: argparse.Namespace, cfg: RunConfig) -> int:
    _check_ceiling(args.pmax, cfg.ceiling)
    rows = []
    for p in primes_in_range(max(args.pmin, 3), args.pmax):
        lam = {"-1": p - 1, "1/2": (p + 1) // 2, "2": 2 % p}[args.lam]
        value = two_f_one_special_value(p, lam)
        if p % 4 == 1:
            from .field import two_squares_decomposition

            ts = two_squares_decomposition(p)
            rows.append((p, p % 4, ts.x, ts.y, value))
        else:
            rows.append((p, p % 4, None, None, value))
    if cfg.fmt == "json":
        print(
            json.dumps(
                [
                    {"p": p, "pmod4": m, "x": x, "y": y, "value": _fraction_str(v)}
                    for p, m, x, y, v in rows
                ],
                indent=2,
            )
        )
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["p", "pmod4", "x", "y", "value_num", "value_den"])
        for p, m, x, y, v in rows:
            writer.writerow([p, m, "" if x is None else x, "" if y is None else y,
                             v.numerator, v.denominator])
        print(buf.getvalue().rstrip("\n"))
    else:
        print(f"2F1 special values at λ={args.lam}")
        print("p     mod4  (x, y)      value")
        for p, m, x, y, v in rows:
            xy = "—" if x is None else f"({x}, {y})"
            print(f"{p:<5} {m:<5} {xy:<11} {_fraction_str(v)}")
    return 0


def _cmd_isogeny(args: argparse.Namespace, cfg: RunConfig) -> int:
    _check_ceiling(args.p, cfg.ceiling)
    ctx = build_field_context(args.p)
    if args.model == "edwards":
        if args.a is None:
            raise CliInputError("edwards source needs --a")
        source = Edwards(args.a)
        partner = isogenous_legendre_partner(source, ctx)
        source_total = count_points_brute(source, ctx).total
        partner_total = count_points_brute(partner, ctx).total
        source_desc = {"model": "edwards", "params": {"a": args.a}}
    else:
        if args.a is None or args.b is None:
            raise CliInputError("weierstrass source needs --a and --b")
        partner = twisted_partner_of_weierstrass(ctx, args.a, args.b)
        source_total = count_weierstrass_points(ctx, args.a, args.b)
        partner_total = count_points_brute(partner, ctx).total
        source_desc = {"model": "weierstrass", "params": {"a": args.a, "b": args.b}}
    match = source_total == partner_total
    payload = {
        "p": args.p,
        "source": source_desc,
        "partner": {"model": model_label(partner), "params": model_params(partner)},
        "source_total": source_total,
        "partner_total": partner_total,
        "match": match,
    }
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["p", "source", "partner", "source_total", "partner_total", "match"])
        writer.writerow(
            [
                args.p,
                f"{source_desc['model']} {source_desc['params']}",
                f"{model_label(partner)} {model_params(partner)}",
                source_total,
                partner_total,
                match,
            ]
        )
        print(buf.getvalue().rstrip("\n"))
    else:
        pp = " ".join(f"{k}={v}" for k, v in model_params(partner).items())
        sp = " ".join(f"{k}={v}" for k, v in source_desc["params"].items())
        print(f"source:  {source_desc['model']} ({sp}) over F_{args.p}: total={source_total}")
        print(f"partner: {model_label(partner)} ({pp}): total={partner_total}")
        print(f"match: {match}")
    return 0 if match else 1


def _cmd_verify(args: argparse.Namespace, cfg: RunConfig) -> int:
    _check_ceiling(args.pmax, cfg.ceiling)
    if cfg.tolerance is not None and cfg.tolerance <= 0:
        raise CliInputError("tolerance must be positive")
    records = run_suite(
        args.suite, pmax=args.pmax, pmin=args.pmin, tol=cfg.tolerance, jobs=cfg.jobs
    )
    print(emit_report(records, cfg.fmt))
    checked, mismatches = summarize(records)
    print(f"checked={checked} mismatches={mismatches}", file=sys.stderr)
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charsum-curves",
        description="Point counts on Edwards-family curve models via finite-field "
        "hypergeometric character sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--unsafe-pmax", type=int, default=None,
                       help="raise the prime ceiling for this invocation")

    count = sub.add_parser("count", help="count rational points on one curve model")
    count.add_argument("--model", choices=("edwards", "twisted", "legendre", "clausen"),
                       required=True)
    count.add_argument("--p", type=int, required=True)
    count.add_argument("--a", type=int)
    count.add_argument("--d", type=int)
    count.add_argument("--lambda", dest="lam", type=int)
    count.add_argument("--method", choices=("brute", "formula", "both"), default=None)
    add_common(count)

    hyper = sub.add_parser("hyper", help="evaluate the hypergeometric series")
    hyper.add_argument("--p", type=int, required=True)
    hyper.add_argument("--upper", required=True, help="comma list: eps, phi, or indices")
    hyper.add_argument("--lower", default="", help="comma list: eps, phi, or indices")
    hyper.add_argument("--x", type=int, required=True)
    add_common(hyper)

    special = sub.add_parser("special-values", help="closed-form 2F1 values over a prime range")
    special.add_argument("--lambda", dest="lam", choices=("-1", "1/2", "2"), required=True)
    special.add_argument("--pmin", type=int, default=5)
    special.add_argument("--pmax", type=int, required=True)
    add_common(special)

    isogeny = sub.add_parser("isogeny", help="partner model with matching point count")
    isogeny.add_argument("--model", choices=("edwards", "weierstrass"), required=True)
    isogeny.add_argument("--p", type=int, required=True)
    isogeny.add_argument("--a", type=int)
    isogeny.add_argument("--b", type=int)
    add_common(isogeny)

    verify = sub.add_parser("verify", help="run a bulk verification sweep")
    verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify.add_argument("--pmin", type=int, default=None)
    verify.add_argument("--pmax", type=int, required=True)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--tolerance", type=float, default=None)
    add_common(verify)

    return parser


_HANDLERS = {
    "count": _cmd_count,
    "hyper": _cmd_hyper,
    "special-values": _cmd_special_values,
    "isogeny": _cmd_isogeny,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ceiling = args.unsafe_pmax
    if ceiling is None:
        ceiling = int(os.environ.get("CHARSUM_PMAX", DEFAULT_PRIME_CEILING))
    cfg = RunConfig(
        fmt=args.format,
        ceiling=ceiling,
        tolerance=getattr(args, "tolerance", None),
        jobs=getattr(args, "jobs", 1),
    )
    try:
        return _HANDLERS[args.command](args, cfg)
    except (CliInputError, CharsumCurvesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
