"""Command-line surface: compute, decompose and verify Hilbert series.

Subcommands: hilbert, parse, porb, dedekind, invmod, k3, fano3, cy3,
verify, batch.  Every command takes --json for machine-readable output and
--series N to print the first N expanded coefficients of its main series.

Exit codes: 0 success; 1 a mathematical check failed (a structured JSON
diagnostic naming the check and the offending residual is printed);
2 malformed input.

JSON wire format: a Laurent polynomial is a map {"exponent": "num/den"};
a rational function is {"num": <poly>, "den": [a1, a2, ...]} with the
denominator the multiset of (1 - t^a) factors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .cy3 import CurveStratum, cy3_ice_parts, cy3_rr_fit, cy3_rr_parts
from .dedekind import OrbifoldType, delta, sigma
from .exactpoly import (
    DenomSpec,
    InputError,
    LaurentPoly,
    MathCheckError,
    RationalFn,
    SeriesExpansionError,
    expand,
    is_gorenstein_symmetric,
)
from .hilbert import (
    VarietyInput,
    degree_from_decomposition,
    fano3_series,
    hilbert_ci,
    k3_series,
    parse_main,
    variety_series,
)
from .icecream import p_orb, p_orb_general
from .invmod import NotCoprimeError, build_modulus, inv_mod

__all__ = ["run", "main", "render", "parse_basket", "poly_to_json", "poly_from_json",
           "fn_to_json", "fn_from_json"]

_BASKET_ENTRY_RE = re.compile(r"^\s*(?:(\d+)\s*[xX*]\s*)?(1\s*/\s*\d+\s*\([^)]*\))\s*$")


class _BatchExit(Exception):
    """Propagates the worst job exit code out of batch mode."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def parse_basket(text: str) -> tuple[tuple[OrbifoldType, int], ...]:
    """Parse ``[<mult>x]1/<r>(<a1>,...,<an>)`` entries separated by ``;``."""
    out = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _BASKET_ENTRY_RE.match(chunk)
        if not m:
            raise InputError(f"cannot parse basket entry: {chunk!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        out.append((OrbifoldType.parse(m.group(2)), mult))
    if not out:
        raise InputError(f"empty basket: {text!r}")
    return tuple(out)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected a comma-separated integer list, got {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"expected a rational p/q, got {text!r}") from None


# -- JSON wire format ---------------------------------------------------


def poly_to_json(p: LaurentPoly) -> dict[str, str]:
    return {str(e): str(c) for e, c in p.items()}


def poly_from_json(d: dict[str, str]) -> LaurentPoly:
    try:
        return LaurentPoly({int(e): Fraction(c) for e, c in d.items()})
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad polynomial JSON: {exc}") from None


def fn_to_json(f: RationalFn) -> dict[str, Any]:
    return {"num": poly_to_json(f.num), "den": list(f.den.factors)}


def fn_from_json(d: dict[str, Any]) -> RationalFn:
    try:
        return RationalFn(poly_from_json(d["num"]), DenomSpec(d["den"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad rational-function JSON: {exc}") from None


def render(result: Any, fmt: str = "text") -> str:
    """Deterministic rendering: polynomials ascending, rationals as p/q."""
    if fmt == "json":
        return json.dumps(result, indent=2, default=str)
    if isinstance(result, (LaurentPoly, RationalFn)):
        return str(result)
    if isinstance(result, dict):
        return "\n".join(f"{k} = {v}" for k, v in result.items())
    return str(result)


def _series_strs(fn: RationalFn, n_coeffs: int) -> list[str]:
    w = expand(fn, max(n_coeffs - 1, 0))
    return [str(c) for _, c in w]


def _emit(payload: dict[str, Any], text_lines: list[str], args) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, default=str))
    else:
        for line in text_lines:
            print(line)


def _with_series(payload: dict, lines: list[str], fn: RationalFn, args) -> None:
    if args.series is not None:
        coeffs = _series_strs(fn, args.series)
        payload["series"] = coeffs
        lines.append("series: " + ", ".join(coeffs))


# -- subcommand implementations ----------------------------------------


def _cmd_hilbert(args) -> dict:
    P, k, n = hilbert_ci(_int_list(args.weights), _int_list(args.degrees) if args.degrees else ())
    payload = {"fn": fn_to_json(P), "k": k, "n": n}
    lines = [f"P = {P}", f"k = {k}", f"n = {n}"]
    _with_series(payload, lines, P, args)
    _emit(payload, lines, args)
    return payload


def _variety_series(args) -> tuple[RationalFn, int, int]:
    weights = _int_list(args.weights)
    degrees = _int_list(args.degrees) if args.degrees else ()
    if args.numerator:
        num = LaurentPoly.parse(args.numerator)
        P = RationalFn(num, weights)
        if args.k is None:
            raise InputError("--k is required with an explicit --numerator")
        k = args.k
        n = args.n if args.n is not None else len(weights) - 1 - len(degrees)
    else:
        record = VarietyInput(weights, degrees, k_override=args.k)
        P, k, n = variety_series(record)
        if args.n is not None:
            n = args.n
    return P, k, n


def _decomposition_payload(dec, P) -> dict:
    c = dec.c
    init = dec.initial_numerator
    coeffs = [] if init.is_zero else [int(init.coeff(i)) for i in range(c + 1)]
    return {
        "k": dec.k,
        "n": dec.n,
        "c": c,
        "initial": fn_to_json(dec.initial),
        "initial_numerator_coeffs": coeffs,
        "parts": [
            {
                "type": part.source.label(),
                "multiplicity": mult,
                "numerator": poly_to_json(part.numerator),
                "fn": fn_to_json(part.fn),
                "numerator_degree": part.numerator_degree,
            }
            for part, mult in dec.orbifold_parts
        ],
        "degree": str(degree_from_decomposition(dec)),
        "sum_matches_input": dec.total() == P,
    }


def _cmd_parse(args) -> dict:
    P, k, n = _variety_series(args)
    basket = parse_basket(args.basket) if args.basket else ()
    irregularity = LaurentPoly.parse(args.irregularity) if args.irregularity else None
    dec = parse_main(P, n, k, basket, irregularity)
    payload = _decomposition_payload(dec, P)
    lines = [
        f"P = {P}",
        f"k = {k}, n = {n}, c = {dec.c}",
        f"initial = {dec.initial}",
    ]
    for part, mult in dec.orbifold_parts:
        lines.append(f"P_orb({part.source.label()}, {k}) x{mult} = {part.fn}")
    lines.append(f"degree D^n = {payload['degree']}")
    _with_series(payload, lines, P, args)
    _emit(payload, lines, args)
    return payload


def _cmd_porb(args) -> dict:
    q = OrbifoldType(args.r, _int_list(args.a))
    n = args.n if args.n is not None else q.n
    part = p_orb_general(q, args.k, n) if (args.general or not q.is_isolated) else p_orb(q, args.k, n)
    payload = {
        "type": q.label(),
        "k": args.k,
        "numerator": poly_to_json(part.numerator),
        "fn": fn_to_json(part.fn),
        "numerator_degree": part.numerator_degree,
    }
    lines = [f"P_orb({q.label()}, {args.k}) = {part.fn}",
             f"numerator degree = {part.numerator_degree}"]
    _with_series(payload, lines, part.fn, args)
    _emit(payload, lines, args)
    return payload


def _cmd_dedekind(args) -> dict:
    q = OrbifoldType(args.r, _int_list(args.a))
    sg = sigma(q)
    d = delta(q)
    periodic = RationalFn(d.poly, (q.r,))
    payload = {
        "type": q.label(),
        "sigma": [str(v) for v in sg.values],
        "delta": poly_to_json(d.poly),
    }
    lines = [
        f"sigma({q.label()}) = ({', '.join(str(v) for v in sg.values)})",
        f"Delta = {d.poly}",
    ]
    _with_series(payload, lines, periodic, args)
    _emit(payload, lines, args)
    return payload


def _cmd_invmod(args) -> dict:
    if args.a_poly or args.f_poly:
        if not (args.a_poly and args.f_poly and args.period):
            raise InputError("--a-poly, --f-poly and --period must be given together")
        A = LaurentPoly.parse(args.a_poly)
        F = LaurentPoly.parse(args.f_poly)
        r = args.period
        B = inv_mod(A, F, args.gamma, r)
        payload = {"A": poly_to_json(A), "F": poly_to_json(F), "gamma": args.gamma,
                   "inverse": poly_to_json(B)}
        lines = [f"InvMod({A}, {F}, {args.gamma}) = {B}"]
    else:
        if not (args.r and args.a):
            raise InputError("give either --r/--a or --a-poly/--f-poly/--period")
        md = build_modulus(args.r, _int_list(args.a))
        B = inv_mod(md.A, md.F, args.gamma, md.r) if md.d > 0 else LaurentPoly()
        payload = {
            "r": md.r,
            "A": poly_to_json(md.A),
            "h": poly_to_json(md.h),
            "F": poly_to_json(md.F),
            "d": md.d,
            "gamma": args.gamma,
            "inverse": poly_to_json(B),
        }
        lines = [f"A = {md.A}", f"h = {md.h}", f"F = {md.F}", f"d = {md.d}",
                 f"InvMod(A, F, {args.gamma}) = {B}"]
    if args.series is not None and not B.is_zero:
        # window coefficients of the inverse, lowest exponent first
        coeffs = [str(B.coeff(e)) for e in range(B.valuation, B.valuation + args.series)]
        payload["window_start"] = B.valuation
        payload["series"] = coeffs
        lines.append(f"coeffs from t^{B.valuation}: " + ", ".join(coeffs))
    _emit(payload, lines, args)
    return payload


def _transverse_pairs(basket, n_expected: int):
    pairs = []
    for q, mult in basket:
        if n_expected == 2:
            if q.n != 2 or (q.a_list[0] + q.a_list[1]) % q.r != 0:
                raise InputError(f"K3 basket entry {q.label()} must be of shape 1/r(a,r-a)")
            pairs.extend([(q.r, q.a_list[0])] * mult)
        else:
            if q.n != 3 or q.a_list[0] != 1 or (q.a_list[1] + q.a_list[2]) % q.r != 0:
                raise InputError(f"Fano basket entry {q.label()} must be of shape 1/r(1,a,r-a)")
            pairs.extend([(q.r, q.a_list[1])] * mult)
    return pairs


def _cmd_k3(args) -> dict:
    basket = parse_basket(args.basket) if args.basket else ()
    series, dsq, dec = k3_series(args.genus, _transverse_pairs(basket, 2))
    payload = {"genus": args.genus, "D2": str(dsq), "fn": fn_to_json(series)}
    payload.update(_decomposition_payload(dec, series))
    lines = [f"P = {series}", f"D^2 = {dsq}", f"initial = {dec.initial}"]
    for part, mult in dec.orbifold_parts:
        lines.append(f"P_orb({part.source.label()}, 0) x{mult} = {part.fn}")
    _with_series(payload, lines, series, args)
    _emit(payload, lines, args)
    return payload


def _cmd_fano3(args) -> dict:
    basket = parse_basket(args.basket) if args.basket else ()
    series, mk3, dec = fano3_series(args.genus, _transverse_pairs(basket, 3))
    payload = {"genus": args.genus, "minus_K3": str(mk3), "fn": fn_to_json(series)}
    payload.update(_decomposition_payload(dec, series))
    lines = [f"P = {series}", f"-K^3 = {mk3}", f"initial = {dec.initial}"]
    for part, mult in dec.orbifold_parts:
        lines.append(f"P_orb({part.source.label()}, -1) x{mult} = {part.fn}")
    _with_series(payload, lines, series, args)
    _emit(payload, lines, args)
    return payload


def _parse_curves(text: str, with_data: bool) -> list[CurveStratum]:
    out = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        fields = [f.strip() for f in chunk.split(",")]
        if with_data:
            if len(fields) not in (3, 4):
                raise InputError(
                    f"curve entry {chunk!r} must be s,a,DC[,prefactor] in rr mode"
                )
            pref = _fraction(fields[3]) if len(fields) == 4 else Fraction(0)
            out.append(CurveStratum(int(fields[0]), int(fields[1]), _fraction(fields[2]), pref))
        else:
            if len(fields) != 2:
                raise InputError(f"curve entry {chunk!r} must be s,a")
            out.append(CurveStratum(int(fields[0]), int(fields[1])))
    return out


def _cmd_cy3(args) -> dict:
    P, k, n = _variety_series(args)
    if (k, n) != (0, 3):
        raise InputError(f"cy3 expects a Calabi-Yau 3-fold (k=0, n=3), got k={k}, n={n}")
    points = parse_basket(args.points) if args.points else ()
    if args.mode == "ice":
        curves = _parse_curves(args.curves, with_data=False) if args.curves else []
        ice = cy3_ice_parts(P, points, curves)
        payload = {
            "mode": "ice",
            "initial": fn_to_json(ice.initial),
            "points": [
                {"type": part.source.label(), "multiplicity": mult,
                 "fn": fn_to_json(part.fn)}
                for part, mult in ice.point_parts
            ],
            "curves": [
                {"s": cp.stratum.s, "a": cp.stratum.a, "delta": cp.delta_c,
                 "A": fn_to_json(cp.a_part), "B_numerator": poly_to_json(cp.b_numerator)}
                for cp in ice.curve_parts
            ],
            "sum_matches_input": ice.total() == P,
        }
        lines = [f"P = {P}", f"P_I = {ice.initial}"]
        for part, mult in ice.point_parts:
            lines.append(f"P_orb({part.source.label()}, 0) x{mult} = {part.fn}")
        for cp in ice.curve_parts:
            lines.append(f"curve 1/{cp.stratum.s}({cp.stratum.a},{cp.stratum.s - cp.stratum.a}): "
                         f"delta = {cp.delta_c}, A = {cp.a_part}, B = {cp.b_part}")
    else:
        curves = _parse_curves(args.curves, with_data=True) if args.curves else []
        if (args.dc2 is None) != (args.d3 is None):
            raise InputError("--dc2 and --d3 must be given together (or both omitted)")
        if args.dc2 is not None:
            parts = cy3_rr_parts(_fraction(args.dc2), _fraction(args.d3), points, curves)
        else:
            parts = cy3_rr_fit(P, points, curves)
        ok = parts.total() == P
        if not ok:
            raise MathCheckError(
                "Riemann-Roch parts do not sum to the Hilbert series",
                check="reassembly",
                residual=(P - parts.total()).simplify(),
            )
        payload = {
            "mode": "rr",
            "Dc2": str(parts.dc2),
            "D3": str(parts.d3),
            "I": fn_to_json(parts.part_i),
            "II": [{"type": q.label(), "multiplicity": m, "fn": fn_to_json(fn)}
                   for q, m, fn in parts.part_ii],
            "III": [{"s": c.s, "a": c.a, "DC": str(c.dc), "fn": fn_to_json(fn)}
                    for c, fn in parts.part_iii],
            "IV": [{"s": c.s, "a": c.a, "prefactor": str(c.iv_prefactor),
                    "fn": fn_to_json(fn)} for c, fn in parts.part_iv],
            "sum_matches_input": ok,
        }
        lines = [f"P = {P}", f"Dc2 = {parts.dc2}, D3 = {parts.d3}",
                 f"I = {parts.part_i}"]
        for q, m, fn in parts.part_ii:
            lines.append(f"II({q.label()}) x{m} = {fn}")
        for c, fn in parts.part_iii:
            lines.append(f"III(1/{c.s}) = {fn}")
        for c, fn in parts.part_iv:
            lines.append(f"IV(1/{c.s}) = {fn}")
    _with_series(payload, lines, P, args)
    _emit(payload, lines, args)
    return payload


def _cmd_verify(args) -> dict:
    P, k, n = _variety_series(args)
    basket = parse_basket(args.basket) if args.basket else ()
    irregularity = LaurentPoly.parse(args.irregularity) if args.irregularity else None
    checks: list[dict[str, Any]] = []

    ok_sym = is_gorenstein_symmetric(P, k, n)
    checks.append({"name": "gorenstein_symmetry", "ok": ok_sym})
    dec = None
    if ok_sym:
        try:
            dec = parse_main(P, n, k, basket, irregularity)
            checks.append({"name": "parse", "ok": True})
        except MathCheckError as exc:
            checks.append({"name": "parse", "ok": False, "check": exc.check,
                           "detail": str(exc)})
    payload: dict[str, Any] = {"k": k, "n": n, "checks": checks}
    lines = []
    for ch in checks:
        lines.append(f"{ch['name']}: {'ok' if ch['ok'] else 'FAILED'}"
                     + (f" ({ch.get('detail')})" if not ch["ok"] and ch.get("detail") else ""))
    if dec is not None:
        payload.update(_decomposition_payload(dec, P))
        lines.append(f"initial = {dec.initial}")
        lines.append(f"degree D^n = {payload['degree']}")
    _with_series(payload, lines, P, args)
    _emit(payload, lines, args)
    if not all(ch["ok"] for ch in checks):
        raise MathCheckError("verification failed", check="verify")
    return payload


def _cmd_batch(args) -> dict:
    try:
        with open(args.file, encoding="utf-8") as fh:
            jobs = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read batch file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"batch file is not valid JSON: {exc}") from None
    if not isinstance(jobs, list):
        raise InputError("batch file must contain a JSON array of job specs")
    results = []
    worst = 0
    for i, job in enumerate(jobs):
        if not isinstance(job, dict) or "command" not in job:
            raise InputError(f"job {i} must be an object with a 'command' field")
        argv = [str(job["command"])]
        payload = job.get("payload", {})
        if not isinstance(payload, dict):
            raise InputError(f"job {i}: payload must be an object")
        for key, value in payload.items():
            flag = "--" + str(key).replace("_", "-")
            if isinstance(value, bool):
                if value:
                    argv.append(flag)
            elif isinstance(value, list):
                argv.extend([flag, ",".join(str(v) for v in value)])
            else:
                argv.extend([flag, str(value)])
        if job.get("output_format", "json") == "json" and "--json" not in argv:
            argv.append("--json")
        code = run(argv)
        worst = max(worst, code)
        results.append({"job": i, "command": job["command"], "exit": code})
    print(json.dumps({"jobs": results, "exit": worst}))
    if worst:
        raise _BatchExit(worst, f"{sum(1 for r in results if r['exit'])} batch job(s) failed")
    return {"jobs": results}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbhilb",
        description="Exact Hilbert series of polarized orbifolds: compute, "
        "decompose into ice cream parts, and verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--series", type=int, metavar="N",
                       help="print the first N expanded coefficients")

    def variety(p: argparse.ArgumentParser) -> None:
        p.add_argument("--weights", required=True, help="ambient weights a0,a1,...")
        p.add_argument("--degrees", help="equation degrees d1,...")
        p.add_argument("--numerator", help="explicit Hilbert numerator over prod(1-t^a)")
        p.add_argument("--k", type=int, help="canonical weight (required with --numerator)")
        p.add_argument("--n", type=int, help="dimension override")

    p = sub.add_parser("hilbert", help="Hilbert series of a weighted complete intersection")
    p.add_argument("--weights", required=True)
    p.add_argument("--degrees")
    common(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("parse", help="split a Hilbert series into initial + ice cream parts")
    variety(p)
    p.add_argument("--basket", help='e.g. "5x1/2(1,1,1);1/3(1,2,2)"')
    p.add_argument("--irregularity", help="irregularity polynomial J(t)")
    common(p)
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("porb", help="single orbifold contribution")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", required=True, help="weights a1,...,an")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--general", action="store_true",
                   help="force the generalized (noncoprime) form")
    common(p)
    p.set_defaults(func=_cmd_porb)

    p = sub.add_parser("dedekind", help="Dedekind sums sigma_i and Delta")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--a", required=True)
    common(p)
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("invmod", help="inverse of A modulo F in a support window")
    p.add_argument("--r", type=int, help="period (builds A, h, F from weights)")
    p.add_argument("--a", help="weights a1,...,an")
    p.add_argument("--gamma", type=int, default=0, help="window start (default 0)")
    p.add_argument("--a-poly", help="explicit A polynomial")
    p.add_argument("--f-poly", help="explicit F polynomial")
    p.add_argument("--period", type=int, help="r with t^r == 1 mod F (explicit mode)")
    common(p)
    p.set_defaults(func=_cmd_invmod)

    p = sub.add_parser("k3", help="polarized K3 surface series from genus and basket")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--basket", help='e.g. "1/2(1,1);1/3(1,2)"')
    common(p)
    p.set_defaults(func=_cmd_k3)

    p = sub.add_parser("fano3", help="Q-Fano 3-fold anticanonical series")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--basket", help='e.g. "1/2(1,1,1);1/3(1,1,2)"')
    common(p)
    p.set_defaults(func=_cmd_fano3)

    p = sub.add_parser("cy3", help="Calabi-Yau 3-fold decompositions with curve strata")
    variety(p)
    p.add_argument("--points", help="point basket, same grammar as --basket")
    p.add_argument("--curves", help='"s,a;..." (ice mode) or "s,a,DC[,pref];..." (rr mode)')
    p.add_argument("--mode", choices=("ice", "rr"), default="ice")
    p.add_argument("--dc2", help="D.c2 (rr mode; fitted from the series if omitted)")
    p.add_argument("--d3", help="D^3 (rr mode; fitted from the series if omitted)")
    common(p)
    p.set_defaults(func=_cmd_cy3)

    p = sub.add_parser("verify", help="check Gorenstein symmetry and basket consistency")
    variety(p)
    p.add_argument("--basket")
    p.add_argument("--irregularity")
    common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("batch", help="run a JSON file of job specs")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=_cmd_batch)

    return parser


def _diagnostic(exc: Exception) -> dict[str, Any]:
    d: dict[str, Any] = {"error": str(exc), "type": type(exc).__name__}
    check = getattr(exc, "check", None)
    if check:
        d["check"] = check
    residual = getattr(exc, "residual", None)
    if isinstance(residual, LaurentPoly):
        d["residual"] = poly_to_json(residual)
    elif isinstance(residual, RationalFn):
        d["residual"] = fn_to_json(residual)
    return d


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch a command line; returns the exit status (0/1/2)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
        return 0
    except _BatchExit as exc:
        print(json.dumps({"error": str(exc), "type": "BatchFailure"}), file=sys.stderr)
        return exc.code
    except InputError as exc:
        print(json.dumps({"error": str(exc), "type": "InputError"}), file=sys.stderr)
        return 2
    except (MathCheckError, NotCoprimeError, SeriesExpansionError, ZeroDivisionError) as exc:
        print(json.dumps(_diagnostic(exc)), file=sys.stderr)
        return 1
    except ValueError as exc:
        # semantic violations (bad weight congruence, invalid type data):
        # mathematical failures, not parse errors
        print(json.dumps(_diagnostic(exc)), file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
