"""Command-line front end.

Every command prints one document: ``key: value`` lines by default, or a
single JSON object with ``--json``.  Exact numbers are always strings so that
arbitrarily large integers survive downstream tools.

Exit codes: 0 on success (including a structured "inadmissible" verdict),
1 on invalid input values, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from .arith import (
    DomainError,
    QuadraticSurd,
    format_rational,
    parse_rational,
    rational_to_decimal,
)
from .dynamics import (
    PeriodSearchError,
    RationalPoint,
    eigen,
    eigen_residual,
    is_anosov,
    matrix_from_triple,
    orbit,
    orbit_sample,
)
from .params import (
    Family,
    Inadmissible,
    InvalidTriple,
    Triple,
    family_triple,
    is_admissible_c,
    pair_from_triple,
    triple_from_V,
)
from .pell import cf_sqrt, min_solution_index, pell_min_solution, pell_solutions
from .spectra import minimal_triple, spectrum, spectrum_index


class InvalidInput(ValueError):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise InvalidInput(str(exc)) from None


def _int_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidInput(f"not an integer: {text!r}") from None


def _pair_arg(text: str, convert) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidInput(f"expected two comma-separated values, got {text!r}")
    return convert(parts[0]), convert(parts[1])


def _float_arg(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise InvalidInput(f"not a number: {text!r}") from None


class Renderer:
    def __init__(self, digits: int):
        self.digits = digits

    def q(self, x: Fraction | int) -> dict[str, str]:
        """Exact and approximate renderings of a rational."""
        return {"exact": format_rational(x), "approx": rational_to_decimal(x, self.digits)}

    def surd(self, s: QuadraticSurd) -> dict[str, str]:
        return {
            "exact": str(s),
            "a": format_rational(s.a),
            "b": format_rational(s.b),
            "d": str(s.d),
            "approx": s.to_decimal(self.digits),
        }

    def triple(self, t: Triple) -> dict[str, str]:
        return {"m": str(t.m), "n": str(t.n), "p": str(t.p)}

    def c(self, t: Triple) -> dict[str, str]:
        pair = pair_from_triple(t)
        return self.surd(pair.c)


def _triple_args(args) -> Triple:
    try:
        return Triple(_int_arg(args.m), _int_arg(args.n), _int_arg(args.p))
    except InvalidTriple as exc:
        raise InvalidInput(f"invalid triple ({exc.criterion}): {exc}") from None


def cmd_check_v(args, r: Renderer) -> tuple[str, dict, dict]:
    V = _rational_arg(args.V)
    inputs = {"V": r.q(V)}
    if V == 0:
        raise InvalidInput("V must be non-zero")
    try:
        t = triple_from_V(abs(V))
    except Inadmissible as exc:
        return "inadmissible", inputs, {"criterion": exc.criterion, "reason": exc.reason}
    results = {
        "triple": r.triple(t),
        "V": r.q(V),
        "c_squared": r.q(t.c_squared),
        "c": r.c(t),
        "spectrum_index": str(spectrum_index(t)),
    }
    return "admissible", inputs, results


def cmd_check_c(args, r: Renderer) -> tuple[str, dict, dict]:
    c2 = _rational_arg(args.c_squared)
    inputs = {"c_squared": r.q(c2)}
    if c2 <= 0:
        raise InvalidInput("c^2 must be positive")
    if not is_admissible_c(c2):
        return "inadmissible", inputs, {
            "criterion": "c_rational",
            "reason": "c is rational: c² is the square of a rational",
        }
    t = minimal_triple(c2)
    results = {
        "c_squared": r.q(c2),
        "c": r.c(t),
        "n_star": str(c2.numerator),
        "p_star": str(c2.denominator),
        "pell_d": str(c2.numerator * c2.denominator),
        "minimal_triple": r.triple(t),
        "V1": r.q(t.V),
    }
    return "admissible", inputs, results


def cmd_spectrum(args, r: Renderer) -> tuple[str, dict, dict]:
    c2 = _rational_arg(args.c_squared)
    count = _int_arg(args.count)
    inputs = {"c_squared": r.q(c2), "count": str(count), "signed": args.signed}
    if c2 <= 0 or count < 1:
        raise InvalidInput("need c^2 > 0 and count >= 1")
    if not is_admissible_c(c2):
        return "inadmissible", inputs, {
            "criterion": "c_rational",
            "reason": "c is rational: c² is the square of a rational",
        }
    s = spectrum(c2, count)
    terms = []
    for term in s.terms:
        terms.append({
            "k": str(term.k),
            "triple": r.triple(term.triple),
            "V": r.q(term.V),
            "gap_squared": r.q(term.gap_squared),
            "gap_law": term.gap_squared * term.triple.m**2 == c2,
        })
    results: dict[str, Any] = {
        "c_squared": r.q(c2),
        "n_star": str(s.n_star),
        "p_star": str(s.p_star),
        "terms": terms,
    }
    if args.signed:
        results["signed_V"] = [r.q(v) for v in s.signed_speeds()]
    return "ok", inputs, results


def cmd_pell(args, r: Renderer) -> tuple[str, dict, dict]:
    d = _int_arg(args.d)
    count = _int_arg(args.count)
    inputs = {"d": str(d), "count": str(count)}
    if count < 0:
        raise InvalidInput("count must be >= 0")
    try:
        cf = cf_sqrt(d)
    except DomainError as exc:
        raise InvalidInput(str(exc)) from None
    fund = pell_min_solution(d)
    results = {
        "cf": {
            "a0": str(cf.a0),
            "period": [str(a) for a in cf.period],
            "period_length": str(len(cf.period)),
        },
        "min_convergent_index": str(min_solution_index(cf)),
        "fundamental": {"x": str(fund.x), "y": str(fund.y)},
        "solutions": [
            {"k": str(k), "x": str(s.x), "y": str(s.y)}
            for k, s in enumerate(pell_solutions(d, count), start=1)
        ],
    }
    return "ok", inputs, results


def cmd_anosov(args, r: Renderer) -> tuple[str, dict, dict]:
    inputs = {"m": args.m, "n": args.n, "p": args.p}
    t = _triple_args(args)
    M = matrix_from_triple(t)
    e = eigen(t)
    residuals = [
        eigen_residual(M, e.lambda1, e.stable_dir),
        eigen_residual(M, e.lambda2, e.unstable_dir),
    ]
    results = {
        "matrix": [[str(v) for v in row] for row in M.rows()],
        "det": str(M.det),
        "trace": str(M.trace),
        "lambda1": r.surd(e.lambda1),
        "lambda2": r.surd(e.lambda2),
        "stable_dir": [str(v) for v in e.stable_dir],
        "unstable_dir": [str(v) for v in e.unstable_dir],
        "lambda_product_is_one": (e.lambda1 * e.lambda2) == QuadraticSurd.rational(1, e.lambda1.d),
        "lambda_sum_is_2m": (e.lambda1 + e.lambda2) == QuadraticSurd.rational(2 * t.m, e.lambda1.d),
        "eigen_residual_zero": all(c.is_zero() for res in residuals for c in res),
        "anosov": is_anosov(M),
    }
    return "ok", inputs, results


def cmd_orbit(args, r: Renderer) -> tuple[str, dict, dict]:
    t = _triple_args(args)
    x, y = _pair_arg(args.point, _rational_arg)
    pt = RationalPoint.wrap(x, y)
    q = pt.denominator
    max_iter = _int_arg(args.max_iter) if args.max_iter is not None else q * q
    inputs = {
        "m": args.m, "n": args.n, "p": args.p,
        "point": [r.q(x), r.q(y)], "max_iter": str(max_iter),
    }
    if max_iter < 1:
        raise InvalidInput("max-iter must be >= 1")
    M = matrix_from_triple(t)
    try:
        cycle = orbit(M, pt, max_iter)
    except PeriodSearchError as exc:
        raise InvalidInput(str(exc)) from None
    results = {
        "denominator": str(q),
        "period": str(len(cycle)),
        "cycle": [[format_rational(c.x), format_rational(c.t)] for c in cycle],
    }
    return "ok", inputs, results


def cmd_sample(args, r: Renderer) -> tuple[str, dict, dict]:
    t = _triple_args(args)
    seed = _pair_arg(args.seed, _float_arg)
    steps = _int_arg(args.steps)
    grid = _int_arg(args.grid)
    inputs = {"m": args.m, "n": args.n, "p": args.p, "seed": [repr(v) for v in seed],
              "steps": str(steps), "grid": str(grid)}
    if steps < 1 or grid < 1:
        raise InvalidInput("steps and grid must be >= 1")
    stats = orbit_sample(matrix_from_triple(t), seed, steps, grid)
    results = {
        "visited": str(stats.visited),
        "cells": str(stats.counts.size),
        "occupancy": repr(stats.occupancy),
        "counts": stats.counts.tolist(),
    }
    return "ok", inputs, results


def cmd_families(args, r: Renderer) -> tuple[str, dict, dict]:
    max_m = _int_arg(args.max_m)
    inputs = {"max_m": str(max_m)}
    if max_m < 2:
        raise InvalidInput("max-m must be >= 2")
    results = {}
    for family in Family:
        rows = []
        for m in range(2, max_m + 1):
            t = family_triple(m, family)
            rows.append({"triple": r.triple(t), "V": r.q(t.V), "c_squared": r.q(t.c_squared),
                         "c": r.c(t)})
        results[family.value] = rows
    return "ok", inputs, results


COMMANDS = {
    "check-v": cmd_check_v,
    "check-c": cmd_check_c,
    "spectrum": cmd_spectrum,
    "pell": cmd_pell,
    "anosov": cmd_anosov,
    "orbit": cmd_orbit,
    "sample": cmd_sample,
    "families": cmd_families,
}


_NEGATIVE_NUMBER = re.compile(r"^-\.?\d[\d./,eE+-]*$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentz-torus",
        description="Admissible Lorentz maps of the 2-torus, their spectra and dynamics.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    parser.add_argument("--digits", type=int, default=20,
                        help="significant digits of approximate values (default 20)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("check-v", help="admissibility of a relative speed V")
    p.add_argument("V", help="rational N/P or integer")

    p = sub.add_parser("check-c", help="admissibility of a squared light speed")
    p.add_argument("c_squared", metavar="c2", help="rational N/P or integer")

    p = sub.add_parser("spectrum", help="first K terms of the spectrum of c")
    p.add_argument("c_squared", metavar="c2")
    p.add_argument("--count", required=True, metavar="K")
    p.add_argument("--signed", action="store_true", help="also list -V_K..-V_1, V_1..V_K")

    p = sub.add_parser("pell", help="solve x^2 - d y^2 = 1")
    p.add_argument("d")
    p.add_argument("--count", default="5", metavar="K")

    for name, help_ in (("anosov", "matrix, eigenvalues and hyperbolicity of a triple"),
                        ("orbit", "exact period of a rational point"),
                        ("sample", "box-occupancy of a float orbit")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("m")
        p.add_argument("n")
        p.add_argument("p")
        if name == "orbit":
            p.add_argument("--point", required=True, metavar="a/q,b/q")
            p.add_argument("--max-iter", default=None, metavar="N")
        elif name == "sample":
            p.add_argument("--seed", required=True, metavar="x,t")
            p.add_argument("--steps", required=True, metavar="S")
            p.add_argument("--grid", default="32", metavar="G")

    p = sub.add_parser("families", help="the families (m, m²-1, 1) and (m, 1, m²-1)")
    p.add_argument("--max-m", required=True, metavar="M")

    # let "-12/17" and "-0.5,0.25" through as values, as argparse already does for "-12"
    for ap in (parser, *sub.choices.values()):
        ap._negative_number_matcher = _NEGATIVE_NUMBER
    return parser


def _flatten(prefix: str, value: Any, out: list[str]) -> None:
    if isinstance(value, dict):
        for key, v in value.items():
            _flatten(f"{prefix}.{key}" if prefix else key, v, out)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    elif isinstance(value, list):
        out.append(f"{prefix}: {' '.join(str(v) for v in value)}")
    elif isinstance(value, bool):
        out.append(f"{prefix}: {'true' if value else 'false'}")
    else:
        out.append(f"{prefix}: {value}")


def render(record: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(record, ensure_ascii=False)
    lines: list[str] = []
    _flatten("", record, lines)
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.digits < 1:
        parser.print_usage(sys.stderr)
        print("--digits must be >= 1", file=sys.stderr)
        return 2
    renderer = Renderer(args.digits)
    record: dict[str, Any] = {
        "command": args.command,
        "argv": list(sys.argv[1:] if argv is None else argv),
    }
    try:
        status, inputs, results = COMMANDS[args.command](args, renderer)
        code = 0
    except (InvalidInput, DomainError) as exc:
        status, inputs, results, code = "invalid", {}, {"error": str(exc)}, 1
    record.update(status=status, inputs=inputs, results=results)
    print(render(record, args.json))
    return code


def run(argv: list[str]) -> int:
    return main(argv)
