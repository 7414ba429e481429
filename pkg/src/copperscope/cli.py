"""Command-line front end.

    copperscope solve --poly "c0,c1,...,1" --modulus N --radius X [--m M] [--t-extra T]
    copperscope capacity --modulus N --degree d --radius-exp a/b [--arch disk|interval]
    copperscope binomial {q0,construct,supnorm,minkowski,cutoff} ...
    copperscope negative --modulus N --degree d --epsilon a/b --M M
    copperscope demo --bits B --seed S

Every command accepts --json.  Exit codes: 0 success, 1 bad input,
2 radius not certified by the lattice bound.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from fractions import Fraction
from importlib import resources
from typing import Any, Callable, Optional, Sequence

from . import binomial, capacity, coppersmith, negative
from .errors import BoundNotCertified, CopperscopeError

SCHEMA_VERSION = "1"
EXIT_OK, EXIT_INPUT, EXIT_UNCERTIFIED = 0, 1, 2

log = logging.getLogger("copperscope")


class InputError(CopperscopeError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which we reserve
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def load_schema() -> dict:
    text = resources.files("copperscope").joinpath("schemas/result.v1.json").read_text()
    return json.loads(text)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "value"):  # enums
        return x.value
    return str(x)


def parse_poly(text: str) -> list[int]:
    if text.startswith("@"):
        try:
            with open(text[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read polynomial file: {exc}") from exc
    parts = [p.strip() for p in text.replace("\n", ",").split(",") if p.strip()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(f"polynomial coefficients must be integers: {text.strip()!r}") from None


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def parse_int(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"not an integer: {text!r}") from None


# -- commands ---------------------------------------------------------------


def cmd_solve(args) -> tuple[dict, dict, list, int]:
    f = parse_poly(args.poly)
    N, X = parse_int(args.modulus), parse_int(args.radius)
    inputs = {"poly": f, "modulus": N, "radius": X, "m": args.m, "t_extra": args.t_extra}
    p = coppersmith.Problem(tuple(f), N, X, args.m, args.t_extra)
    try:
        rep = coppersmith.solve_report(p)
    except BoundNotCertified as exc:
        out = {"certified_X": exc.certified_X, "m": exc.m, "t_extra": exc.t_extra}
        return inputs, out, [str(exc)], EXIT_UNCERTIFIED
    out = {
        "roots": rep.roots,
        "m": rep.m,
        "t_extra": rep.t_extra,
        "w": rep.dimension,
        "certified_X": rep.X,
        "swap_count": rep.swap_count,
        "_timings": rep.timings_ms,
    }
    return inputs, out, [], EXIT_OK


def cmd_capacity(args):
    N, d = parse_int(args.modulus), parse_int(args.degree)
    e = parse_rational(args.radius_exp)
    if d < 1:
        raise InputError("degree must be >= 1")
    inputs = {"modulus": N, "degree": d, "radius_exp": e, "arch": args.arch}
    f = [0] * d + [1]  # only the degree enters the capacity
    v = capacity.coppersmith_feasibility(f, N, capacity.LogCapacity.power(N, e), args.arch)
    out = {
        "capacity": v.capacity.to_json(),
        "ln_capacity": v.capacity.ln(),
        "verdict": v.status.value,
        "note": v.note,
    }
    return inputs, out, [], EXIT_OK


def cmd_binomial_q0(args):
    q0 = binomial.solve_q0(args.tolerance)
    return {"tolerance": args.tolerance}, {"q0": q0, "residual": binomial.q0_function(q0)}, [], EXIT_OK


def cmd_binomial_construct(args):
    t, r = parse_int(args.t), parse_rational(args.radius)
    coeffs = binomial.explicit_construction(t)
    sup = binomial.construction_sup_norm(t, r)
    out = {
        "degree": 2 * t + 1,
        "binomial_coeffs": coeffs,
        "integral": all(c.denominator == 1 for c in coeffs),
        "supnorm": sup,
        "ln_supnorm": binomial.ln_fraction(sup),
        "bounded": sup < 1,
        "q": Fraction(2 * t) / r,
    }
    return {"t": t, "radius": r}, out, [], EXIT_OK


def cmd_binomial_supnorm(args):
    t, r = parse_int(args.t), parse_rational(args.radius)
    sup = binomial.construction_sup_norm(t, r)
    out = {"supnorm": sup, "ln_supnorm": binomial.ln_fraction(sup), "bounded": sup < 1}
    return {"t": t, "radius": r}, out, [], EXIT_OK


def cmd_binomial_minkowski(args):
    r, c = parse_rational(args.r), parse_rational(args.c)
    m = binomial.minkowski_degree_bound(r, c, cap=args.cap)
    warnings = []
    if m > c * r:
        warnings.append(f"certified degree {m} exceeds the allowance c*r = {float(c * r):g}")
    out = {
        "m": m,
        "margin": binomial.minkowski_margin(m, r),
        "ratio_m_over_r": float(Fraction(m) / r),
        "within_allowance": m <= c * r,
    }
    return {"r": r, "c": c, "cap": args.cap}, out, warnings, EXIT_OK


def cmd_binomial_cutoff(args):
    v = args.delta_logn
    if not v > 0:
        raise InputError("--delta-logn must be positive")
    Y = binomial.min_prime_cutoff_for_existence(v)
    exact = Y <= binomial.SIEVE_LIMIT
    warnings = [] if exact else ["cutoff beyond sieve range; value is an explicit upper bound"]
    return {"delta_logn": v}, {"cutoff": Y, "exact": exact}, warnings, EXIT_OK


def cmd_negative(args):
    N, d = parse_int(args.modulus), parse_int(args.degree)
    eps, M = parse_rational(args.epsilon), parse_int(args.M)
    res = negative.analyze(N, d, eps, M)
    warnings = []
    if res.proof_constant_condition != res.statement_constant_condition:
        warnings.append("constant-form conditions 1.48744 and 1.48774 disagree on this input")
    out = {
        "verdict": res.verdict.value,
        "small_factor": res.small_factor,
        "capacity_log": res.capacity_log,
        "prime_product_log": res.prime_product_log,
        "exact_condition": res.exact_condition,
        "proof_constant_condition": res.proof_constant_condition,
        "statement_constant_condition": res.statement_constant_condition,
    }
    return {"modulus": N, "degree": d, "epsilon": eps, "M": M}, out, warnings, EXIT_OK


def cmd_demo(args):
    rep = coppersmith.demo_stereotyped_rsa(args.bits, args.seed)
    timings = rep.pop("timings_ms")
    rep["_timings"] = timings
    return {"bits": args.bits, "seed": args.seed}, rep, [], EXIT_OK


# -- plumbing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--no-timings", action="store_true", help="omit wall-clock timings (byte-stable output)")
    parser = _Parser(prog="copperscope", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn: Callable, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        p.set_defaults(func=fn, label=name)
        return p

    p = add("solve", cmd_solve, help="find all small roots of f mod N")
    p.add_argument("--poly", required=True, help="comma-separated coefficients, constant first, or @file")
    p.add_argument("--modulus", required=True)
    p.add_argument("--radius", required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--t-extra", type=int, default=0)

    p = add("capacity", cmd_capacity, help="auxiliary-polynomial feasibility at X = N^e")
    p.add_argument("--modulus", required=True)
    p.add_argument("--degree", required=True)
    p.add_argument("--radius-exp", required=True)
    p.add_argument("--arch", choices=["disk", "interval"], default="disk")

    p = add("negative", cmd_negative, help="binomial-lattice negative result")
    p.add_argument("--modulus", required=True)
    p.add_argument("--degree", required=True)
    p.add_argument("--epsilon", required=True)
    p.add_argument("--M", required=True)

    p = add("demo", cmd_demo, help="stereotyped-message RSA demo")
    p.add_argument("--bits", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)

    bp = sub.add_parser("binomial", help="binomial-polynomial toolkit")
    bsub = bp.add_subparsers(dest="binomial_command", required=True, parser_class=_Parser)

    def badd(name, fn):
        q = bsub.add_parser(name, parents=[common])
        q.set_defaults(func=fn, label=f"binomial {name}")
        return q

    q = badd("q0", cmd_binomial_q0)
    q.add_argument("--tolerance", type=float, default=1e-12)
    for name, fn in (("construct", cmd_binomial_construct), ("supnorm", cmd_binomial_supnorm)):
        q = badd(name, fn)
        q.add_argument("--t", required=True)
        q.add_argument("--radius", required=True)
    q = badd("minkowski", cmd_binomial_minkowski)
    q.add_argument("--r", required=True)
    q.add_argument("--c", required=True)
    q.add_argument("--cap", type=int, default=10**6)
    q = badd("cutoff", cmd_binomial_cutoff)
    q.add_argument("--delta-logn", type=float, required=True)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("COPPERSCOPE_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def render(result: dict) -> str:
    return json.dumps(_jsonable(result), sort_keys=True, indent=2)


def _print_human(result: dict) -> None:
    print(f"# {result['command']}")
    for k, v in sorted(result["outputs"].items()):
        v = _jsonable(v)
        print(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}")
    for w in result["warnings"]:
        print(f"warning: {w}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.perf_counter()
    try:
        inputs, outputs, warnings, code = args.func(args)
    except CopperscopeError as exc:
        print(f"copperscope: error: {exc}", file=sys.stderr)
        if args.json:
            print(render({
                "schema_version": SCHEMA_VERSION, "command": args.label, "inputs": {},
                "outputs": {}, "timings_ms": {}, "warnings": [str(exc)], "exit_code": EXIT_INPUT,
            }))
        return EXIT_INPUT
    timings = outputs.pop("_timings", {})
    timings["total"] = (time.perf_counter() - t0) * 1e3
    result = {
        "schema_version": SCHEMA_VERSION,
        "command": args.label,
        "inputs": inputs,
        "outputs": outputs,
        "timings_ms": {} if args.no_timings else timings,
        "warnings": warnings,
        "exit_code": code,
    }
    if args.json:
        print(render(result))
    else:
        _print_human(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
