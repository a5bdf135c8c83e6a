"""Command-line front end.

Verbs: ``invariant``, ``check``, ``roots``, ``reproduce`` and ``oracle``.
Exit codes are the same for every verb: 0 for a pass (nonvanishing
invariant, matching reproduction, oracle PASS), 1 for a failed check and 2
for invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .errors import FatcheckError
from .obstruction import (
    Domain,
    OrbitCurve,
    check_fatness,
    complex_sphere_check,
    invariant_form,
    isolate_roots,
    lens_check,
    load_bundle,
    quaternionic_sphere_check,
    real_sphere_check,
    su3_analysis,
)
from .symfun import MultiPoly, to_records
from .symfun.unipoly import UniPoly
from .weinstein import GroupSpec, TFamily, parse_group

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


def _vector(text: str) -> list[Fraction]:
    try:
        return [Fraction(v) for v in text.replace(" ", "").split(",") if v]
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse vector {text!r}") from None


def _group(name: str, rank: int | None) -> GroupSpec:
    return parse_group(name, rank)


# invariant -----------------------------------------------------------------------------


def _tfamily_records(tf: TFamily) -> str:
    """Records over ``(t, class generators)``."""
    terms = {}
    for e, p in tf.rows.items():
        for i, c in enumerate(p.coeffs):
            if c:
                terms[(i,) + tuple(e)] = c
    return to_records(MultiPoly(1 + tf.family.size, terms))


def _named_curve(name: str, group: GroupSpec) -> OrbitCurve:
    if name == "rank2":
        if group.rank != 2:
            raise InputError("the rank2 curve needs a rank-2 group")
        return OrbitCurve.rank2()
    if name == "su3":
        if group.torus_dim != 3:
            raise InputError("the su3 curve needs SU(3) or U(3)")
        return OrbitCurve.su3()
    raise InputError(f"unknown curve {name!r}")


def run_invariant(args) -> int:
    group = _group(args.group, args.rank)
    form = invariant_form(group, args.m)
    names = ", ".join(form.family.names)
    if args.curve or args.orbit:
        if args.curve:
            tf = form.at_curve(_named_curve(args.curve, group).coordinates())
            if args.format == "records":
                print(f"# variables: t, {names}")
                print(_tfamily_records(tf))
            else:
                print(tf)
            return EXIT_OK
        y = _vector(args.orbit)
        if len(y) != group.torus_dim:
            raise InputError(f"{group.label} needs {group.torus_dim} orbit coordinates")
        expr = form.at_y(y)
        if args.format == "records":
            print(f"# variables: {names}")
            print(to_records(expr.poly))
        else:
            print(expr)
        return EXIT_OK
    if args.format == "records":
        print(f"# variables: y1..y{group.torus_dim}, {names}")
        print(form.to_records())
    else:
        print(form)
    return EXIT_OK


# check ---------------------------------------------------------------------------------


def _default_curve(group: GroupSpec, domain: Domain, infinity: bool) -> OrbitCurve:
    if group.trace_zero or group.family == "G2":
        raise InputError(f"no default orbit family for {group.label}; use --domain orbit Y")
    if group.rank == 1:
        return OrbitCurve.point([1])
    if group.family in ("U", "SO_even") and group.rank == 2:
        return OrbitCurve.rank2(domain, infinity)
    return OrbitCurve.e1_plus_te2(group.torus_dim, domain)


def run_check(args) -> int:
    bundle = load_bundle(args.bundle)
    precision = Fraction(args.precision) if args.precision else None
    words = args.domain or ["full"]
    kind = words[0].lower()
    group = bundle.group
    if kind == "sphere-real":
        v = real_sphere_check(bundle)
    elif kind == "sphere-complex":
        v = complex_sphere_check(bundle, precision)
    elif kind == "sphere-quat":
        v = quaternionic_sphere_check(bundle, precision)
    elif kind == "lens":
        if len(words) != 3:
            raise InputError("lens needs two integers: --domain lens P Q")
        try:
            p, q = int(words[1]), int(words[2])
        except ValueError:
            raise InputError("lens slopes must be integers") from None
        v = lens_check(p, q, bundle, precision)
    elif kind == "orbit":
        if len(words) != 2:
            raise InputError("orbit needs one vector: --domain orbit 1,0")
        v = check_fatness(bundle, OrbitCurve.point(_vector(words[1])), precision=precision)
    else:
        if isinstance(group, tuple):
            raise InputError("product groups need --domain orbit Y")
        text = " ".join(words)
        try:
            domain = Domain.parse(text)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse domain {text!r}") from None
        if group == GroupSpec("SU", 3) and bundle.m == 16 and kind == "full":
            v = su3_analysis(bundle, precision=precision)
        else:
            if group == GroupSpec("SU", 3) and kind == "full":
                curve = OrbitCurve.su3()
            else:
                unbounded = any(iv.lo is None or iv.hi is None for iv in domain.intervals)
                curve = _default_curve(group, domain, unbounded)
            v = check_fatness(bundle, curve, precision=precision)
    print(f"bundle: {bundle.label}, m = {bundle.m}")
    print(v.report())
    return v.exit_code


# roots ---------------------------------------------------------------------------------


def run_roots(args) -> int:
    poly = UniPoly(_vector(args.coefficients))
    try:
        domain = Domain.parse(args.domain)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse domain {args.domain!r}") from None
    precision = Fraction(args.precision) if args.precision else None
    roots = isolate_roots(poly, domain, precision)
    print(f"polynomial: {poly}")
    print(f"distinct roots on {domain}: {len(roots)}")
    for r in roots:
        mult = f" (multiplicity {r.multiplicity})" if r.multiplicity > 1 else ""
        print(f"  {r}{mult}")
    return EXIT_OK


# reproduce -----------------------------------------------------------------------------


def run_reproduce(args) -> int:
    from .reproduce import case_names, reproduce

    names = case_names() if args.case == "all" else [args.case]
    if args.case != "all" and args.case not in case_names():
        raise InputError(f"unknown case {args.case!r}; known: {', '.join(case_names())}, all")
    code = EXIT_OK
    for name in names:
        report = reproduce(name)
        print(report.report())
        code = max(code, report.exit_code)
    return code


# oracle --------------------------------------------------------------------------------


def run_oracle(args) -> int:
    from .haar_oracle import McConfig, ratio_validate

    group = _group(args.group, args.rank)
    y, x = _vector(args.y), _vector(args.x if args.x is not None else args.y)
    config = McConfig(args.samples, args.seed, args.chunk_size, args.workers)
    corrupt = Fraction(args.corrupt_symbolic) if args.corrupt_symbolic else None
    report = ratio_validate(group, y, x, args.k1, args.k2, config, corrupt=corrupt)
    print(f"{group.label}, y = {args.y}, x = {args.x or args.y}, k = {args.k1}/{args.k2}, N = {args.samples}, seed = {args.seed}")
    print(report)
    return EXIT_OK if report.passed else EXIT_FAIL


# parser --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fatcheck", description="Exact invariants and fatness obstructions.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("invariant", help="print the invariant polynomial of degree m")
    p.add_argument("--group", required=True, help="U, SU, SO, SO_odd, O, Sp, G2, T, or forms like SO(5)")
    p.add_argument("--rank", type=int)
    p.add_argument("--m", type=int, required=True)
    where = p.add_mutually_exclusive_group()
    where.add_argument("--orbit", help="torus point, e.g. 1,0")
    where.add_argument("--curve", choices=["rank2", "su3"])
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(func=run_invariant)

    p = sub.add_parser("check", help="run an obstruction check on a bundle file")
    p.add_argument("bundle")
    p.add_argument(
        "--domain",
        nargs="+",
        help="full | t<=Q | t>=Q | interval a,b | orbit Y | sphere-real | sphere-complex | sphere-quat | lens P Q",
    )
    p.add_argument("--precision", help="root enclosure width, e.g. 1/1000000000")
    p.set_defaults(func=run_check)

    p = sub.add_parser("roots", help="isolate the real roots of a polynomial")
    p.add_argument("coefficients", help="coefficients from t^0 upwards, e.g. 9,0,-10,0,1")
    p.add_argument("--domain", default="full")
    p.add_argument("--precision")
    p.set_defaults(func=run_roots)

    p = sub.add_parser("reproduce", help="recompute a worked example against stored values")
    p.add_argument("case", help="case name or 'all'")
    p.set_defaults(func=run_reproduce)

    p = sub.add_parser("oracle", help="Monte Carlo check of an invariant ratio")
    p.add_argument("--group", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--y", required=True)
    p.add_argument("--x")
    p.add_argument("--k1", type=int, required=True)
    p.add_argument("--k2", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--chunk-size", type=int, default=20_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--corrupt-symbolic", help=argparse.SUPPRESS)
    p.set_defaults(func=run_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FatcheckError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
