"""Command line front end.

Subcommands: boundary, exponents, decay, complex-check, verify.  Output in a
human table (default), JSON (--json / --format json) or TSV; exit code 0 on
success, 1 when any verification check fails, 2 on usage errors.  The random
seed comes from --seed, falling back to the CROWN_SEED environment variable.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
import warnings
from fractions import Fraction

from . import suites
from .errors import CrownlabError
from .exponents import (
    boundary_report,
    decay_profile,
    degeneracy_flag,
    exponent_report,
    leading_exponent,
)
from .report import ReportDocument
from .rootsys import extremal_points, root_system
from .weylchar import MultiplicityFunction


def _fraction_arg(text: str) -> Fraction:
    value = Fraction(text)
    if "." in text:
        warnings.warn(
            f"decimal input {text} converted exactly to the fraction {value}",
            stacklevel=2,
        )
    return value


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed; overrides CROWN_SEED")
    common.add_argument(
        "--format", choices=("human", "json", "tsv"), default="human", dest="fmt"
    )
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--tsv", action="store_true", help="shorthand for --format tsv")
    ap = argparse.ArgumentParser(
        prog="crown",
        description="Crown polytope boundary data, leading exponents and "
        "numerical verification suites.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_type(p):
        p.add_argument("--type", "--family", dest="family", required=True)
        p.add_argument("--rank", type=int, required=True)

    def add_mult(p):
        p.add_argument("--m1", type=_fraction_arg, default=None, help="long-root multiplicity")
        p.add_argument("--m2", type=_fraction_arg, default=None, help="other unmultipliable multiplicity")
        p.add_argument("--mhalf", type=_fraction_arg, default=None, help="half-root multiplicity")

    p = sub.add_parser("boundary", parents=[common], help="distinguished and minuscule boundary nodes")
    add_type(p)

    p = sub.add_parser("exponents", parents=[common], help="leading exponents at every extremal point")
    add_type(p)
    add_mult(p)
    p.add_argument("--eta", type=int, default=None, help="restrict to one node index")

    p = sub.add_parser("decay", parents=[common], help="assembled cusp-form decay profile")
    add_type(p)
    add_mult(p)
    p.add_argument("--period", type=float, default=1.0, help="lattice period for every simple root")
    p.add_argument("--calpha", type=_fraction_arg, default=None, help="override the geometric constants")

    p = sub.add_parser("complex-check", parents=[common], help="all-multiplicities-two cross check")
    add_type(p)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suite", nargs="?", default="all", help="suite name or 'all'")
    return ap


def _multiplicity(args, rs) -> MultiplicityFunction | None:
    if args.m1 is None and args.m2 is None and args.mhalf is None:
        return None
    m1 = args.m1 if args.m1 is not None else Fraction(1)
    return MultiplicityFunction.numeric(
        m1, args.m2 if args.m2 is not None else None, args.mhalf or 0
    )


def run(argv) -> tuple[int, ReportDocument | None, str]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), None, "human"
    fmt = "json" if args.json else ("tsv" if args.tsv else args.fmt)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("CROWN_SEED", "0"))

    doc = ReportDocument(command=["crown"] + list(argv))
    t0 = time.perf_counter()
    try:
        if args.cmd == "boundary":
            rs = root_system(args.family, args.rank)
            row = boundary_report(rs)
            doc.add_row(
                type=rs.type_label(),
                extremal=",".join(row.extremal_labels()),
                minuscule=",".join(row.minuscule_labels()),
            )
        elif args.cmd == "exponents":
            rs = root_system(args.family, args.rank)
            m = _multiplicity(args, rs)
            for bp in extremal_points(rs):
                if args.eta is not None and bp.index != args.eta:
                    continue
                rep = exponent_report(rs, bp)
                row = {
                    "type": rs.type_label(),
                    "eta": bp.label(),
                    "isotropy": rep.isotropy.classified_affine_type,
                    "sigma": str(rep.leading_character),
                    "s_symbolic": rep.leading_exponent.render(),
                    "d_condition": rep.degeneracy_condition,
                    "lower_bound": rep.lower_bound.render(),
                    "complex_check": "" if rep.complex_check is None else rep.complex_check,
                    "spectrum": ",".join(f.render() for _, f in rep.j_eta),
                }
                if m is not None and not m.symbolic:
                    label, form = leading_exponent(rs, bp, m)
                    row["s_value"] = str(form.evaluate(m))
                    flag, _ = degeneracy_flag(rs, bp, m)
                    row["degenerate"] = str(flag)
                doc.add_row(**row)
        elif args.cmd == "decay":
            rs = root_system(args.family, args.rank)
            m = _multiplicity(args, rs) or MultiplicityFunction.numeric(1)
            calpha = (
                {i: args.calpha for i in range(1, rs.rank + 1)}
                if args.calpha is not None
                else None
            )
            prof = decay_profile(rs, m, args.period, calpha)
            for d in prof.directions:
                doc.add_row(
                    type=rs.type_label(),
                    node=d.index,
                    c_alpha=d.c_alpha,
                    period=d.period,
                    rate=f"{d.rate:.12g}",
                    dim_x=prof.dim_x,
                    r_x=prof.r_x,
                    s_x=prof.s_x,
                    d_x=prof.d_x,
                    poly_exponent=prof.poly_exponent,
                    log_power=prof.log_power,
                )
        elif args.cmd == "complex-check":
            rs = root_system(args.family, args.rank)
            from .exponents import complex_cross_check

            for bp in extremal_points(rs):
                target, ok = complex_cross_check(rs, bp)
                doc.add_row(
                    type=rs.type_label(), eta=bp.label(), target=target, matches=ok
                )
        elif args.cmd == "verify":
            names = list(suites.SUITES) if args.suite == "all" else [args.suite]
            unknown = [n for n in names if n not in suites.SUITES]
            if unknown:
                print(f"unknown suite(s): {unknown}; known: {list(suites.SUITES)}", file=sys.stderr)
                return 2, None, fmt
            doc.checks = suites.run_suites(names, seed=seed)
    except CrownlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None, fmt
    doc.timing_s = time.perf_counter() - t0
    return (1 if doc.failed else 0), doc, fmt


def main() -> None:
    code, doc, fmt = run(sys.argv[1:])
    if doc is not None:
        sys.stdout.write(doc.emit(fmt))
    sys.exit(code)
