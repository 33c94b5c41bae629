"""Command line front end: ``qhopf verify | derive | report | list``.

Exit codes: 0 when every identity holds, 1 when one fails, 2 for input and
usage errors (unreadable or malformed algebra files, unknown builtins,
missing R-matrix, non-triangular R where a triangular one is needed).
"""
import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from loguru import logger

from qhopf.algebra.quasi_hopf import QuasiHopfAlgebra, normalize
from qhopf.algebra.quasitriangular import QTStructure
from qhopf.braided.h0 import build_H0
from qhopf.braided.hstar import mu_iso
from qhopf.catalog.builtins import builtin, builtin_names, default_field_for
from qhopf.catalog.spec_io import build_bundle, entry_lines, map_lines, parse_spec
from qhopf.cli.suites import SUITES, SuiteContext, parse_suites, run_suite
from qhopf.utils.config import get_settings
from qhopf.utils.errors import (ConsistencyFailure, FieldError, MissingPrerequisite, NotQT, NotTriangular,
                                SpecParseError, SpecValidationError, UnknownAlgebra)
from qhopf.utils.logging_setup import setup_logging
from qhopf.utils.reports import RunReport

DERIVABLE = ("f", "pq", "u", "rinv", "h0", "mu")

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

_INPUT_ERRORS = (SpecParseError, SpecValidationError, UnknownAlgebra, MissingPrerequisite, NotTriangular,
                 NotQT, FieldError, OSError, ValueError)


@dataclass(frozen=True)
class LoadedAlgebra:
    H: QuasiHopfAlgebra
    qt: Optional[QTStructure]
    source: str


def load_algebra(ref: str, field: Optional[str] = None) -> LoadedAlgebra:
    """``builtin:<name>`` or a path to an algebra spec file.

    Files are loaded without rejecting failing axioms so that ``verify`` can
    report which identity breaks.
    """
    if ref.startswith("builtin:"):
        name = ref.split(":", 1)[1]
        H, qt = builtin(name, field)
    else:
        path = Path(ref)
        spec = parse_spec(path.read_text(encoding="utf-8"), str(path))
        if field:
            spec = spec.model_copy(update={"field": field})
        bundle = build_bundle(spec, validate=False)
        H, qt = bundle.H, bundle.qt
    if get_settings().normalize:
        H = normalize(H)
    logger.info(f"Loaded {H.describe()} from {ref}")
    return LoadedAlgebra(H, qt, ref)


def run_report(loaded: LoadedAlgebra, suites: Sequence[str], seed: int, samples: int,
               timings: bool = False) -> RunReport:
    ctx = SuiteContext(loaded.H, loaded.qt, seed, samples)
    report = RunReport(algebra=loaded.H.name, field=loaded.H.field.describe(), seed=seed, samples=samples)
    for name in suites:
        report.suites.append(run_suite(name, ctx, timings))
    return report


def report_json(report: RunReport) -> str:
    return report.model_dump_json(indent=2, exclude_none=True) + "\n"


def _write(text: str, out: Optional[str]) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------
def cmd_verify(args) -> int:
    loaded = load_algebra(args.algebra, args.field)
    report = run_report(loaded, parse_suites(args.suites), args.seed, args.samples, args.timings)
    lines = [f"# {loaded.H.describe()}, seed {args.seed}, {args.samples} samples"]
    first_failure = None
    for suite in report.suites:
        if suite.skipped:
            lines.append(f"[{suite.suite}] skipped: {suite.skipped}")
            continue
        lines.append(f"[{suite.suite}]")
        lines.extend(f"{tag}: {'PASS' if ok else 'FAIL'}" for tag, ok in suite.identities.items())
        if suite.failures and first_failure is None:
            first_failure = suite.failures[0]
    if first_failure is not None:
        lines.append(f"first failure: {first_failure.line()}")
        if first_failure.lhs is not None or first_failure.rhs is not None:
            lines.append(f"  lhs = {first_failure.lhs}")
            lines.append(f"  rhs = {first_failure.rhs}")
    print("\n".join(lines))
    if args.out:
        _write(report_json(report), args.out)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_report(args) -> int:
    loaded = load_algebra(args.algebra, args.field)
    report = run_report(loaded, parse_suites(args.suites), args.seed, args.samples, args.timings)
    _write(report_json(report), args.out)
    return EXIT_OK if report.passed else EXIT_FAILURE


def derive_lines(loaded: LoadedAlgebra, what: str) -> List[str]:
    """The requested derived data as spec entry lines over the basis names of H."""
    H, qt = loaded.H, loaded.qt
    F, n, names = H.field, H.dim, H.basis
    lines = [f"# {what} for {H.describe()}"]
    if what == "f":
        tw = H.twist
        lines += entry_lines(F, "f", tw.f.coeffs, names) + entry_lines(F, "f_inv", tw.f_inv.coeffs, names)
        return lines
    if what == "pq":
        pq = H.pq
        for key in ("p_R", "q_R", "p_L", "q_L"):
            lines += entry_lines(F, key, getattr(pq, key).coeffs, names)
        return lines
    if qt is None:
        raise NotQT(f"{H.name} carries no R-matrix; '{what}' needs one")
    if what == "u":
        return lines + entry_lines(F, "u", qt.u.coeffs, names) + entry_lines(F, "u_inv", qt.u_inv.coeffs, names)
    if what == "rinv":
        return lines + entry_lines(F, "R_inv", qt.R_inv.coeffs, names)
    if what == "h0":
        H0 = build_H0(H, qt)
        lines += map_lines(F, "mult", H0.mult, n, 2, 1, names)
        lines += map_lines(F, "unit", H0.unit, n, 0, 1, names)
        lines += map_lines(F, "comult", H0.comult, n, 1, 2, names)
        lines += map_lines(F, "counit", H0.counit, n, 1, 0, names)
        lines += map_lines(F, "antipode", H0.antipode, n, 1, 1, names)
        return lines
    if what == "mu":
        mu = mu_iso(H, qt)
        # on H*, in the basis dual to that of H
        return lines + map_lines(F, "mu", mu.map, n, 1, 1, [f"{b}*" for b in names])
    raise ValueError(f"unknown derive target '{what}' (expected one of {', '.join(DERIVABLE)})")


def cmd_derive(args) -> int:
    loaded = load_algebra(args.algebra, args.field)
    _write("\n".join(derive_lines(loaded, args.what)) + "\n", args.out)
    return EXIT_OK


def cmd_list(args) -> int:
    print("builtins:")
    for name in builtin_names():
        print(f"  builtin:{name} (field {default_field_for(name)})")
    print("suites: " + ", ".join(SUITES) + ", all")
    print("derive: " + ", ".join(DERIVABLE))
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(prog="qhopf", description="Exact verification workbench for quasi-Hopf algebras")
    parser.add_argument("--log-level", default=None, help="override QHOPF_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def algebra_options(p):
        p.add_argument("--algebra", required=True, help="builtin:<name> or a path to an algebra spec file")
        p.add_argument("--field", default=None, help="q or fp:<p>; overrides the algebra's own field")
        p.add_argument("--out", default=None, help="write the output to this path instead of stdout")

    def suite_options(p):
        p.add_argument("--suites", default="all", help=f"comma separated, from {', '.join(SUITES)}, all")
        p.add_argument("--seed", type=int, default=settings.seed)
        p.add_argument("--samples", type=int, default=settings.samples)
        p.add_argument("--timings", action="store_true", help="record wall-clock seconds per suite")

    p = sub.add_parser("verify", help="run verification suites and print pass/fail per identity")
    algebra_options(p)
    suite_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="run verification suites and emit the JSON report")
    algebra_options(p)
    suite_options(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("derive", help="compute a derived element or structure")
    p.add_argument("what", choices=DERIVABLE)
    algebra_options(p)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("list", help="list builtin algebras and suites")
    p.set_defaults(func=cmd_list)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be positive")
    try:
        return args.func(args)
    except _INPUT_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyFailure as e:
        print(f"identity failure: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except Exception as e:
        logger.opt(exception=e).error(f"Unexpected error: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
