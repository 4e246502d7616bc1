"""Command-line surface: build documents, verify, simulate, solve weights.

Exit codes: 0 success, 1 verification failure, 2 input/parse error,
3 unsupported parameters.
"""

import argparse
import math
import re
import sys

import numpy as np

from . import documents
from .estimate import simulate
from .polytopes import POLYTOPE_KINDS
from .povm import AGGREGATE_TOL, Povm
from .reports import VerificationReport
from .spin1 import (
    TABLE1,
    AngularCancellationError,
    WeightSolveError,
    build_table1_povm,
    solve_weights,
)
from .spin32 import (
    PENROSE40,
    SET60,
    catalog,
    overlap_spectrum,
    spin32_povm,
    verify_hierarchy_n2,
    verify_hierarchy_n3,
)
from .verify import verify_completeness, verify_scalar_identity

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_UNSUPPORTED = 3

CATALOG_TARGETS = (PENROSE40, SET60)
POVM_TARGETS = tuple(
    [f"table1-N{n}" for n in sorted(TABLE1)]
    + [f"{label}-povm-N{n}" for label in CATALOG_TARGETS for n in (2, 3)]
)
BUILD_TARGETS = POVM_TARGETS + CATALOG_TARGETS


class CliInputError(Exception):
    """User input that cannot be acted on; maps to exit code 2."""


_PI_FRACTION = re.compile(r"^(\d+)?pi(?:/(\d+))?$")


def parse_angle(text: str) -> float:
    """Angles as exact fractions of pi: '0', 'pi', 'pi/4', '3pi/8'."""
    token = text.strip().lower().replace(" ", "")
    if token == "0":
        return 0.0
    match = _PI_FRACTION.match(token)
    if match is None:
        raise CliInputError(
            f"cannot parse angle {text!r}; use forms like 0, pi/2, 3pi/8")
    numerator = int(match.group(1) or 1)
    denominator = int(match.group(2) or 1)
    return numerator * math.pi / denominator


def build_povm_target(name: str) -> Povm:
    if name not in POVM_TARGETS:
        raise CliInputError(
            f"unknown POVM target {name!r}; valid targets: {', '.join(POVM_TARGETS)}")
    if name.startswith("table1-"):
        return build_table1_povm(int(name.rsplit("N", 1)[1]))
    label, _, copies = name.rpartition("-povm-N")
    return spin32_povm(catalog(label), int(copies))


def _load_povm(target: str | None, infile: str | None) -> Povm:
    if (target is None) == (infile is None):
        raise CliInputError("provide exactly one of --target or --in")
    if infile is not None:
        return documents.povm_from_document(documents.read_json(infile))
    if target in CATALOG_TARGETS:
        raise CliInputError(
            f"{target!r} is a ray catalog, not a POVM; use one of "
            f"{', '.join(t for t in POVM_TARGETS if t.startswith(target))}")
    return build_povm_target(target)


def _write_if_requested(data: dict, path: str | None) -> None:
    if path is not None:
        documents.write_json(data, path)


def cmd_build(args) -> int:
    if args.target in CATALOG_TARGETS:
        cat = catalog(args.target)
        documents.write_json(documents.catalog_to_document(cat), args.out)
        print(f"wrote {args.out}: {cat.size} states")
        return EXIT_OK
    povm = build_povm_target(args.target)
    documents.write_json(documents.povm_to_document(povm), args.out)
    print(f"wrote {args.out}: {povm.size} elements, weight sum {povm.weight_sum!r}")
    return EXIT_OK


def _full_verification(povm: Povm, trials: int, seed: int,
                       tolerance: float) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = verify_completeness(povm, tolerance)
    report = report.merged(verify_scalar_identity(povm, trials, rng, tolerance))
    if povm.dim == 4 and povm.copies in (2, 3):
        hierarchy = verify_hierarchy_n2 if povm.copies == 2 else verify_hierarchy_n3
        report = report.merged(hierarchy(povm, tolerance))
    return report


def cmd_verify(args) -> int:
    povm = _load_povm(args.target, args.infile)
    report = _full_verification(povm, args.trials, args.seed, args.tolerance)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status}  {check.name}: residual {check.residual:.6e} "
              f"(tolerance {check.tolerance:.1e})")
    print(f"{report.povm_id}: worst residual {report.worst:.6e} -> "
          f"{'PASS' if report.passed else 'FAIL'}")
    _write_if_requested(report.to_dict(), args.out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_simulate(args) -> int:
    povm = _load_povm(args.target, args.infile)
    rng = np.random.default_rng(args.seed)
    try:
        report = simulate(povm, args.trials, rng, keep_samples=args.csv is not None)
    except ValueError as err:
        print(f"refusing to simulate: {err}", file=sys.stderr)
        return EXIT_VERIFY
    print(f"{report.povm_id}: mean fidelity {report.mean_fidelity:.6f} "
          f"+- {report.std_error:.6f} over {report.trials} trials")
    print(f"exact average {report.exact_fidelity!r}, optimal bound "
          f"{report.optimal_bound!r}")
    _write_if_requested(report.to_dict(), args.out)
    if args.csv is not None:
        with open(args.csv, "w") as handle:
            handle.write("trial,fidelity\n")
            for index, value in enumerate(report.samples):
                handle.write(f"{index},{value!r}\n")
        print(f"wrote per-trial fidelities to {args.csv}")
    return EXIT_OK


def cmd_solve_weights(args) -> int:
    if args.polytope not in POLYTOPE_KINDS:
        raise CliInputError(
            f"unknown polytope {args.polytope!r}; expected one of {POLYTOPE_KINDS}")
    angles = [parse_angle(text) for text in args.angles]
    try:
        weights = solve_weights(args.polytope, angles, args.copies)
    except AngularCancellationError as err:
        print(f"unsupported: {err}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except WeightSolveError as err:
        print(f"unsolvable: {err}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    for text, weight in zip(args.angles, weights):
        print(f"theta = {text}: weight {float(weight)!r}")
    payload = {
        "polytope": args.polytope,
        "copies": args.copies,
        "angles": list(args.angles),
        "angles_radians": [float(a) for a in angles],
        "weights": [float(w) for w in weights],
    }
    _write_if_requested(payload, args.out)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if args.infile is not None:
        cat = documents.catalog_from_document(documents.read_json(args.infile))
    else:
        if args.target not in CATALOG_TARGETS:
            raise CliInputError(
                f"unknown catalog {args.target!r}; valid: {', '.join(CATALOG_TARGETS)}")
        cat = catalog(args.target)
    spectrum = overlap_spectrum(cat)
    for value in spectrum.values:
        print(f"bloch dot {value:+.9f}: {spectrum.pair_counts[value]} pairs")
    _write_if_requested(spectrum.to_dict(), args.out)
    return EXIT_OK


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinpovm",
        description="Build, verify, and simulate optimal multi-copy POVMs "
                    "for spin-1 and spin-3/2 state estimation.")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="write a POVM or ray catalog as JSON")
    build.add_argument("--target", required=True,
                       help=f"one of: {', '.join(BUILD_TARGETS)}")
    build.add_argument("--out", required=True, help="output JSON path")
    build.set_defaults(func=cmd_build)

    verify = sub.add_parser("verify", help="run the identity checks on a POVM")
    verify.add_argument("--target", help=f"built-in POVM: {', '.join(POVM_TARGETS)}")
    verify.add_argument("--in", dest="infile", help="POVM document to verify")
    verify.add_argument("--trials", type=int, default=1000,
                        help="Haar probes for the scalar identity (default 1000)")
    verify.add_argument("--seed", type=int, required=True, help="RNG seed")
    verify.add_argument("--tolerance", type=float, default=AGGREGATE_TOL,
                        help="residual tolerance (default 1e-9)")
    verify.add_argument("--out", help="write the verification report as JSON")
    verify.set_defaults(func=cmd_verify)

    sim = sub.add_parser("simulate", help="Monte Carlo estimation-fidelity run")
    sim.add_argument("--target", help=f"built-in POVM: {', '.join(POVM_TARGETS)}")
    sim.add_argument("--in", dest="infile", help="POVM document to simulate")
    sim.add_argument("--trials", type=int, default=100_000,
                     help="number of simulated estimation rounds (default 100000)")
    sim.add_argument("--seed", type=int, required=True, help="RNG seed")
    sim.add_argument("--out", help="write the estimation report as JSON")
    sim.add_argument("--csv", help="write per-trial fidelities as CSV")
    sim.set_defaults(func=cmd_simulate)

    solve = sub.add_parser("solve-weights",
                           help="solve for shell weights from angles")
    solve.add_argument("--polytope", required=True,
                       help="24-cell or 600-cell")
    solve.add_argument("--angles", nargs="+", required=True,
                       help="angles as fractions of pi, e.g. pi/4 pi/2 0")
    solve.add_argument("--copies", type=int, required=True, help="copy count N")
    solve.add_argument("--out", help="write the weight report as JSON")
    solve.set_defaults(func=cmd_solve_weights)

    spectrum = sub.add_parser("spectrum",
                              help="pairwise Bloch-dot spectrum of a ray catalog")
    spectrum.add_argument("--target", help=f"one of: {', '.join(CATALOG_TARGETS)}")
    spectrum.add_argument("--in", dest="infile", help="ray catalog document")
    spectrum.add_argument("--out", help="write the spectrum as JSON")
    spectrum.set_defaults(func=cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliInputError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except documents.DocumentError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as err:
        print(f"unsupported: {err}", file=sys.stderr)
        return EXIT_UNSUPPORTED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
