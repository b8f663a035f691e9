"""Command-line entry point: spectra, energies, verification and scans of G_n and X_n."""

import argparse
import sys
from typing import Callable

from src.cli.output import OutputRecord, energy_payload, render, report_record, spectrum_payload
from src.closedforms.dispatch import FormulaVariant
from src.closedforms.energies import cf_energy
from src.closedforms.spectra import closed_form_family, closed_form_for
from src.spectral.errors import (
    DisconnectedGraphError,
    InvalidInputError,
    NoClosedFormError,
    NoConvergenceError,
)
from src.spectral.graphs import GraphKind, build
from src.spectral.linalg import (
    EnergyValue,
    MatrixFamily,
    build_matrix,
    energy,
    energy_shift,
    jacobi_spectrum,
    spectrum_equal,
)
from src.spectral.numtheory import unitary_cayley_energy
from src.utils.config import config
from src.utils.logger import configured_level, get_logger
from src.verify.scan import checks_for_n, parse_families, scan

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_NO_CLOSED_FORM = 3
EXIT_DISCONNECTED = 4
EXIT_NO_CONVERGENCE = 5

MATRIX_CHOICES = {
    "adjacency": MatrixFamily.ADJACENCY,
    "laplacian": MatrixFamily.LAPLACIAN,
    "signless": MatrixFamily.SIGNLESS_LAPLACIAN,
    "distance": MatrixFamily.DISTANCE,
    "distance-laplacian": MatrixFamily.DISTANCE_LAPLACIAN,
    "distance-signless": MatrixFamily.DISTANCE_SIGNLESS_LAPLACIAN,
}


def _graph_kind(args: argparse.Namespace) -> GraphKind:
    kind = GraphKind(args.graph)
    return kind.complement() if args.complement else kind


def _tolerance(args: argparse.Namespace) -> float:
    return config.tolerance if args.tol is None else args.tol


def _emit(records: list[OutputRecord], fmt: str) -> None:
    sys.stdout.write(render(records, fmt))
    sys.stdout.flush()


def cmd_spectrum(args: argparse.Namespace) -> int:
    """Print a closed-form and/or oracle spectrum."""
    kind = _graph_kind(args)
    matrix = MATRIX_CHOICES[args.family]
    tol = _tolerance(args)

    oracle = None
    if args.source in ("oracle", "both"):
        # oracle first so a disconnected graph is reported before any dispatch
        oracle = jacobi_spectrum(build_matrix(matrix, build(kind, args.n)))

    label, closed = None, None
    if args.source in ("closed-form", "both"):
        try:
            label, closed = closed_form_for(kind, matrix, args.n, args.variant)
        except NoClosedFormError:
            if args.source == "closed-form":
                raise
            logger.info(f"No closed form for {matrix.value} of {kind.value} at n={args.n}")

    payload: dict = {
        "graph": kind.value,
        "matrix": matrix.value,
        "source": args.source,
        "formula": label,
        "variant": args.variant,
        "closed_form": spectrum_payload(closed),
        "oracle": spectrum_payload(oracle),
    }
    status = EXIT_OK
    if closed is not None and oracle is not None:
        comparison = spectrum_equal(closed, oracle, tol)
        payload["max_deviation"] = comparison.max_deviation
        payload["within_tolerance"] = comparison.equal
        if not comparison.equal:
            logger.warning(f"closed form and oracle differ by {comparison.max_deviation:.3e}")
            status = EXIT_FAILED

    _emit([OutputRecord("spectrum", args.n, args.family, payload)], args.format)
    return status


def closed_form_energy(kind: GraphKind, matrix: MatrixFamily, n: int) -> EnergyValue:
    """Closed-form energy of a matrix of one of the four graphs.

    Raises:
        NoClosedFormError: If no energy statement covers the matrix at n
    """
    family = closed_form_family(kind, matrix, n)
    if family is not None:
        return cf_energy(family, n)
    if kind is GraphKind.UCG and matrix is MatrixFamily.ADJACENCY:
        return EnergyValue(value=float(unitary_cayley_energy(n)), shift=0.0)
    raise NoClosedFormError(f"No closed-form energy for {matrix.value} of {kind.value} at n={n}")


def cmd_energy(args: argparse.Namespace) -> int:
    """Print a closed-form and/or oracle energy; the shift follows the family."""
    kind = _graph_kind(args)
    matrix = MATRIX_CHOICES[args.family]
    tol = _tolerance(args)

    oracle = None
    if args.source in ("oracle", "both"):
        g = build(kind, args.n)
        oracle = energy(jacobi_spectrum(build_matrix(matrix, g)), energy_shift(matrix, g))

    closed = None
    if args.source in ("closed-form", "both"):
        try:
            closed = closed_form_energy(kind, matrix, args.n)
        except NoClosedFormError:
            if args.source == "closed-form":
                raise
            logger.info(f"No closed-form energy for {matrix.value} of {kind.value} at n={args.n}")

    payload: dict = {
        "graph": kind.value,
        "matrix": matrix.value,
        "source": args.source,
        "closed_form": energy_payload(closed),
        "oracle": energy_payload(oracle),
    }
    status = EXIT_OK
    if closed is not None and oracle is not None:
        scale = max(1.0, abs(closed.value), abs(oracle.value))
        deviation = abs(closed.value - oracle.value) / scale
        payload["max_deviation"] = deviation
        if deviation > tol:
            logger.warning(f"closed-form energy and oracle differ by {deviation:.3e}")
            status = EXIT_FAILED
    if closed is not None and closed.caveat:
        logger.warning(f"caveat: {closed.note}")

    _emit([OutputRecord("energy", args.n, args.family, payload)], args.format)
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    """Run every check at one n."""
    families, include_identities = parse_families(args.families)
    reports = checks_for_n(
        args.n,
        families,
        _tolerance(args),
        FormulaVariant(args.variant),
        include_identities and args.n >= 3,
    )
    _emit([report_record("verify", r) for r in reports], args.format)
    return EXIT_FAILED if any(r.failed for r in reports) else EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    """Run every check over n_from..n_to."""
    jobs = config.jobs if args.jobs is None else args.jobs
    summary = scan(
        args.n_from,
        args.n_to,
        families=args.families,
        tol=_tolerance(args),
        jobs=jobs,
        variant=args.variant,
    )
    _emit([report_record("scan", r) for r in summary.reports], args.format)
    counts = summary.counts
    logger.info(
        f"{len(summary.reports)} checks: "
        + ", ".join(f"{status}={count}" for status, count in counts.items())
    )
    return EXIT_FAILED if summary.failed else EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uacg-spectra",
        description="Spectra, energies and bounds of unitary (addition) Cayley graphs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Signless Laplacian spectrum of G_6, closed form next to the oracle
  uacg-spectra spectrum --n 6 --family signless

  # Distance Laplacian energy of G_9
  uacg-spectra energy --n 9 --family distance-laplacian

  # Every check at n = 9
  uacg-spectra verify --n 9 --families all

  # Scan 3..50 on four worker processes, CSV output
  uacg-spectra scan --n-from 3 --n-to 50 --jobs 4 --format csv

Environment:
  UACG_TOL   relative tolerance (default 1e-8), overridden by --tol
  UACG_JOBS  scan worker processes (default 1), overridden by --jobs
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--tol", type=_positive_float, default=None, help="Relative tolerance")
    common.add_argument(
        "--variant",
        choices=[v.value for v in FormulaVariant],
        default=FormulaVariant.CORRECTED.value,
        help="corrected (default) or literal formulas as printed",
    )

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--n", type=int, required=True, help="Number of vertices")
    single.add_argument("--family", choices=sorted(MATRIX_CHOICES), required=True)
    single.add_argument("--graph", choices=["uacg", "ucg"], default="uacg")
    single.add_argument("--complement", action="store_true", help="Use the complement graph")
    single.add_argument(
        "--source", choices=["closed-form", "oracle", "both"], default="both"
    )

    spectrum = sub.add_parser("spectrum", parents=[single, common], help="Print a spectrum")
    spectrum.set_defaults(handler=cmd_spectrum)
    energy_cmd = sub.add_parser("energy", parents=[single, common], help="Print an energy")
    energy_cmd.set_defaults(handler=cmd_energy)

    families_help = "Comma-separated closed-form families, or 'all' (default)"
    verify = sub.add_parser("verify", parents=[common], help="Run every check at one n")
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--families", default="all", help=families_help)
    verify.set_defaults(handler=cmd_verify)

    scan_cmd = sub.add_parser("scan", parents=[common], help="Run every check over a range")
    scan_cmd.add_argument("--n-from", type=int, required=True)
    scan_cmd.add_argument("--n-to", type=int, required=True)
    scan_cmd.add_argument("--families", default="all", help=families_help)
    scan_cmd.add_argument("--jobs", type=_positive_int, default=None, help="Worker processes")
    scan_cmd.set_defaults(handler=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    """CLI entry point; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    handler: Callable[[argparse.Namespace], int] = args.handler

    try:
        configured_level()
        return handler(args)
    except DisconnectedGraphError as e:
        logger.error(str(e))
        return EXIT_DISCONNECTED
    except NoClosedFormError as e:
        logger.error(str(e))
        return EXIT_NO_CLOSED_FORM
    except NoConvergenceError as e:
        logger.error(f"Oracle failed: {e}")
        return EXIT_NO_CONVERGENCE
    except InvalidInputError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
