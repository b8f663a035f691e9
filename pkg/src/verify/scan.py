"""Run every applicable check over a range of n."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

import pandas as pd

from src.closedforms.dispatch import BOUND_FAMILIES, ClosedFormFamily, FormulaVariant, parse_family
from src.spectral.errors import InvalidInputError
from src.utils.config import config
from src.utils.logger import get_logger
from src.verify.chain import conclusion_chain_report
from src.verify.checks import verify_bounds, verify_energy, verify_identities, verify_spectrum
from src.verify.report import (
    CheckKind,
    Status,
    VerificationReport,
    not_applicable,
    sort_reports,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScanSummary:
    """Sorted reports of a scan plus status counts."""

    reports: tuple[VerificationReport, ...]

    def to_frame(self) -> pd.DataFrame:
        columns = ["n", "family", "kind", "status", "max_deviation", "details"]
        rows = [{c: r.to_dict()[c] for c in columns} for r in self.reports]
        return pd.DataFrame(rows, columns=columns)

    @property
    def counts(self) -> dict[str, int]:
        """Report count per status, every status present."""
        frame = self.to_frame()
        grouped = frame.groupby("status").size() if len(frame) else pd.Series(dtype=int)
        return {s.value: int(grouped.get(s.value, 0)) for s in Status}

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.reports)


def checks_for_n(
    n: int,
    families: Sequence[ClosedFormFamily],
    tol: float,
    variant: FormulaVariant = FormulaVariant.CORRECTED,
    include_identities: bool = True,
) -> list[VerificationReport]:
    """All checks at one n; module-level so worker processes can pickle it."""
    reports: list[VerificationReport] = []
    for family in families:
        if family.is_distance and n <= 2:
            for kind in (CheckKind.SPECTRUM, CheckKind.ENERGY):
                reports.append(not_applicable(family.value, n, kind, "requires n > 2"))
            continue
        reports.append(verify_spectrum(family, n, tol, variant))
        reports.append(verify_energy(family, n, tol))
        if family in BOUND_FAMILIES and n % 2 == 1:
            reports.append(verify_bounds(family, n, tol))
    if include_identities and n >= 3:
        reports.extend(verify_identities(n, tol))
        reports.append(conclusion_chain_report(n))
    return reports


def parse_families(names: Iterable[str] | str | None) -> tuple[list[ClosedFormFamily], bool]:
    """Resolve family names; "all" (or None) selects every family plus identities.

    Returns:
        (families, include_identities)
    """
    if names is None:
        return list(ClosedFormFamily), True
    if isinstance(names, str):
        names = [s.strip() for s in names.split(",") if s.strip()]
    names = list(names)
    if not names:
        raise InvalidInputError("no families given")
    if "all" in names:
        return list(ClosedFormFamily), True
    return [parse_family(name) for name in names], False


def scan(
    n_from: int,
    n_to: int,
    families: Iterable[str] | str | None = None,
    tol: float | None = None,
    jobs: int | None = None,
    variant: FormulaVariant | str = FormulaVariant.CORRECTED,
) -> ScanSummary:
    """Verify every applicable check for n in n_from..n_to inclusive.

    Args:
        n_from: First n, at least 2
        n_to: Last n
        families: Family names or "all" (default)
        tol: Relative tolerance (default from config)
        jobs: Worker processes (default from config); 1 runs in-process
        variant: Formula variant for spectrum checks

    Returns:
        ScanSummary with reports sorted by (n, family, kind)

    Raises:
        InvalidInputError: If the range is empty or starts below 2
    """
    if n_from > n_to:
        raise InvalidInputError(f"empty range {n_from}..{n_to}")
    if n_from < 2:
        raise InvalidInputError(f"scan requires n >= 2, got {n_from}")
    tol = config.tolerance if tol is None else tol
    jobs = config.jobs if jobs is None else jobs
    if jobs < 1:
        raise InvalidInputError(f"jobs must be >= 1, got {jobs}")
    variant = FormulaVariant(variant)
    selected, include_identities = parse_families(families)
    ns = list(range(n_from, n_to + 1))

    logger.info(
        f"Scanning n={n_from}..{n_to} over {len(selected)} families "
        f"(tol={tol}, jobs={jobs}, variant={variant.value})"
    )

    reports: list[VerificationReport] = []
    if jobs == 1 or len(ns) == 1:
        for n in ns:
            reports.extend(checks_for_n(n, selected, tol, variant, include_identities))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(checks_for_n, n, selected, tol, variant, include_identities)
                for n in ns
            ]
            for future in futures:
                reports.extend(future.result())

    summary = ScanSummary(tuple(sort_reports(reports)))
    logger.info(f"Scan finished: {summary.counts}")
    return summary
