"""Tests for verification reports, checks, the eigenvalue chain and scans."""

import importlib
import inspect
from unittest.mock import Mock, patch

import pytest

from src.closedforms.dispatch import ClosedFormFamily, FormulaVariant
from src.spectral.errors import InvalidInputError
from src.verify.chain import conclusion_chain_report, evaluate_chain
from src.verify.checks import (
    verify_bounds,
    verify_energy,
    verify_identities,
    verify_spectrum,
)
from src.verify.report import (
    CheckKind,
    Status,
    VerificationReport,
    not_applicable,
    sort_reports,
)
from src.verify.scan import ScanSummary, checks_for_n, parse_families, scan

TOL = 1e-8


class TestReport:
    """Tests for VerificationReport."""

    def test_to_dict_merges_extra(self):
        """Test that extra fields land at the top level of the record."""
        report = VerificationReport(
            family="signless",
            n=5,
            kind=CheckKind.BOUNDS,
            status=Status.PASS,
            closed_form=(1.0, 2.0),
            extra={"lo_offset": 2.0},
        )
        record = report.to_dict()

        assert record["kind"] == "bounds"
        assert record["status"] == "pass"
        assert record["closed_form"] == [1.0, 2.0]
        assert record["oracle"] is None
        assert record["lo_offset"] == 2.0

    def test_only_fail_fails(self):
        """Test that caveat and not-applicable do not fail a run."""
        assert VerificationReport("distance", 5, CheckKind.ENERGY, Status.FAIL).failed
        assert not VerificationReport("distance", 5, CheckKind.ENERGY, Status.CAVEAT).failed
        assert not not_applicable("signless", 15, CheckKind.SPECTRUM, "bounds only").failed

    def test_sort_reports(self):
        """Test ordering by (n, family, kind)."""
        reports = [
            not_applicable("signless", 9, CheckKind.ENERGY, ""),
            not_applicable("distance", 9, CheckKind.SPECTRUM, ""),
            not_applicable("signless", 9, CheckKind.SPECTRUM, ""),
            not_applicable("signless", 3, CheckKind.BOUNDS, ""),
        ]
        ordered = sort_reports(reports)

        assert [(r.n, r.family, r.kind.value) for r in ordered] == [
            (3, "signless", "bounds"),
            (9, "distance", "spectrum"),
            (9, "signless", "spectrum"),
            (9, "signless", "energy"),
        ]


class TestChecks:
    """Tests for the closed-form versus oracle checks."""

    @pytest.mark.parametrize(
        "family,n",
        [("signless", 6), ("signless", 9), ("distance", 9), ("distance", 12),
         ("distance-laplacian", 15), ("signless-complement", 9), ("laplacian", 10)],
    )
    def test_spectrum_pass(self, family, n):
        """Test that closed forms agree with the oracle."""
        report = verify_spectrum(family, n, TOL)

        assert report.status is Status.PASS
        assert len(report.closed_form) == n
        assert len(report.oracle) == n

    def test_spectrum_literal_fails(self):
        """Test that the printed distance radicand disagrees with the oracle at n = 5."""
        report = verify_spectrum("distance", 5, TOL, FormulaVariant.LITERAL)

        assert report.status is Status.FAIL
        assert report.max_deviation > TOL
        assert "variant=literal" in report.details

    def test_spectrum_not_applicable(self):
        """Test that bounds-only pairs are not applicable."""
        assert verify_spectrum("signless", 15, TOL).status is Status.NOT_APPLICABLE

    @pytest.mark.parametrize(
        "family,n", [("signless", 9), ("signless", 15), ("distance", 15), ("distance-signless", 9)]
    )
    def test_bounds_pass(self, family, n):
        """Test that oracle spectra lie inside the rank-paired intervals."""
        report = verify_bounds(family, n, TOL)

        assert report.status is Status.PASS
        assert report.max_deviation == 0.0

    @pytest.mark.parametrize("family,n", [("signless", 8), ("laplacian", 9)])
    def test_bounds_not_applicable(self, family, n):
        """Test that even n and unbounded families are not applicable."""
        assert verify_bounds(family, n, TOL).status is Status.NOT_APPLICABLE

    @pytest.mark.parametrize(
        "family,n",
        [("signless", 6), ("signless", 9), ("signless-complement", 9), ("distance", 12),
         ("distance-laplacian", 9), ("distance", 15)],
    )
    def test_energy_pass(self, family, n):
        """Test closed-form energies and energy bounds against the oracle."""
        assert verify_energy(family, n, TOL).status is Status.PASS

    def test_energy_caveat(self):
        """Test that the distance energy at a prime is a caveat, not a failure."""
        report = verify_energy("distance", 5, TOL)

        assert report.status is Status.CAVEAT
        assert not report.failed
        assert "8.0" in report.details

    @pytest.mark.parametrize("n,energy", [(25, 72.0), (27, 84.0)])
    def test_printed_distance_bounds_miss_is_caveat(self, n, energy):
        """Test that missing only the printed interval is a caveat."""
        report = verify_energy("distance", n, TOL)

        assert report.status is Status.CAVEAT
        assert report.oracle[0] == pytest.approx(energy)
        assert "printed bounds miss" in report.details
        lo, hi = report.extra["bounds"]
        assert not lo <= energy <= hi
        lo, hi = report.extra["rank_paired_bounds"]
        assert lo <= energy <= hi

    def test_energy_outside_rank_paired_bounds_fails(self):
        """Test that an oracle energy outside the rank-paired interval fails."""
        with patch("src.verify.checks.oracle_energy", return_value=(60.0, 0.0)):
            report = verify_energy("distance", 15, TOL)

        assert report.status is Status.FAIL
        assert "outside rank-paired bounds" in report.details

    def test_energy_not_applicable(self):
        """Test families without any energy statement."""
        assert verify_energy("laplacian", 6, TOL).status is Status.NOT_APPLICABLE
        assert verify_energy("distance-signless", 9, TOL).status is Status.NOT_APPLICABLE

    def test_identities_even(self):
        """Test every identity at n = 12."""
        reports = {r.family: r for r in verify_identities(12, TOL)}

        assert reports["distance-laplacian-two-paths"].status is Status.NOT_APPLICABLE
        others = [r for name, r in reports.items() if name != "distance-laplacian-two-paths"]
        assert all(r.status is Status.PASS for r in others)

    def test_identities_odd(self):
        """Test every identity at n = 9."""
        reports = {r.family: r for r in verify_identities(9, TOL)}

        assert reports["cospectral-uacg-ucg"].status is Status.NOT_APPLICABLE
        assert reports["distance-laplacian-two-paths"].status is Status.PASS
        assert reports["trace"].status is Status.PASS
        assert not any(r.failed for r in reports.values())

    def test_identities_reject_small_n(self):
        """Test that identities need n >= 3."""
        with pytest.raises(InvalidInputError):
            verify_identities(2, TOL)


class TestChain:
    """Tests for the eigenvalue chain."""

    def test_chain_n9(self):
        """Test that every rank holds at n = 9 while the principal claim does not."""
        evaluation = evaluate_chain(9)

        assert len(evaluation.ranks) == 8
        assert evaluation.violated_ranks == []
        assert not evaluation.principal_satisfied
        assert evaluation.principal[0] == pytest.approx((12 + 88**0.5) / 2)
        assert evaluation.principal[3] == pytest.approx(0.0, abs=1e-12)
        assert set(evaluation.sources.values()) == {"closed-form"}

    def test_chain_falls_back_to_oracle(self):
        """Test that families without a closed form at n = 15 use the oracle."""
        sources = evaluate_chain(15).sources

        assert sources["distance"] == "oracle"
        assert sources["signless"] == "oracle"
        assert sources["distance-signless"] == "oracle"
        assert sources["distance-laplacian"] == "closed-form"

    def test_chain_report_always_passes(self):
        """Test that the chain is reported, never failed."""
        report = conclusion_chain_report(9)

        assert report.status is Status.PASS
        assert report.kind is CheckKind.CHAIN
        assert report.extra["principal_satisfied"] is False
        assert "principal violated" in report.details

    def test_chain_rejects_small_n(self):
        """Test that the chain needs n >= 3."""
        with pytest.raises(InvalidInputError):
            evaluate_chain(2)


class TestScan:
    """Tests for scans over ranges of n."""

    def test_parse_families(self):
        """Test family selection and the identities switch."""
        families, identities = parse_families("signless, distance")
        assert families == [ClosedFormFamily.SIGNLESS, ClosedFormFamily.DISTANCE]
        assert not identities

        families, identities = parse_families("all")
        assert families == list(ClosedFormFamily)
        assert identities
        assert parse_families(None)[1]

    @pytest.mark.parametrize("names", ["", "bogus", ["signless", "nope"]])
    def test_parse_families_rejects(self, names):
        """Test that empty or unknown family names are rejected."""
        with pytest.raises(InvalidInputError):
            parse_families(names)

    def test_small_n_distance_not_applicable(self):
        """Test that distance families at n = 2 are reported not applicable."""
        reports = checks_for_n(2, [ClosedFormFamily.DISTANCE], TOL)

        assert [r.status for r in reports] == [Status.NOT_APPLICABLE] * 2

    @pytest.mark.parametrize("n_from,n_to", [(5, 3), (1, 4)])
    def test_rejects_bad_range(self, n_from, n_to):
        """Test that empty ranges and n < 2 are rejected."""
        with pytest.raises(InvalidInputError):
            scan(n_from, n_to, tol=TOL, jobs=1)

    def test_scan_in_process(self):
        """Test a small in-process scan and its status counts."""
        summary = scan(2, 7, families="signless,distance", tol=TOL, jobs=1)

        assert not summary.failed
        counts = summary.counts
        assert set(counts) == {s.value for s in Status}
        assert counts["fail"] == 0
        assert counts["caveat"] == 3  # distance energy at n = 3, 5, 7
        assert list(summary.to_frame()["n"]) == sorted(summary.to_frame()["n"])

    @patch("src.verify.scan.ProcessPoolExecutor")
    def test_scan_uses_worker_pool(self, mock_executor):
        """Test that jobs > 1 submits one task per n to a process pool."""
        pool = mock_executor.return_value.__enter__.return_value
        pool.submit.side_effect = lambda fn, *args: Mock(result=Mock(return_value=fn(*args)))

        summary = scan(4, 6, families="laplacian", tol=TOL, jobs=2)

        mock_executor.assert_called_once_with(max_workers=2)
        assert pool.submit.call_count == 3
        assert [r.n for r in summary.reports] == [4, 4, 5, 5, 6, 6]
        assert not summary.failed

    def test_empty_summary_counts(self):
        """Test that an empty summary still lists every status."""
        assert ScanSummary(()).counts == {s.value: 0 for s in Status}

    def test_scan_submodule_is_reachable(self):
        """Test that src.verify.scan names the submodule, not the scan function."""
        import src.verify

        assert inspect.ismodule(src.verify.scan)
        assert src.verify.scan is importlib.import_module("src.verify.scan")

    def test_scan_uses_config_defaults(self, mock_env):
        """Test that tolerance and jobs fall back to configuration."""
        with patch("src.verify.scan.checks_for_n", return_value=[]) as mock_checks:
            scan(3, 3, families="signless")

        args = mock_checks.call_args[0]
        assert args[2] == 1e-9
