"""Tests for the command-line interface and its output encodings."""

import io
import json
from unittest.mock import patch

import pandas as pd
import pytest

from src.cli.output import OutputRecord, render, to_json_line
from src.cli.run_cli import (
    EXIT_DISCONNECTED,
    EXIT_FAILED,
    EXIT_INVALID,
    EXIT_NO_CLOSED_FORM,
    EXIT_NO_CONVERGENCE,
    EXIT_OK,
    build_parser,
    main,
)
from src.spectral.errors import NoConvergenceError


def _json_lines(text: str) -> list[dict]:
    return [json.loads(line) for line in text.splitlines() if line]


class TestOutput:
    """Tests for JSON Lines and CSV encoding."""

    def test_json_line_keeps_17_digits(self):
        """Test that floats survive the JSON encoding exactly."""
        record = OutputRecord("energy", 9, "distance-laplacian", {"value": 74 / 3, "ok": True})
        line = to_json_line(record)

        assert "\n" not in line
        decoded = json.loads(line)
        assert decoded["schema"] == 1
        assert decoded["payload"]["value"] == 74 / 3
        assert decoded["payload"]["ok"] is True

    def test_csv_and_json_carry_same_values(self):
        """Test that both encodings of one record hold identical floats."""
        record = OutputRecord(
            "spectrum",
            5,
            "signless",
            {"closed_form": [{"value": 0.1 + 0.2, "multiplicity": 1}], "oracle": None},
        )
        frame = pd.read_csv(io.StringIO(render([record], "csv")), float_precision="round_trip")
        decoded = json.loads(render([record], "json"))

        assert frame.loc[0, "value"] == decoded["payload"]["closed_form"][0]["value"]
        assert frame.loc[0, "source"] == "closed_form"


class TestMain:
    """Tests for main() exit codes and output."""

    def test_spectrum_ok(self, capsys):
        """Test the signless spectrum of G_6 with both sources."""
        code = main(["spectrum", "--n", "6", "--family", "signless"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        assert record["command"] == "spectrum"
        assert record["payload"]["within_tolerance"] is True
        values = [p["value"] for p in record["payload"]["closed_form"]]
        assert values == [0.0, 1.0, 3.0, 4.0]

    def test_spectrum_mismatch_exits_failed(self, capsys):
        """Test that a literal formula disagreeing with the oracle exits 1."""
        code = main(["spectrum", "--n", "5", "--family", "distance", "--variant", "literal"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_FAILED
        assert record["payload"]["within_tolerance"] is False

    def test_no_closed_form(self, capsys):
        """Test that a missing closed form exits 3 when only closed forms are asked for."""
        code = main(["spectrum", "--n", "15", "--family", "signless", "--source", "closed-form"])

        assert code == EXIT_NO_CLOSED_FORM
        assert capsys.readouterr().out == ""

    def test_no_closed_form_with_oracle(self, capsys):
        """Test that the oracle alone is printed when no closed form exists."""
        code = main(["spectrum", "--n", "15", "--family", "signless"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        assert record["payload"]["closed_form"] is None
        assert sum(p["multiplicity"] for p in record["payload"]["oracle"]) == 15

    def test_disconnected(self):
        """Test that distance matrices of a disconnected complement exit 4."""
        code = main(["spectrum", "--n", "5", "--family", "distance", "--complement"])

        assert code == EXIT_DISCONNECTED

    def test_invalid_n(self):
        """Test that n < 2 exits 2."""
        assert main(["spectrum", "--n", "1", "--family", "signless"]) == EXIT_INVALID

    def test_bad_log_level_exits_invalid(self, monkeypatch, capsys):
        """Test that an unknown LOG_LEVEL is reported as invalid input, not a traceback."""
        monkeypatch.setenv("LOG_LEVEL", "LOUD")

        assert main(["spectrum", "--n", "6", "--family", "signless"]) == EXIT_INVALID
        assert capsys.readouterr().out == ""

    def test_no_convergence_exits_5(self, capsys):
        """Test that an oracle failure maps to its own exit code."""
        with patch(
            "src.cli.run_cli.jacobi_spectrum",
            side_effect=NoConvergenceError("Jacobi did not converge on order 6"),
        ):
            code = main(["spectrum", "--n", "6", "--family", "signless"])

        assert code == EXIT_NO_CONVERGENCE
        assert capsys.readouterr().out == ""

    def test_invalid_family_list(self):
        """Test that unknown families exit 2."""
        assert main(["verify", "--n", "9", "--families", "bogus"]) == EXIT_INVALID

    def test_bad_tolerance_is_usage_error(self):
        """Test that argparse rejects a non-positive tolerance."""
        with pytest.raises(SystemExit) as exc:
            build_parser().parse_args(["verify", "--n", "9", "--tol", "0"])
        assert exc.value.code == 2

    def test_energy(self, capsys):
        """Test the distance Laplacian energy of G_9."""
        code = main(["energy", "--n", "9", "--family", "distance-laplacian"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        assert record["payload"]["closed_form"]["value"] == pytest.approx(74 / 3)
        assert record["payload"]["oracle"]["value"] == pytest.approx(74 / 3)
        assert record["payload"]["closed_form"]["shift"] == pytest.approx(96 / 9)

    def test_energy_unitary_cayley_adjacency(self, capsys):
        """Test the X_6 adjacency energy against the oracle."""
        code = main(["energy", "--n", "6", "--family", "adjacency", "--graph", "ucg"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        assert record["payload"]["closed_form"]["value"] == 8.0

    def test_energy_caveat(self, capsys):
        """Test that the distance energy at a prime carries the printed value."""
        code = main(["energy", "--n", "5", "--family", "distance", "--source", "closed-form"])
        (record,) = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        assert record["payload"]["closed_form"]["caveat"] is True
        assert record["payload"]["closed_form"]["literal"] == 8.0

    def test_verify(self, capsys):
        """Test that every check at n = 9 passes."""
        code = main(["verify", "--n", "9"])
        records = _json_lines(capsys.readouterr().out)

        assert code == EXIT_OK
        statuses = {r["payload"]["status"] for r in records}
        assert "fail" not in statuses
        assert any(r["family"] == "conclusion-chain" for r in records)

    def test_scan_csv(self, capsys):
        """Test a CSV scan over a short range."""
        code = main(
            ["scan", "--n-from", "3", "--n-to", "6", "--families", "signless",
             "--jobs", "1", "--format", "csv"]
        )
        frame = pd.read_csv(io.StringIO(capsys.readouterr().out))

        assert code == EXIT_OK
        assert {"command", "n", "family", "kind", "status"} <= set(frame.columns)
        assert set(frame["n"]) == {3, 4, 5, 6}
        assert (frame["status"] != "fail").all()
