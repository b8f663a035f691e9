"""Output records as JSON Lines or CSV.

Every float is written with 17 significant digits so both encodings of a
run carry identical numeric values.
"""

import json
import math
import re
from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from src.spectral.linalg import EnergyValue, Spectrum
from src.verify.report import VerificationReport

SCHEMA_VERSION = 1
FLOAT_FORMAT = "%.17g"

_FLOAT_MARK = "@@f17:"
_FLOAT_TOKEN = re.compile(r'"' + _FLOAT_MARK + r'([^"]+)"')


@dataclass(frozen=True)
class OutputRecord:
    """Self-describing record: schema version, command, n, family and a payload."""

    command: str
    n: int
    family: str
    payload: dict[str, Any] = field(default_factory=dict)
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "command": self.command,
            "n": self.n,
            "family": self.family,
            "payload": self.payload,
        }


def spectrum_payload(spectrum: Spectrum | None) -> list[dict[str, Any]] | None:
    if spectrum is None:
        return None
    return [{"value": v, "multiplicity": m} for v, m in spectrum.pairs]


def energy_payload(value: EnergyValue | None) -> dict[str, Any] | None:
    if value is None:
        return None
    return {
        "value": value.value,
        "shift": value.shift,
        "caveat": value.caveat,
        "literal": value.literal,
        "note": value.note,
    }


def report_record(command: str, report: VerificationReport) -> OutputRecord:
    payload = report.to_dict()
    family = payload.pop("family")
    n = payload.pop("n")
    return OutputRecord(command=command, n=n, family=family, payload=payload)


def _mark_floats(obj: Any) -> Any:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _FLOAT_MARK + format(obj, ".17g") if math.isfinite(obj) else obj
    if isinstance(obj, dict):
        return {k: _mark_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_mark_floats(v) for v in obj]
    return obj


def to_json_line(record: OutputRecord) -> str:
    """One JSON object on one line, floats at 17 significant digits."""
    text = json.dumps(_mark_floats(record.to_dict()), sort_keys=False)
    return _FLOAT_TOKEN.sub(lambda m: m.group(1), text)


def _flatten(record: OutputRecord) -> list[dict[str, Any]]:
    base = {"command": record.command, "n": record.n, "family": record.family}
    payload = record.payload
    rows: list[dict[str, Any]] = []
    scalars = {k: v for k, v in payload.items() if not isinstance(v, (list, tuple, dict))}

    if record.command == "spectrum":
        for source in ("closed_form", "oracle"):
            for pair in payload.get(source) or []:
                rows.append({**base, **scalars, "source": source, **pair})
        if not rows:
            rows.append({**base, **scalars})
        return rows

    if record.command == "energy":
        for source in ("closed_form", "oracle"):
            value = payload.get(source)
            if value is not None:
                rows.append({**base, **scalars, "source": source, **value})
        return rows or [{**base, **scalars}]

    row = dict(base)
    for key, value in payload.items():
        if isinstance(value, (list, tuple, dict)):
            row[key] = json.dumps(_mark_floats(value))
            row[key] = _FLOAT_TOKEN.sub(lambda m: m.group(1), row[key])
        else:
            row[key] = value
    return [row]


def to_csv(records: list[OutputRecord]) -> str:
    rows = [row for record in records for row in _flatten(record)]
    frame = pd.DataFrame(rows)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def render(records: list[OutputRecord], fmt: str) -> str:
    """Encode records as "json" (JSON Lines) or "csv"."""
    if fmt == "csv":
        return to_csv(records)
    return "".join(to_json_line(r) + "\n" for r in records)
