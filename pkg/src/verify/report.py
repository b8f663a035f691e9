"""Verification report records."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class CheckKind(str, Enum):
    SPECTRUM = "spectrum"
    ENERGY = "energy"
    BOUNDS = "bounds"
    IDENTITY = "identity"
    CHAIN = "chain"


class Status(str, Enum):
    """Outcome of one check.

    Only FAIL fails a run; CAVEAT marks a documented discrepancy and
    NOT_APPLICABLE a (family, n) pair without a closed form.
    """

    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"
    CAVEAT = "caveat"


_KIND_ORDER = {kind: i for i, kind in enumerate(CheckKind)}


@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail record for one (family, n, check kind)."""

    family: str
    n: int
    kind: CheckKind
    status: Status
    max_deviation: float = 0.0
    details: str = ""
    closed_form: tuple[float, ...] | None = None
    oracle: tuple[float, ...] | None = None
    extra: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def sort_key(self) -> tuple[int, str, int]:
        return self.n, self.family, _KIND_ORDER[self.kind]

    def to_dict(self) -> dict[str, Any]:
        record: dict[str, Any] = {
            "family": self.family,
            "n": self.n,
            "kind": self.kind.value,
            "status": self.status.value,
            "max_deviation": self.max_deviation,
            "details": self.details,
            "closed_form": list(self.closed_form) if self.closed_form is not None else None,
            "oracle": list(self.oracle) if self.oracle is not None else None,
        }
        record.update(self.extra)
        return record


def not_applicable(family: str, n: int, kind: CheckKind, reason: str) -> VerificationReport:
    return VerificationReport(
        family=family, n=n, kind=kind, status=Status.NOT_APPLICABLE, details=reason
    )


def sort_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    """Order reports by (n, family, kind)."""
    return sorted(reports, key=VerificationReport.sort_key)
