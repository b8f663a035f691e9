"""Eigenvalue intervals for odd n.

For odd n every bounded family of G_n is a left circulant matrix over the
gcd pattern of i + j plus a diagonal whose entries take two adjacent
values. Weyl's inequality then puts the r-th largest eigenvalue of the
matrix within a fixed window above the r-th largest circulant eigenvalue,
so intervals are indexed by rank, not by circulant index.
"""

from dataclasses import dataclass
from typing import Sequence

from src.closedforms.dispatch import BOUND_FAMILIES, ClosedFormFamily, parse_family
from src.spectral.errors import InvalidInputError
from src.spectral.numtheory import euler_phi, ramanujan_sums


@dataclass(frozen=True)
class BoundSet:
    """Rank-ordered eigenvalue intervals, largest first."""

    family: ClosedFormFamily
    n: int
    centers: tuple[float, ...]
    lo_offset: float
    hi_offset: float

    @property
    def intervals(self) -> list[tuple[float, float]]:
        return [(c + self.lo_offset, c + self.hi_offset) for c in self.centers]

    @property
    def width(self) -> float:
        return self.hi_offset - self.lo_offset

    def violation(self, values: Sequence[float], tol: float) -> float:
        """Largest scaled distance of a sorted-descending value outside its interval.

        Zero when every value lies within its interval up to tol slack.

        Raises:
            InvalidInputError: If the number of values is not n
        """
        if len(values) != self.n:
            raise InvalidInputError(f"expected {self.n} eigenvalues, got {len(values)}")
        ordered = sorted(values, reverse=True)
        worst = 0.0
        for v, (lo, hi) in zip(ordered, self.intervals):
            scale = max(1.0, abs(lo), abs(hi))
            outside = max(lo - v, v - hi, 0.0) / scale
            if outside > tol:
                worst = max(worst, outside)
        return worst

    def contains(self, values: Sequence[float], tol: float) -> bool:
        return self.violation(values, tol) == 0.0


def gcd_left_circulant_eigenvalues(n: int, unit_value: float, other_value: float) -> list[float]:
    """Eigenvalues of the left circulant with entry unit_value where i + j is a unit of Z_n
    and other_value elsewhere, for odd n, sorted descending."""
    c = ramanujan_sums(n)
    gap = abs(unit_value - other_value)
    values = [(unit_value - other_value) * c[0] + other_value * n]
    for k in range(1, (n - 1) // 2 + 1):
        values.extend([gap * abs(c[k]), -gap * abs(c[k])])
    return sorted(values, reverse=True)


def cf_bounds(family: ClosedFormFamily | str, n: int) -> BoundSet:
    """Rank-paired eigenvalue intervals for a bounded family at odd n.

    Raises:
        InvalidInputError: For even n (exact spectra exist there), n < 3, or a
            family without bounds
    """
    fam = parse_family(family)
    if fam not in BOUND_FAMILIES:
        raise InvalidInputError(f"No eigenvalue bounds are stated for {fam.value}")
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidInputError(f"bounds require odd n >= 3, got {n!r}")

    phi = euler_phi(n)
    # (unit entry, non-unit entry, diagonal window)
    if fam is ClosedFormFamily.SIGNLESS:
        a, b, lo, hi = 1, 0, phi - 2, phi
    elif fam is ClosedFormFamily.SIGNLESS_COMPLEMENT:
        a, b, lo, hi = 0, 1, n - phi - 2, n - phi
    elif fam is ClosedFormFamily.DISTANCE:
        a, b, lo, hi = 1, 2, -2, -1
    else:
        a, b, lo, hi = 1, 2, 2 * n - phi - 4, 2 * n - phi - 2

    centers = tuple(gcd_left_circulant_eigenvalues(n, a, b))
    return BoundSet(family=fam, n=n, centers=centers, lo_offset=float(lo), hi_offset=float(hi))
