"""Dense symmetric matrices, circulants, the Jacobi eigenvalue oracle and energies.

The Jacobi solver is the independent oracle every closed form is checked
against, so it is written out here instead of delegating to LAPACK.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from src.spectral.errors import (
    InvalidInputError,
    MatrixTooLargeError,
    NoConvergenceError,
)
from src.spectral.graphs import Graph, degree_sequence, distance_matrix, edge_count, transmissions
from src.utils.logger import get_logger

logger = get_logger(__name__)

MAX_ORDER = 3000
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
CLUSTER_TOL = 1e-7


class MatrixFamily(str, Enum):
    """Matrices attached to a graph."""

    ADJACENCY = "adjacency"
    LAPLACIAN = "laplacian"
    SIGNLESS_LAPLACIAN = "signless-laplacian"
    DISTANCE = "distance"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    DISTANCE_SIGNLESS_LAPLACIAN = "distance-signless-laplacian"

    @property
    def needs_distances(self) -> bool:
        return self in (
            MatrixFamily.DISTANCE,
            MatrixFamily.DISTANCE_LAPLACIAN,
            MatrixFamily.DISTANCE_SIGNLESS_LAPLACIAN,
        )


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Real symmetric matrix with finite entries, stored read-only."""

    data: np.ndarray

    def __post_init__(self) -> None:
        data = np.array(self.data, dtype=np.float64)
        if data.ndim != 2 or data.shape[0] != data.shape[1] or data.shape[0] < 1:
            raise InvalidInputError(f"SymMatrix needs a non-empty square array, got {data.shape}")
        if data.shape[0] > MAX_ORDER:
            raise MatrixTooLargeError(f"order {data.shape[0]} exceeds the dense limit {MAX_ORDER}")
        if not np.isfinite(data).all():
            raise InvalidInputError("SymMatrix entries must be finite")
        if not np.array_equal(data, data.T):
            raise InvalidInputError("SymMatrix must be exactly symmetric")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def order(self) -> int:
        return self.data.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.data))

    @property
    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.data))


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalue multiset as (value, multiplicity) pairs."""

    pairs: tuple[tuple[float, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[float], cluster_tol: float = CLUSTER_TOL) -> "Spectrum":
        """Cluster sorted values closer than cluster_tol * max(1, |value|)."""
        ordered = sorted(float(v) for v in values)
        groups: list[list[float]] = []
        for v in ordered:
            if groups:
                anchor = groups[-1][0]
                if v - anchor <= cluster_tol * max(1.0, abs(anchor)):
                    groups[-1].append(v)
                    continue
            groups.append([v])
        return cls(tuple((float(np.mean(g)), len(g)) for g in groups))

    @classmethod
    def from_pairs(
        cls, pairs: Iterable[tuple[float, int]], cluster_tol: float = CLUSTER_TOL
    ) -> "Spectrum":
        """Build from (value, multiplicity) pairs; zero multiplicities are dropped."""
        values: list[float] = []
        for value, mult in pairs:
            if mult < 0:
                raise InvalidInputError(f"negative multiplicity {mult} for eigenvalue {value}")
            values.extend([float(value)] * int(mult))
        return cls.from_values(values, cluster_tol)

    def values(self) -> list[float]:
        """Expand to the ascending list of n eigenvalues."""
        return [v for v, m in self.pairs for _ in range(m)]

    def descending(self) -> list[float]:
        return self.values()[::-1]

    @property
    def total(self) -> int:
        return sum(m for _, m in self.pairs)

    @property
    def trace(self) -> float:
        return sum(v * m for v, m in self.pairs)

    @property
    def mean(self) -> float:
        return self.trace / self.total

    def multiplicity(self, value: float, tol: float = CLUSTER_TOL) -> int:
        return sum(m for v, m in self.pairs if abs(v - value) <= tol * max(1.0, abs(value)))


@dataclass(frozen=True)
class EnergyValue:
    """Energy sum |eigenvalue - shift| together with the shift used.

    caveat marks values whose printed formula is known not to hold for the
    given n; literal then carries what the printed formula evaluates to.
    """

    value: float
    shift: float
    caveat: bool = False
    literal: float | None = None
    note: str = ""


@dataclass(frozen=True)
class SpectrumComparison:
    equal: bool
    max_deviation: float
    order_mismatch: bool = False

    def __bool__(self) -> bool:
        return self.equal


def right_circulant(row: Sequence[float]) -> np.ndarray:
    """C_R(c): row i is c shifted right by i, entry (i, j) = c[(j - i) mod n]."""
    c = np.asarray(row, dtype=np.float64)
    if c.ndim != 1 or c.size < 1:
        raise InvalidInputError("circulant rows must be non-empty vectors")
    n = c.size
    idx = np.arange(n)
    return c[(idx[None, :] - idx[:, None]) % n]


def left_circulant(row: Sequence[float]) -> np.ndarray:
    """C_L(c): row i is c shifted left by i, entry (i, j) = c[(i + j) mod n]."""
    c = np.asarray(row, dtype=np.float64)
    if c.ndim != 1 or c.size < 1:
        raise InvalidInputError("circulant rows must be non-empty vectors")
    n = c.size
    idx = np.arange(n)
    return c[(idx[None, :] + idx[:, None]) % n]


def cyclic_reversal(n: int) -> np.ndarray:
    """Orthogonal permutation Pi with Pi[0, 0] = 1 and Pi[i, n - i] = 1, so C_L = Pi C_R."""
    pi = np.zeros((n, n))
    idx = np.arange(n)
    pi[idx, (-idx) % n] = 1.0
    return pi


def circulant_eigenvalues(row: Sequence[float]) -> np.ndarray:
    """Complex eigenvalues lambda_k = sum_j c_j w^(jk) of C_R(c), k = 0..n-1."""
    c = np.asarray(row, dtype=np.float64)
    # fft uses w^-1; for real c that only conjugates, leaving moduli and the real
    # eigenvalues lambda_0, lambda_{n/2} unchanged
    return np.conj(np.fft.fft(c))


def left_circulant_spectrum(row: Sequence[float]) -> Spectrum:
    """Eigenvalues of C_L(c) from the right-circulant eigenvalues.

    lambda_0 and, for even n, lambda_{n/2} stay; every other conjugate pair
    (lambda_k, lambda_{n-k}) becomes +|lambda_k| and -|lambda_k|.
    """
    lam = circulant_eigenvalues(row)
    n = lam.size
    values = [lam[0].real]
    if n % 2 == 0:
        values.append(lam[n // 2].real)
        upper = (n - 2) // 2
    else:
        upper = (n - 1) // 2
    for k in range(1, upper + 1):
        modulus = abs(lam[k])
        values.extend([modulus, -modulus])
    return Spectrum.from_values(values)


def build_matrix(family: MatrixFamily | str, g: Graph) -> SymMatrix:
    """Build a graph matrix.

    Raises:
        DisconnectedGraphError: For distance families on a disconnected graph
        InvalidInputError: For an unknown family
    """
    try:
        family = MatrixFamily(family)
    except ValueError as e:
        raise InvalidInputError(f"Unknown matrix family: {family!r}") from e

    adjacency = g.adjacency.astype(np.float64)
    if family is MatrixFamily.ADJACENCY:
        return SymMatrix(adjacency)
    if family in (MatrixFamily.LAPLACIAN, MatrixFamily.SIGNLESS_LAPLACIAN):
        degrees = np.diag(np.asarray(degree_sequence(g), dtype=np.float64))
        sign = -1.0 if family is MatrixFamily.LAPLACIAN else 1.0
        return SymMatrix(degrees + sign * adjacency)

    distances = distance_matrix(g).astype(np.float64)
    if family is MatrixFamily.DISTANCE:
        return SymMatrix(distances)
    tr = np.diag(distances.sum(axis=1))
    if family is MatrixFamily.DISTANCE_LAPLACIAN:
        return SymMatrix(tr - distances)
    return SymMatrix(tr + distances)


def energy_shift(family: MatrixFamily | str, g: Graph) -> float:
    """Centering constant of a family's energy, from exact graph integers.

    0 for adjacency and distance, average degree 2m/n for the Laplacians,
    mean transmission for the distance Laplacians.
    """
    family = MatrixFamily(family)
    if family in (MatrixFamily.ADJACENCY, MatrixFamily.DISTANCE):
        return 0.0
    if family in (MatrixFamily.LAPLACIAN, MatrixFamily.SIGNLESS_LAPLACIAN):
        return 2 * edge_count(g) / g.n
    return transmissions(g).mean


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2)))


def jacobi_eigenvalues(
    m: SymMatrix, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> np.ndarray:
    """Ascending eigenvalues by cyclic Jacobi rotations.

    Converged once the off-diagonal Frobenius norm falls below
    tol * ||M||_F. Works on a private copy.

    Raises:
        NoConvergenceError: If max_sweeps sweeps do not converge
    """
    a = np.array(m.data, dtype=np.float64)
    n = a.shape[0]
    scale = m.frobenius_norm
    if n == 1 or scale == 0.0:
        return np.sort(np.diag(a))
    threshold = tol * scale

    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off < threshold:
            logger.debug(f"Jacobi converged on order {n} after {sweep} sweeps")
            return np.sort(np.diag(a))
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0 or abs(apq) < 1e-3 * threshold / n:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

    raise NoConvergenceError(
        f"Jacobi did not converge on order {n} within {max_sweeps} sweeps "
        f"(off-diagonal norm {_off_diagonal_norm(a):.3e})"
    )


def jacobi_spectrum(
    m: SymMatrix,
    tol: float = JACOBI_TOL,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
    cluster_tol: float = CLUSTER_TOL,
) -> Spectrum:
    """Spectrum of a symmetric matrix via jacobi_eigenvalues, clustered."""
    return Spectrum.from_values(jacobi_eigenvalues(m, tol, max_sweeps), cluster_tol)


def spectrum_equal(a: Spectrum, b: Spectrum, tol: float) -> SpectrumComparison:
    """Index-wise comparison of two expanded, sorted spectra.

    Values match when |a_i - b_i| <= tol * max(1, |a_i|, |b_i|); the
    reported deviation is the largest such scaled difference.
    """
    if a.total != b.total:
        return SpectrumComparison(equal=False, max_deviation=float("inf"), order_mismatch=True)
    worst = 0.0
    for x, y in zip(a.values(), b.values()):
        worst = max(worst, abs(x - y) / max(1.0, abs(x), abs(y)))
    return SpectrumComparison(equal=worst <= tol, max_deviation=worst)


def energy(s: Spectrum, shift: float = 0.0) -> EnergyValue:
    """Sum of multiplicity * |value - shift|."""
    total = sum(m * abs(v - shift) for v, m in s.pairs)
    return EnergyValue(value=float(total), shift=float(shift))


def transmission_regular_spectra(distance: Spectrum, k: float) -> tuple[Spectrum, Spectrum]:
    """Distance Laplacian {k - lambda} and distance signless Laplacian {k + lambda}
    spectra of a k-transmission-regular graph."""
    laplacian = Spectrum.from_pairs((k - v, m) for v, m in distance.pairs)
    signless = Spectrum.from_pairs((k + v, m) for v, m in distance.pairs)
    return laplacian, signless
