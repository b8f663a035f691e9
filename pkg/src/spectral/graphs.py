"""Unitary addition Cayley graphs G_n, unitary Cayley graphs X_n and their complements.

Adjacency is stored as a dense read-only boolean matrix. Distances come
from breadth-first search only; the closed-form diameter and transmission
formulas live here as well but are never used to fill distance matrices.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd

import numpy as np

from src.spectral.errors import DisconnectedGraphError, InvalidInputError
from src.spectral.numtheory import euler_phi, is_power_of_two, units
from src.utils.logger import get_logger

logger = get_logger(__name__)

MAX_VERTICES = 3000


class GraphKind(str, Enum):
    """Which Cayley-type graph on Z_n."""

    UACG = "uacg"
    UCG = "ucg"
    UACG_COMPLEMENT = "uacg-complement"
    UCG_COMPLEMENT = "ucg-complement"

    @property
    def is_complement(self) -> bool:
        return self in (GraphKind.UACG_COMPLEMENT, GraphKind.UCG_COMPLEMENT)

    @property
    def base(self) -> "GraphKind":
        if self in (GraphKind.UCG, GraphKind.UCG_COMPLEMENT):
            return GraphKind.UCG
        return GraphKind.UACG

    def complement(self) -> "GraphKind":
        flipped = {
            GraphKind.UACG: GraphKind.UACG_COMPLEMENT,
            GraphKind.UCG: GraphKind.UCG_COMPLEMENT,
            GraphKind.UACG_COMPLEMENT: GraphKind.UACG,
            GraphKind.UCG_COMPLEMENT: GraphKind.UCG,
        }
        return flipped[self]


class VertexClass(str, Enum):
    """Vertex classes for which a transmission formula is known."""

    EVEN_POWER_OF_TWO = "even-power-of-two"
    EVEN_WITH_ODD_PRIME = "even-with-odd-prime"
    ODD_DEGREE_PHI = "odd-deg-phi"
    ODD_DEGREE_PHI_MINUS_ONE = "odd-deg-phi-minus-one"


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on the residues 0..n-1."""

    n: int
    kind: GraphKind
    adjacency: np.ndarray

    def degree(self, v: int) -> int:
        return int(self.adjacency[v].sum())

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a % self.n, b % self.n])

    def complement(self) -> "Graph":
        return build(self.kind.complement(), self.n)

    def __repr__(self) -> str:
        return f"Graph(kind={self.kind.value}, n={self.n}, edges={edge_count(self)})"


@dataclass(frozen=True)
class TransmissionProfile:
    """Per-vertex transmissions (row sums of the distance matrix)."""

    values: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def mean(self) -> float:
        return self.total / len(self.values)

    @property
    def is_regular(self) -> bool:
        return len(set(self.values)) == 1


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidInputError(f"Graphs require an integer n >= 2, got {n!r}")
    if n > MAX_VERTICES:
        raise InvalidInputError(f"n = {n} exceeds the dense limit of {MAX_VERTICES} vertices")


def build(kind: GraphKind | str, n: int) -> Graph:
    """Build G_n, X_n or one of their complements.

    Args:
        kind: Graph kind (enum member or its string value)
        n: Number of vertices, at least 2

    Returns:
        Immutable graph

    Raises:
        InvalidInputError: If n < 2 or the kind is unknown
    """
    _check_order(n)
    try:
        kind = GraphKind(kind)
    except ValueError as e:
        raise InvalidInputError(f"Unknown graph kind: {kind!r}") from e

    is_unit = np.zeros(n, dtype=bool)
    is_unit[list(units(n))] = True

    residues = np.arange(n)
    if kind.base is GraphKind.UACG:
        combined = (residues[:, None] + residues[None, :]) % n
    else:
        combined = (residues[:, None] - residues[None, :]) % n
    adjacency = is_unit[combined]
    if kind.is_complement:
        adjacency = ~adjacency
    np.fill_diagonal(adjacency, False)
    adjacency.setflags(write=False)

    logger.debug(f"Built {kind.value} graph on {n} vertices")
    return Graph(n=n, kind=kind, adjacency=adjacency)


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees in residue order."""
    return [int(d) for d in g.adjacency.sum(axis=1)]


def edge_count(g: Graph) -> int:
    return int(g.adjacency.sum()) // 2


def _bfs_levels(adjacency: np.ndarray, source: int) -> np.ndarray:
    """Breadth-first distances from source; -1 marks unreachable vertices."""
    n = adjacency.shape[0]
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    visited = np.zeros(n, dtype=bool)
    visited[source] = True
    frontier = visited.copy()
    level = 0
    while frontier.any():
        level += 1
        reached = adjacency[frontier].any(axis=0) & ~visited
        dist[reached] = level
        visited |= reached
        frontier = reached
    return dist


def is_connected(g: Graph) -> bool:
    return bool((_bfs_levels(g.adjacency, 0) >= 0).all())


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs shortest path lengths by one BFS per vertex.

    Raises:
        DisconnectedGraphError: If some pair of vertices is unreachable
    """
    rows = [_bfs_levels(g.adjacency, v) for v in range(g.n)]
    distances = np.vstack(rows)
    unreachable = np.argwhere(distances < 0)
    if unreachable.size:
        a, b = (int(x) for x in unreachable[0])
        raise DisconnectedGraphError(
            f"{g.kind.value} graph with n={g.n} is disconnected: no path between {a} and {b}"
        )
    distances.setflags(write=False)
    return distances


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


def diameter_formula(n: int) -> int:
    """Closed-form diameter of G_n for n > 2.

    2 for n prime, 2 for n = 2^m (m >= 2), 3 for even n that is not a power
    of two, and 2 for odd composite n.

    Raises:
        InvalidInputError: If n <= 2
    """
    if not isinstance(n, int) or n <= 2:
        raise InvalidInputError(f"diameter_formula requires n > 2, got {n!r}")
    if n % 2 == 0:
        return 2 if is_power_of_two(n) else 3
    return 2


def transmissions(g: Graph) -> TransmissionProfile:
    """Row sums of the distance matrix.

    Raises:
        DisconnectedGraphError: If the graph is disconnected
    """
    sums = distance_matrix(g).sum(axis=1)
    return TransmissionProfile(tuple(int(s) for s in sums))


def vertex_class(n: int, v: int) -> VertexClass:
    """Transmission class of vertex v of G_n (n > 2)."""
    if not isinstance(n, int) or n <= 2:
        raise InvalidInputError(f"vertex classes require n > 2, got {n!r}")
    if n % 2 == 0:
        if is_power_of_two(n):
            return VertexClass.EVEN_POWER_OF_TWO
        return VertexClass.EVEN_WITH_ODD_PRIME
    # (v, v) is never an edge, so the degree drops by one when v + v is a unit
    if gcd(2 * v, n) == 1:
        return VertexClass.ODD_DEGREE_PHI_MINUS_ONE
    return VertexClass.ODD_DEGREE_PHI


def transmission_formula(n: int, vertex_class: VertexClass | str) -> int:
    """Closed-form transmission of a vertex of G_n.

    Args:
        n: Vertex count, n > 2
        vertex_class: Class consistent with the parity of n

    Returns:
        2n-2-phi(n) for n = 2^m, 5n/2-2-2phi(n) for even n with an odd
        prime divisor, 2n-phi(n)-2 and 2n-phi(n)-1 for odd n vertices of
        degree phi(n) and phi(n)-1

    Raises:
        InvalidInputError: If (n, vertex_class) is inconsistent
    """
    if not isinstance(n, int) or n <= 2:
        raise InvalidInputError(f"transmission_formula requires n > 2, got {n!r}")
    try:
        vc = VertexClass(vertex_class)
    except ValueError as e:
        raise InvalidInputError(f"Unknown vertex class: {vertex_class!r}") from e

    phi = euler_phi(n)
    if vc is VertexClass.EVEN_POWER_OF_TWO:
        if not is_power_of_two(n):
            raise InvalidInputError(f"{vc.value} requires n = 2^m, got {n}")
        return 2 * n - 2 - phi
    if vc is VertexClass.EVEN_WITH_ODD_PRIME:
        if n % 2 or is_power_of_two(n):
            raise InvalidInputError(
                f"{vc.value} requires even n with an odd prime divisor, got {n}"
            )
        return 5 * n // 2 - 2 - 2 * phi
    if n % 2 == 0:
        raise InvalidInputError(f"{vc.value} requires odd n, got {n}")
    if vc is VertexClass.ODD_DEGREE_PHI:
        return 2 * n - phi - 2
    return 2 * n - phi - 1
