"""Case split over n: which closed-form branch describes a (family, n) pair."""

from dataclasses import dataclass
from enum import Enum

from src.spectral.errors import InvalidInputError, NoClosedFormError
from src.spectral.graphs import GraphKind
from src.spectral.linalg import MatrixFamily
from src.spectral.numtheory import is_power_of_two, is_squarefree, prime_power


class ClosedFormFamily(str, Enum):
    """Spectral families of G_n (and its complement) with closed forms or bounds."""

    SIGNLESS = "signless"
    SIGNLESS_COMPLEMENT = "signless-complement"
    LAPLACIAN = "laplacian"
    DISTANCE = "distance"
    DISTANCE_LAPLACIAN = "distance-laplacian"
    DISTANCE_SIGNLESS = "distance-signless"

    @property
    def graph_kind(self) -> GraphKind:
        if self is ClosedFormFamily.SIGNLESS_COMPLEMENT:
            return GraphKind.UACG_COMPLEMENT
        return GraphKind.UACG

    @property
    def matrix_family(self) -> MatrixFamily:
        return _MATRIX_OF[self]

    @property
    def is_distance(self) -> bool:
        return self.matrix_family.needs_distances

    @property
    def has_bounds(self) -> bool:
        return self in BOUND_FAMILIES

    @property
    def has_energy_bounds(self) -> bool:
        return self in ENERGY_BOUND_FAMILIES


_MATRIX_OF = {
    ClosedFormFamily.SIGNLESS: MatrixFamily.SIGNLESS_LAPLACIAN,
    ClosedFormFamily.SIGNLESS_COMPLEMENT: MatrixFamily.SIGNLESS_LAPLACIAN,
    ClosedFormFamily.LAPLACIAN: MatrixFamily.LAPLACIAN,
    ClosedFormFamily.DISTANCE: MatrixFamily.DISTANCE,
    ClosedFormFamily.DISTANCE_LAPLACIAN: MatrixFamily.DISTANCE_LAPLACIAN,
    ClosedFormFamily.DISTANCE_SIGNLESS: MatrixFamily.DISTANCE_SIGNLESS_LAPLACIAN,
}

BOUND_FAMILIES = frozenset(
    {
        ClosedFormFamily.SIGNLESS,
        ClosedFormFamily.SIGNLESS_COMPLEMENT,
        ClosedFormFamily.DISTANCE,
        ClosedFormFamily.DISTANCE_SIGNLESS,
    }
)

ENERGY_BOUND_FAMILIES = frozenset(
    {
        ClosedFormFamily.SIGNLESS,
        ClosedFormFamily.SIGNLESS_COMPLEMENT,
        ClosedFormFamily.DISTANCE,
    }
)


class FormulaVariant(str, Enum):
    """corrected agrees with the oracle; literal evaluates statements as printed."""

    CORRECTED = "corrected"
    LITERAL = "literal"


class Branch(str, Enum):
    EVEN = "even"
    POWER_OF_TWO = "power-of-two"
    EVEN_WITH_ODD_PRIME = "even-with-odd-prime"
    ODD_PRIME_POWER = "odd-prime-power"
    ODD = "odd"
    BOUNDS_ONLY = "bounds-only"


@dataclass(frozen=True)
class FormulaApplicability:
    """Selected branch for one (family, n) plus the facts that selected it."""

    family: ClosedFormFamily
    n: int
    branch: Branch
    even: bool
    prime_power: tuple[int, int] | None
    squarefree: bool
    caveats: tuple[str, ...] = ()

    @property
    def has_closed_form(self) -> bool:
        return self.branch is not Branch.BOUNDS_ONLY

    def require_closed_form(self) -> "FormulaApplicability":
        if not self.has_closed_form:
            raise NoClosedFormError(
                f"No closed-form {self.family.value} spectrum for n={self.n} "
                "(odd, composite and not a prime power); only bounds are known"
            )
        return self


def parse_family(family: ClosedFormFamily | str) -> ClosedFormFamily:
    try:
        return ClosedFormFamily(family)
    except ValueError as e:
        valid = ", ".join(f.value for f in ClosedFormFamily)
        raise InvalidInputError(f"Unknown family {family!r}. Valid families are: {valid}") from e


def applicability(family: ClosedFormFamily | str, n: int) -> FormulaApplicability:
    """Pick the closed-form branch for a family at n.

    Raises:
        InvalidInputError: If n < 2, or n <= 2 for a distance family
    """
    fam = parse_family(family)
    if not isinstance(n, int) or isinstance(n, bool) or n < 2:
        raise InvalidInputError(f"closed forms require an integer n >= 2, got {n!r}")
    if fam.is_distance and n <= 2:
        raise InvalidInputError(f"{fam.value} closed forms require n > 2, got {n}")

    even = n % 2 == 0
    pp = prime_power(n)
    caveats: list[str] = []

    if fam in (ClosedFormFamily.SIGNLESS, ClosedFormFamily.SIGNLESS_COMPLEMENT):
        if even:
            branch = Branch.EVEN
        elif pp is not None:
            branch = Branch.ODD_PRIME_POWER
        else:
            branch = Branch.BOUNDS_ONLY
    elif fam is ClosedFormFamily.LAPLACIAN:
        branch = Branch.EVEN if even else Branch.ODD
    elif fam is ClosedFormFamily.DISTANCE_LAPLACIAN:
        if even:
            branch = Branch.POWER_OF_TWO if is_power_of_two(n) else Branch.EVEN_WITH_ODD_PRIME
        else:
            branch = Branch.ODD
    else:
        if even:
            branch = Branch.POWER_OF_TWO if is_power_of_two(n) else Branch.EVEN_WITH_ODD_PRIME
        elif pp is not None:
            branch = Branch.ODD_PRIME_POWER
        else:
            branch = Branch.BOUNDS_ONLY

    if fam is ClosedFormFamily.DISTANCE and branch is Branch.ODD_PRIME_POWER and pp[1] == 1:
        caveats.append("closed-form distance energy does not hold for m = 1")

    return FormulaApplicability(
        family=fam,
        n=n,
        branch=branch,
        even=even,
        prime_power=pp,
        squarefree=is_squarefree(n),
        caveats=tuple(caveats),
    )
