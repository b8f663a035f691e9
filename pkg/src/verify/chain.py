"""Rank-wise evaluation of the eigenvalue chain 2 lambda^D < mu^+ < d^Q < d^L.

The principal eigenvalue of each family (largest for D, L+ and D^Q, the
zero of D^L) is split off and compared separately as
d^L_0 < mu^+_0 < lambda^D_0. Violations are recorded, never raised.
"""

from dataclasses import dataclass

from src.closedforms.dispatch import ClosedFormFamily
from src.closedforms.spectra import cf_spectrum
from src.spectral.errors import InvalidInputError, NoClosedFormError
from src.spectral.linalg import Spectrum
from src.utils.logger import get_logger
from src.verify.checks import oracle_spectrum
from src.verify.report import CheckKind, Status, VerificationReport

logger = get_logger(__name__)

CHAIN_FAMILIES = (
    ClosedFormFamily.DISTANCE,
    ClosedFormFamily.SIGNLESS,
    ClosedFormFamily.DISTANCE_SIGNLESS,
    ClosedFormFamily.DISTANCE_LAPLACIAN,
)


@dataclass(frozen=True)
class ChainRank:
    rank: int
    distance: float
    signless: float
    distance_signless: float
    distance_laplacian: float

    @property
    def satisfied(self) -> bool:
        return (
            2 * self.distance < self.signless < self.distance_signless < self.distance_laplacian
        )


@dataclass(frozen=True)
class ChainEvaluation:
    n: int
    ranks: tuple[ChainRank, ...]
    principal: tuple[float, float, float, float]
    sources: dict[str, str]

    @property
    def principal_satisfied(self) -> bool:
        distance, signless, _, distance_laplacian = self.principal
        return distance_laplacian < signless < distance

    @property
    def violated_ranks(self) -> list[int]:
        return [r.rank for r in self.ranks if not r.satisfied]


def _spectrum(family: ClosedFormFamily, n: int) -> tuple[Spectrum, str]:
    try:
        return cf_spectrum(family, n), "closed-form"
    except NoClosedFormError:
        return oracle_spectrum(family.graph_kind, family.matrix_family, n), "oracle"


def evaluate_chain(n: int) -> ChainEvaluation:
    """Evaluate the chain at every rank of G_n, closed forms first, oracle otherwise.

    Raises:
        InvalidInputError: If n < 3
    """
    if not isinstance(n, int) or n < 3:
        raise InvalidInputError(f"the eigenvalue chain requires n >= 3, got {n!r}")

    spectra: dict[ClosedFormFamily, list[float]] = {}
    sources: dict[str, str] = {}
    for family in CHAIN_FAMILIES:
        spectrum, source = _spectrum(family, n)
        spectra[family] = spectrum.descending()
        sources[family.value] = source

    distance = spectra[ClosedFormFamily.DISTANCE]
    signless = spectra[ClosedFormFamily.SIGNLESS]
    distance_signless = spectra[ClosedFormFamily.DISTANCE_SIGNLESS]
    distance_laplacian = spectra[ClosedFormFamily.DISTANCE_LAPLACIAN]

    principal = (distance[0], signless[0], distance_signless[0], distance_laplacian[-1])
    ranks = tuple(
        ChainRank(rank, *values)
        for rank, values in enumerate(
            zip(distance[1:], signless[1:], distance_signless[1:], distance_laplacian[:-1])
        )
    )
    return ChainEvaluation(n=n, ranks=ranks, principal=principal, sources=sources)


def conclusion_chain_report(n: int) -> VerificationReport:
    """Chain evaluation as a report; the status is always pass."""
    evaluation = evaluate_chain(n)
    violated = evaluation.violated_ranks
    details = (
        f"principal {'holds' if evaluation.principal_satisfied else 'violated'}; "
        f"{len(evaluation.ranks) - len(violated)}/{len(evaluation.ranks)} ranks hold"
    )
    if violated:
        details += f"; violated ranks {violated}"
    if not evaluation.principal_satisfied or violated:
        logger.info(f"eigenvalue chain at n={n}: {details}")
    return VerificationReport(
        family="conclusion-chain",
        n=n,
        kind=CheckKind.CHAIN,
        status=Status.PASS,
        details=details,
        extra={
            "principal": list(evaluation.principal),
            "principal_satisfied": evaluation.principal_satisfied,
            "violated_ranks": violated,
            "sources": evaluation.sources,
        },
    )
