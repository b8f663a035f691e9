"""Closed-form spectra, energies and eigenvalue bounds."""

from src.closedforms.bounds import BoundSet, cf_bounds
from src.closedforms.dispatch import (
    ClosedFormFamily,
    FormulaApplicability,
    FormulaVariant,
    applicability,
)
from src.closedforms.energies import (
    EnergyBounds,
    cf_energy,
    cf_energy_bounds,
    cf_shift,
    rank_paired_energy_bounds,
)
from src.closedforms.spectra import (
    cf_spectrum,
    cf_ucg_distance_spectrum,
    closed_form_family,
    closed_form_for,
    dl_from_laplacian,
    mn_matrix_eigenvalues,
)

__all__ = [
    "BoundSet",
    "ClosedFormFamily",
    "EnergyBounds",
    "FormulaApplicability",
    "FormulaVariant",
    "applicability",
    "cf_bounds",
    "cf_energy",
    "cf_energy_bounds",
    "cf_shift",
    "cf_spectrum",
    "cf_ucg_distance_spectrum",
    "closed_form_family",
    "closed_form_for",
    "dl_from_laplacian",
    "mn_matrix_eigenvalues",
    "rank_paired_energy_bounds",
]
