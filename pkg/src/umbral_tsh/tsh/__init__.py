"""Univariate time-space harmonic polynomials, classical families and Kailath-Segall."""

from .families import (
    classical,
    levy_sheffer,
    levy_sheffer_combination,
    levy_sheffer_series,
    m_umbra,
    orthogonal_polynomial,
    orthogonal_system,
    orthogonality_check,
    orthogonality_measure,
    process_umbra,
    resolve_parameters,
    umbral,
)
from .kailath_segall import (
    KsPoly,
    ks_assignment,
    ks_cumulant_pair,
    ks_derived_assignment,
    ks_families,
    ks_homogeneity_check,
    ks_recursive,
    ks_specialize,
    ks_umbral,
    ks_variables,
)
from .registry import FamilySpec, family_names, get_family, load_family_registry
from .univariate import (
    TshPoly,
    appell_check,
    complete_bell_form,
    is_tsh,
    martingale_check,
    q_coeffs_direct,
    q_poly,
    sheffer_split,
    tsh_coefficients,
    wald_check,
)

__all__ = [
    "TshPoly",
    "q_poly",
    "q_coeffs_direct",
    "complete_bell_form",
    "martingale_check",
    "wald_check",
    "appell_check",
    "sheffer_split",
    "tsh_coefficients",
    "is_tsh",
    "FamilySpec",
    "load_family_registry",
    "get_family",
    "family_names",
    "resolve_parameters",
    "process_umbra",
    "m_umbra",
    "classical",
    "umbral",
    "levy_sheffer",
    "levy_sheffer_combination",
    "levy_sheffer_series",
    "orthogonal_system",
    "orthogonality_measure",
    "orthogonal_polynomial",
    "orthogonality_check",
    "KsPoly",
    "ks_variables",
    "ks_recursive",
    "ks_umbral",
    "ks_homogeneity_check",
    "ks_families",
    "ks_assignment",
    "ks_specialize",
    "ks_cumulant_pair",
    "ks_derived_assignment",
]
