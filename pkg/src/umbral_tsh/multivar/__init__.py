"""Multivariate umbrae, Lévy processes in R^d and their TSH polynomials."""

from .tsh import (
    MULTI_FAMILIES,
    classical_multi,
    coordinates,
    family_multi,
    is_tsh_multi,
    levy_sheffer_multi,
    levy_sheffer_multi_series,
    martingale_check_multi,
    process_tuple,
    q_poly_multi,
    tsh_coefficients_multi,
)
from .umbra import (
    MultiLevyTriplet,
    MultiUmbra,
    add_multi,
    brownian_tuple,
    cumulants_multi,
    disjoint_sum_multi,
    dot_multi,
    drift_tuple,
    levy_cumulant_tuple,
    levy_multi,
    linear_transform,
    partition_multi,
    scale_multi,
    special_tuples,
)

__all__ = [
    "MultiUmbra",
    "MultiLevyTriplet",
    "dot_multi",
    "add_multi",
    "scale_multi",
    "disjoint_sum_multi",
    "cumulants_multi",
    "partition_multi",
    "linear_transform",
    "special_tuples",
    "drift_tuple",
    "levy_cumulant_tuple",
    "levy_multi",
    "brownian_tuple",
    "MULTI_FAMILIES",
    "coordinates",
    "q_poly_multi",
    "martingale_check_multi",
    "tsh_coefficients_multi",
    "is_tsh_multi",
    "process_tuple",
    "family_multi",
    "classical_multi",
    "levy_sheffer_multi",
    "levy_sheffer_multi_series",
]
