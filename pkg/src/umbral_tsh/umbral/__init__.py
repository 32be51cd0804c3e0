"""The umbral calculus: umbrae, their operations and symbolic Lévy processes."""

from .levy import (
    LevyTriplet,
    bernoulli_half_umbra,
    bernoulli_walk_umbra,
    boolean_levy_umbra,
    brownian_umbra,
    free_levy_umbra,
    gamma_umbra,
    levy_cumulant_umbra,
    levy_umbra,
    pascal_umbra,
    poisson_umbra,
    subordinate,
    uniform_walk_umbra,
)
from .transforms import (
    boolean_cumulants,
    boolean_moments,
    classical_cumulants,
    classical_moments,
    free_cumulants,
    free_moments,
)
from .umbra import (
    Umbra,
    add,
    comp_inverse,
    composition,
    cumulants,
    derivative,
    disjoint_sum,
    dot,
    inverse,
    multiply,
    partition_umbra,
    scale,
    special,
)

__all__ = [
    "Umbra",
    "special",
    "add",
    "scale",
    "multiply",
    "dot",
    "cumulants",
    "partition_umbra",
    "inverse",
    "derivative",
    "disjoint_sum",
    "comp_inverse",
    "composition",
    "boolean_cumulants",
    "boolean_moments",
    "free_cumulants",
    "free_moments",
    "classical_cumulants",
    "classical_moments",
    "LevyTriplet",
    "levy_umbra",
    "levy_cumulant_umbra",
    "subordinate",
    "brownian_umbra",
    "poisson_umbra",
    "gamma_umbra",
    "pascal_umbra",
    "uniform_walk_umbra",
    "bernoulli_walk_umbra",
    "bernoulli_half_umbra",
    "boolean_levy_umbra",
    "free_levy_umbra",
]
