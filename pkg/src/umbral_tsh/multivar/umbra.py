"""Multivariate umbrae: d-tuples known through their joint moments.

A :class:`MultiUmbra` μ = (μ_1, ..., μ_d) has moments g_i = E[μ^i] for
multi-indices i, with g_0 = 1. Dot-products go through multi-index
partitions; cumulant and partition tuples go through the log and exp of
the truncated d-variate generating function.
"""

import logging
import threading
from typing import Callable, Dict, List, Optional, Sequence

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..algebra import multiseries as mser
from ..algebra.combinatorics import (
    MultiIndex,
    indices_below,
    lower_factorial,
    multi_binomial,
    multi_index_partitions,
    unit_index,
)
from ..algebra.indeterminates import ONE, ZERO, PolyLike, as_poly
from ..algebra.multiseries import MultiSeries
from ..exceptions import ParameterError, UnknownNameError
from ..umbral.umbra import Umbra

logger = logging.getLogger(__name__)


class MultiUmbra:
    """A d-tuple of umbrae known through its joint moments.

    Args:
        dimension: Number of coordinates d.
        moment: Oracle returning g_i for a nonzero multi-index i of length d.
        label: Human-readable provenance.
    """

    def __init__(
        self, dimension: int, moment: Callable[[MultiIndex], PolyLike], label: str = "tuple"
    ):
        if dimension < 1:
            raise ParameterError(f"Dimension must be positive, got {dimension}")
        self.dimension = dimension
        self.label = label
        self._moment = moment
        self._cache: Dict[MultiIndex, sp.Expr] = {(0,) * dimension: ONE}
        self._lock = threading.RLock()

    @classmethod
    def from_series(cls, series: MultiSeries, label: str = "series") -> "MultiUmbra":
        return cls(series.dimension, series.__getitem__, label)

    @classmethod
    def from_umbra(cls, umbra: Umbra) -> "MultiUmbra":
        """The 1-tuple (α)."""
        return cls(1, lambda i: umbra.moment(i[0]), umbra.label)

    def moment(self, index: Sequence[int]) -> sp.Expr:
        key = tuple(int(v) for v in index)
        if len(key) != self.dimension:
            raise ParameterError(
                f"Multi-index {key} does not match the dimension {self.dimension}"
            )
        if any(v < 0 for v in key):
            raise ParameterError(f"Multi-index entries must be nonnegative: {key}")
        with self._lock:
            cached = self._cache.get(key)
            if cached is None:
                cached = as_poly(self._moment(key))
                self._cache[key] = cached
            return cached

    def series(self, order: int) -> MultiSeries:
        return MultiSeries.from_function(self.dimension, order, self.moment)

    def marginal(self, j: int) -> Umbra:
        """The j-th coordinate (0-based) as a univariate umbra."""
        if not 0 <= j < self.dimension:
            raise ParameterError(f"Coordinate {j} out of range for dimension {self.dimension}")
        unit = unit_index(self.dimension, j)
        return Umbra(lambda n: self.moment(tuple(n * v for v in unit)), f"{self.label}[{j}]")

    def equals(self, other: "MultiUmbra", order: int) -> bool:
        return self.dimension == other.dimension and self.series(order).equals(
            other.series(order)
        )

    def __repr__(self) -> str:
        return f"MultiUmbra({self.label}, d={self.dimension})"


class _SeriesBacked:
    """Moment oracle reading coefficients of a series rebuilt on demand."""

    def __init__(self, build: Callable[[int], MultiSeries]):
        self._build = build
        self._series: Optional[MultiSeries] = None
        self._lock = threading.Lock()

    def __call__(self, index: MultiIndex) -> sp.Expr:
        order = sum(index)
        with self._lock:
            if self._series is None or self._series.order < order:
                self._series = self._build(order)
                logger.debug(f"Rebuilt joint generating function to order {order}")
            return self._series[index]


def _check_dimensions(mu: MultiUmbra, nu: MultiUmbra) -> None:
    if mu.dimension != nu.dimension:
        raise ParameterError(
            f"Dimension mismatch: {mu.dimension} ({mu.label}) vs {nu.dimension} ({nu.label})"
        )


def dot_multi(e: PolyLike, mu: MultiUmbra) -> MultiUmbra:
    """e·μ: Σ_{λ ⊢ i} i!/(𝔪(λ)! λ!) (e)_{l(λ)} Π_columns g_column."""
    value = as_poly(e)

    def moment(index: MultiIndex) -> sp.Expr:
        total = ZERO
        for partition in multi_index_partitions(index):
            product = sp.Mul(*(mu.moment(column) for column in partition.columns))
            if product == 0:
                continue
            total += partition.coefficient() * lower_factorial(partition.length, value) * product
        return sp.expand(total)

    return MultiUmbra(mu.dimension, moment, f"{value}.{mu.label}")


def add_multi(mu: MultiUmbra, nu: MultiUmbra) -> MultiUmbra:
    """μ + ν for uncorrelated tuples."""
    _check_dimensions(mu, nu)

    def moment(index: MultiIndex) -> sp.Expr:
        total = ZERO
        for k in indices_below(index):
            rest = tuple(a - b for a, b in zip(index, k))
            total += multi_binomial(index, k) * mu.moment(k) * nu.moment(rest)
        return sp.expand(total)

    return MultiUmbra(mu.dimension, moment, f"({mu.label} + {nu.label})")


def scale_multi(c: PolyLike, mu: MultiUmbra) -> MultiUmbra:
    factor = as_poly(c)
    return MultiUmbra(
        mu.dimension, lambda i: factor ** sum(i) * mu.moment(i), f"{factor}*{mu.label}"
    )


def disjoint_sum_multi(mu: MultiUmbra, nu: MultiUmbra) -> MultiUmbra:
    _check_dimensions(mu, nu)
    return MultiUmbra(
        mu.dimension,
        lambda i: mu.moment(i) + nu.moment(i),
        f"({mu.label} (+) {nu.label})",
    )


def cumulants_multi(mu: MultiUmbra) -> MultiUmbra:
    """κ_μ, whose generating function is 1 + log f(μ, z)."""
    oracle = _SeriesBacked(lambda order: mser.log(mu.series(order)) + 1)
    return MultiUmbra(mu.dimension, oracle, f"kappa({mu.label})")


def partition_multi(mu: MultiUmbra) -> MultiUmbra:
    """β·μ, whose generating function is exp(f(μ, z) - 1)."""
    oracle = _SeriesBacked(lambda order: mser.exp(mu.series(order) - 1))
    return MultiUmbra(mu.dimension, oracle, f"beta.{mu.label}")


def linear_transform(mu: MultiUmbra, matrix: Sequence[Sequence[PolyLike]]) -> MultiUmbra:
    """The tuple μCᵀ with coordinates Σ_j C_rj μ_j, one per row of C."""
    rows = [[as_poly(entry) for entry in row] for row in matrix]
    if not rows or any(len(row) != mu.dimension for row in rows):
        raise ParameterError(
            f"Matrix must have {mu.dimension} columns to act on '{mu.label}'"
        )
    dummies = sp.symbols(f"y0:{mu.dimension}", cls=sp.Dummy)

    def moment(index: MultiIndex) -> sp.Expr:
        product = sp.Mul(
            *(sum((c * y for c, y in zip(row, dummies)), ZERO) ** power for row, power in zip(rows, index))
        )
        polynomial = sp.Poly(sp.expand(product), *dummies)
        total = ZERO
        for exponents, coefficient in polynomial.terms():
            total += coefficient * mu.moment(exponents)
        return sp.expand(total)

    return MultiUmbra(len(rows), moment, f"{mu.label}.C^T")


def _validated_covariance(covariance: Sequence[Sequence[PolyLike]], d: int) -> List[List[sp.Expr]]:
    matrix = [[as_poly(entry) for entry in row] for row in covariance]
    if len(matrix) != d or any(len(row) != d for row in matrix):
        raise ParameterError(f"Covariance must be {d}x{d}")
    if sp.Matrix(matrix) != sp.Matrix(matrix).T:
        raise ParameterError("Covariance must be symmetric")
    return matrix


def special_tuples(
    name: str, d: int, covariance: Optional[Sequence[Sequence[PolyLike]]] = None
) -> MultiUmbra:
    """Special d-tuples by name.

    ``unity`` has generating function e^{z_1 + ... + z_d}; ``gaussian`` is
    1 + ½ zΣzᵀ (Σ the identity unless ``covariance`` is given); ``bernoulli``
    and ``euler`` are w/(e^w - 1) and sech w with w = z_1 + ... + z_d, so all
    their coordinates coincide; ``singleton`` is 1 + z_1 + ... + z_d.
    """
    if d < 1:
        raise ParameterError(f"Dimension must be positive, got {d}")
    if name == "unity":
        return MultiUmbra(d, lambda i: ONE, "u")
    if name in ("gaussian", "delta"):
        sigma = _validated_covariance(
            covariance if covariance is not None else sp.eye(d).tolist(), d
        )

        def gaussian(index: MultiIndex) -> sp.Expr:
            if sum(index) != 2:
                return ZERO
            support = [j for j, v in enumerate(index) for _ in range(v)]
            return sigma[support[0]][support[1]]

        return MultiUmbra(d, gaussian, "delta")
    if name in ("bernoulli", "iota"):
        return MultiUmbra(
            d, lambda i: -sp.Rational(1, 2) if sum(i) == 1 else sp.bernoulli(sum(i)), "iota"
        )
    if name in ("euler", "eta"):
        return MultiUmbra(d, lambda i: sp.euler(sum(i)), "eta")
    if name in ("singleton", "chi"):
        return MultiUmbra(d, lambda i: ONE if sum(i) == 1 else ZERO, "chi")
    raise UnknownNameError(
        f"Unknown special tuple '{name}'; expected one of "
        "['bernoulli', 'euler', 'gaussian', 'singleton', 'unity']"
    )


def drift_tuple(m: Sequence[PolyLike]) -> MultiUmbra:
    """χ·m: first-order moments m_j, all others zero."""
    values = [as_poly(v) for v in m]
    return MultiUmbra(
        len(values),
        lambda i: values[i.index(1)] if sum(i) == 1 else ZERO,
        "chi.m",
    )


class MultiLevyTriplet(BaseModel):
    """Drift m, Gaussian square root C (Σ = CCᵀ) and jump cumulant tuple γ."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    drift: List[sp.Expr] = Field(..., description="Drift vector m of length d")
    scale: List[List[sp.Expr]] = Field(..., description="d x d matrix C with Σ = CCᵀ")
    jumps: Optional[MultiUmbra] = Field(None, description="Tuple γ of Lévy measure moments")

    @field_validator("drift", mode="before")
    @classmethod
    def _coerce_drift(cls, value: Sequence[PolyLike]) -> List[sp.Expr]:
        return [as_poly(v) for v in value]

    @field_validator("scale", mode="before")
    @classmethod
    def _coerce_scale(cls, value: Sequence[Sequence[PolyLike]]) -> List[List[sp.Expr]]:
        return [[as_poly(v) for v in row] for row in value]

    @model_validator(mode="after")
    def _check_dimensions(self) -> "MultiLevyTriplet":
        d = len(self.drift)
        if d < 1:
            raise ParameterError("Drift must have at least one coordinate")
        if len(self.scale) != d or any(len(row) != d for row in self.scale):
            raise ParameterError(f"Scale matrix must be {d}x{d} to match the drift")
        if self.jumps is not None and self.jumps.dimension != d:
            raise ParameterError(
                f"Jump tuple has dimension {self.jumps.dimension}, expected {d}"
            )
        return self

    @property
    def dimension(self) -> int:
        return len(self.drift)

    @property
    def covariance(self) -> List[List[sp.Expr]]:
        c = sp.Matrix(self.scale)
        return (c * c.T).applyfunc(sp.expand).tolist()

    @classmethod
    def from_covariance(
        cls,
        covariance: Sequence[Sequence[PolyLike]],
        drift: Optional[Sequence[PolyLike]] = None,
        jumps: Optional[MultiUmbra] = None,
    ) -> "MultiLevyTriplet":
        """Triplet with C the Cholesky factor of a numeric covariance Σ."""
        d = len(covariance)
        sigma = sp.Matrix(_validated_covariance(covariance, d))
        if sigma.is_positive_definite is False:
            raise ParameterError(f"Covariance {covariance} is not positive definite")
        try:
            root = sigma.cholesky(hermitian=False)
        except ValueError as exc:
            raise ParameterError(f"Covariance is not positive definite: {exc}") from exc
        return cls(
            drift=list(drift) if drift is not None else [0] * d,
            scale=root.tolist(),
            jumps=jumps,
        )


def levy_cumulant_tuple(triplet: MultiLevyTriplet) -> MultiUmbra:
    """χ·m ∔ δCᵀ ∔ γ."""
    d = triplet.dimension
    gaussian = linear_transform(special_tuples("gaussian", d), triplet.scale)
    result = disjoint_sum_multi(drift_tuple(triplet.drift), gaussian)
    if triplet.jumps is not None:
        result = disjoint_sum_multi(result, triplet.jumps)
    return result


def levy_multi(triplet: MultiLevyTriplet) -> MultiUmbra:
    """β·(χ·m ∔ δCᵀ ∔ γ); the process is t·(this tuple)."""
    result = partition_multi(levy_cumulant_tuple(triplet))
    result.label = f"levy_multi(d={triplet.dimension})"
    return result


def brownian_tuple(covariance: Optional[Sequence[Sequence[PolyLike]]] = None, d: int = 2) -> MultiUmbra:
    """β·δ_Σ: Brownian motion with covariance Σ per unit time."""
    if covariance is not None:
        d = len(covariance)
    result = partition_multi(special_tuples("gaussian", d, covariance))
    result.label = "brownian"
    return result
