"""d-variate truncated exponential generating functions.

Coefficients are stored sparsely by multi-index; a :class:`MultiSeries` of
order N knows every coefficient with total degree at most N (missing keys are
zero). The coefficient g_i multiplies z^i / i!.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Sequence, Union

import sympy as sp

from ..exceptions import ConstantTermError, TruncationOrderError
from .combinatorics import MultiIndex, indices_below, indices_of_degree, multi_binomial
from .indeterminates import ONE, ZERO, PolyLike, as_poly, is_zero
from .series import Series

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiSeries:
    """Truncated d-variate EGF Σ_{|i| <= N} g_i z^i / i!."""

    dimension: int
    order: int
    coeffs: Dict[MultiIndex, sp.Expr] = field(default_factory=dict)

    @classmethod
    def from_function(
        cls, dimension: int, order: int, moment: Callable[[MultiIndex], PolyLike]
    ) -> "MultiSeries":
        coeffs = {}
        for n in range(order + 1):
            for index in indices_of_degree(dimension, n):
                value = as_poly(moment(index))
                if value != 0:
                    coeffs[index] = value
        return cls(dimension, order, coeffs)

    @classmethod
    def one(cls, dimension: int, order: int) -> "MultiSeries":
        return cls(dimension, order, {(0,) * dimension: ONE})

    @classmethod
    def from_univariate_sum(cls, series: Series, dimension: int) -> "MultiSeries":
        """φ(z_1 + ... + z_d) from the EGF of φ: g_i = φ_{|i|}."""
        return cls.from_function(dimension, series.order, lambda i: series[sum(i)])

    @classmethod
    def linear_exponential(
        cls, rates: Sequence[PolyLike], order: int
    ) -> "MultiSeries":
        """exp(Σ_j rates_j z_j), coefficients Π rates_j^{i_j}."""
        values = [as_poly(r) for r in rates]
        return cls.from_function(
            len(values),
            order,
            lambda i: sp.Mul(*(v**e for v, e in zip(values, i))),
        )

    def __getitem__(self, index: MultiIndex) -> sp.Expr:
        if sum(index) > self.order:
            raise TruncationOrderError(
                f"Index {index} exceeds the truncation order {self.order}"
            )
        return self.coeffs.get(tuple(index), ZERO)

    def map(self, function: Callable[[sp.Expr], sp.Expr]) -> "MultiSeries":
        coeffs = {}
        for index, value in self.coeffs.items():
            mapped = sp.expand(function(value))
            if mapped != 0:
                coeffs[index] = mapped
        return MultiSeries(self.dimension, self.order, coeffs)

    def shift(self, value: PolyLike) -> "MultiSeries":
        origin = (0,) * self.dimension
        coeffs = dict(self.coeffs)
        coeffs[origin] = sp.expand(self[origin] + as_poly(value))
        if coeffs[origin] == 0:
            del coeffs[origin]
        return MultiSeries(self.dimension, self.order, coeffs)

    def equals(self, other: "MultiSeries") -> bool:
        _check_shapes(self, other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(is_zero(self[k] - other[k]) for k in keys)

    def __add__(self, other: Union["MultiSeries", PolyLike]) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return self.shift(other)
        _check_shapes(self, other)
        coeffs = {}
        for index in set(self.coeffs) | set(other.coeffs):
            value = sp.expand(self[index] + other[index])
            if value != 0:
                coeffs[index] = value
        return MultiSeries(self.dimension, self.order, coeffs)

    def __neg__(self) -> "MultiSeries":
        return self.map(lambda v: -v)

    def __sub__(self, other: Union["MultiSeries", PolyLike]) -> "MultiSeries":
        if not isinstance(other, MultiSeries):
            return self.shift(-as_poly(other))
        return self + (-other)

    def __mul__(self, other: Union["MultiSeries", PolyLike]) -> "MultiSeries":
        if isinstance(other, MultiSeries):
            return mul(self, other)
        value = as_poly(other)
        return self.map(lambda v: value * v)

    __rmul__ = __mul__


def _check_shapes(f: MultiSeries, g: MultiSeries) -> None:
    if f.dimension != g.dimension or f.order != g.order:
        raise TruncationOrderError(
            f"MultiSeries shapes differ: (d={f.dimension}, N={f.order}) "
            f"!= (d={g.dimension}, N={g.order})"
        )


def _all_indices(dimension: int, order: int):
    for n in range(order + 1):
        yield from indices_of_degree(dimension, n)


def mul(f: MultiSeries, g: MultiSeries) -> MultiSeries:
    """h_i = Σ_{k <= i} C(i,k) f_k g_{i-k}."""
    _check_shapes(f, g)
    coeffs = {}
    for index in _all_indices(f.dimension, f.order):
        total = ZERO
        for k in indices_below(index):
            left = f.coeffs.get(k)
            if left is None:
                continue
            right = g.coeffs.get(tuple(a - b for a, b in zip(index, k)))
            if right is None:
                continue
            total += multi_binomial(index, k) * left * right
        total = sp.expand(total)
        if total != 0:
            coeffs[index] = total
    return MultiSeries(f.dimension, f.order, coeffs)


def _pivot(index: MultiIndex) -> int:
    return next(j for j, v in enumerate(index) if v > 0)


def exp(f: MultiSeries) -> MultiSeries:
    """exp(f) for f vanishing at the origin, through ∂_j h = h ∂_j f."""
    origin = (0,) * f.dimension
    if not is_zero(f[origin]):
        raise ConstantTermError(f"exp needs a zero constant term, got {f[origin]}")
    coeffs: Dict[MultiIndex, sp.Expr] = {origin: ONE}
    for index in _all_indices(f.dimension, f.order):
        if index == origin:
            continue
        j = _pivot(index)
        reduced = tuple(v - (1 if p == j else 0) for p, v in enumerate(index))
        total = ZERO
        for k in indices_below(reduced):
            raised = tuple(v + (1 if p == j else 0) for p, v in enumerate(k))
            derivative_coeff = f.coeffs.get(raised)
            if derivative_coeff is None:
                continue
            rest = coeffs.get(tuple(a - b for a, b in zip(reduced, k)))
            if rest is None:
                continue
            total += multi_binomial(reduced, k) * derivative_coeff * rest
        total = sp.expand(total)
        if total != 0:
            coeffs[index] = total
    return MultiSeries(f.dimension, f.order, coeffs)


def log(f: MultiSeries) -> MultiSeries:
    """log(f) for f with constant term 1, through ∂_j f = f ∂_j g."""
    origin = (0,) * f.dimension
    if not is_zero(f[origin] - 1):
        raise ConstantTermError(f"log needs constant term 1, got {f[origin]}")
    coeffs: Dict[MultiIndex, sp.Expr] = {}
    for index in _all_indices(f.dimension, f.order):
        if index == origin:
            continue
        j = _pivot(index)
        reduced = tuple(v - (1 if p == j else 0) for p, v in enumerate(index))
        total = f[index]
        for k in indices_below(reduced):
            if k == reduced:
                continue
            raised = tuple(v + (1 if p == j else 0) for p, v in enumerate(k))
            known = coeffs.get(raised)
            if known is None:
                continue
            total -= multi_binomial(reduced, k) * known * f[
                tuple(a - b for a, b in zip(reduced, k))
            ]
        total = sp.expand(total)
        if total != 0:
            coeffs[index] = total
    return MultiSeries(f.dimension, f.order, coeffs)


def power(f: MultiSeries, e: PolyLike) -> MultiSeries:
    """f^e = exp(e log f) for f with constant term 1."""
    return exp(log(f) * as_poly(e))
