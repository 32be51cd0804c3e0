"""TSH polynomials, families and Lévy-Sheffer systems of multivariate processes."""

import logging
from typing import List, Mapping, Optional, Sequence

import sympy as sp

from ..algebra import multiseries as mser
from ..algebra import series as ser
from ..algebra.combinatorics import MultiIndex, indices_below, multi_binomial, unit_index
from ..algebra.indeterminates import ONE, S, T, ZERO, PolyLike, as_poly, indexed_symbols, is_zero
from ..algebra.multiseries import MultiSeries
from ..algebra.series import Series
from ..checks import IdentityCheck, compare
from ..exceptions import DegenerateUmbraError, ParameterError, UnknownNameError
from ..tsh.univariate import DerivedUmbrae
from .umbra import (
    MultiUmbra,
    add_multi,
    brownian_tuple,
    dot_multi,
    partition_multi,
    scale_multi,
    special_tuples,
)

logger = logging.getLogger(__name__)

_DERIVED = DerivedUmbrae()

MULTI_FAMILIES = ("hermite", "bernoulli", "euler")


def coordinates(d: int) -> List[sp.Symbol]:
    """x_1, ..., x_d."""
    return indexed_symbols("x", d)


def _monomial(xs: Sequence[sp.Symbol], index: Sequence[int]) -> sp.Expr:
    return sp.Mul(*(x**power for x, power in zip(xs, index)))


def _index(mu: MultiUmbra, i: Sequence[int]) -> MultiIndex:
    index = tuple(int(v) for v in i)
    if len(index) != mu.dimension or any(v < 0 for v in index):
        raise ParameterError(f"Multi-index {index} invalid for dimension {mu.dimension}")
    return index


def _backward(mu: MultiUmbra) -> MultiUmbra:
    return _DERIVED.get(mu, "-t", lambda: dot_multi(-T, mu))


def _elapsed(mu: MultiUmbra) -> MultiUmbra:
    return _DERIVED.get(mu, "t-s", lambda: dot_multi(T - S, mu))


def q_poly_multi(mu: MultiUmbra, i: Sequence[int]) -> sp.Expr:
    """Q_i(x,t) = Σ_{k ≤ i} C(i,k) x^{i-k} E[(-t·μ)^k]."""
    index = _index(mu, i)
    xs = coordinates(mu.dimension)
    backward = _backward(mu)
    total = ZERO
    for k in indices_below(index):
        rest = tuple(a - b for a, b in zip(index, k))
        total += multi_binomial(index, k) * _monomial(xs, rest) * backward.moment(k)
    return sp.expand(total)


def martingale_check_multi(mu: MultiUmbra, i: Sequence[int]) -> IdentityCheck:
    """Σ_{k ≤ i} C(i,k) E[(x + (t-s)·μ)^k] E[(-t·μ)^{i-k}] = Q_i(x, s)."""
    index = _index(mu, i)
    xs = coordinates(mu.dimension)
    elapsed = _elapsed(mu)
    backward = _backward(mu)
    lhs = ZERO
    for k in indices_below(index):
        shifted = ZERO
        for l in indices_below(k):
            rest = tuple(a - b for a, b in zip(k, l))
            shifted += multi_binomial(k, l) * _monomial(xs, l) * elapsed.moment(rest)
        remaining = tuple(a - b for a, b in zip(index, k))
        lhs += multi_binomial(index, k) * shifted * backward.moment(remaining)
    rhs = sp.expand(q_poly_multi(mu, index).subs(T, S))
    return compare(f"martingale[{mu.label}] i={index}", sp.expand(lhs), rhs)


def tsh_coefficients_multi(
    mu: MultiUmbra, p0: Mapping[Sequence[int], PolyLike], v: Sequence[int]
) -> sp.Expr:
    """P(x,t) = Σ_{k ≤ v} p_k(t) x^k, p_k(t) = Σ_{k ≤ i ≤ v} C(i,k) p_i(0) E[(-t·μ)^{i-k}]."""
    top = _index(mu, v)
    initial = {tuple(int(a) for a in key): as_poly(value) for key, value in p0.items()}
    outside = [key for key, value in initial.items() if value != 0 and any(a > b for a, b in zip(key, top))]
    if outside:
        raise ParameterError(f"Initial coefficients {outside} lie outside the box below {top}")
    xs = coordinates(mu.dimension)
    backward = _backward(mu)
    total = ZERO
    for i, value in initial.items():
        if value == 0:
            continue
        for k in indices_below(i):
            rest = tuple(a - b for a, b in zip(i, k))
            total += multi_binomial(i, k) * value * backward.moment(rest) * _monomial(xs, k)
    return sp.expand(total)


def is_tsh_multi(mu: MultiUmbra, poly: PolyLike, name: str = "") -> IdentityCheck:
    """Decide whether P(x,t) is TSH for t·μ by rebuilding it from P(x, 0)."""
    expr = as_poly(poly)
    xs = coordinates(mu.dimension)
    initial_poly = sp.Poly(sp.expand(expr.subs(T, 0)), *xs)
    initial = dict(initial_poly.terms())
    top = [0] * mu.dimension
    for monomial in sp.Poly(expr, *xs).monoms():
        top = [max(a, b) for a, b in zip(top, monomial)]
    rebuilt = tsh_coefficients_multi(mu, initial, top)
    return compare(name or f"tsh[{mu.label}]", expr, rebuilt)


def process_tuple(name: str, d: int, covariance: Optional[Sequence[Sequence[PolyLike]]] = None) -> MultiUmbra:
    """The tuple μ whose process t·μ gives the multivariate family as Q_i."""
    if name == "hermite":
        return brownian_tuple(covariance if covariance is not None else sp.eye(d).tolist())
    if name == "bernoulli":
        result = dot_multi(-1, special_tuples("bernoulli", d))
    elif name == "euler":
        cosh = dot_multi(-1, special_tuples("euler", d))
        result = scale_multi(sp.Rational(1, 2), add_multi(special_tuples("unity", d), cosh))
    else:
        raise UnknownNameError(f"Unknown multivariate family '{name}'; expected one of {list(MULTI_FAMILIES)}")
    result.label = name
    return result


def family_multi(
    name: str, i: Sequence[int], covariance: Optional[Sequence[Sequence[PolyLike]]] = None
) -> sp.Expr:
    """Multivariate Hermite, Bernoulli or Euler polynomial of index i as Q_i."""
    d = len(i)
    return q_poly_multi(process_tuple(name, d, covariance), i)


def classical_multi(
    name: str, i: Sequence[int], covariance: Optional[Sequence[Sequence[PolyLike]]] = None
) -> sp.Expr:
    """Coefficient of z^i/i! in the family's d-variate generating function."""
    index = tuple(int(v) for v in i)
    d = len(index)
    order = max(sum(index), 1)
    xs = coordinates(d)
    linear = MultiSeries.linear_exponential(xs, order)
    if name == "hermite":
        sigma = covariance if covariance is not None else sp.eye(d).tolist()
        gaussian = special_tuples("gaussian", d, sigma)
        quadratic = MultiSeries.from_function(
            d, order, lambda k: -T * gaussian.moment(k) if sum(k) == 2 else ZERO
        )
        return sp.expand((linear * mser.exp(quadratic))[index])
    if name == "bernoulli":
        quotient = Series.from_coefficients([sp.Rational(1, n + 1) for n in range(order + 1)])
        factor = ser.power(ser.reciprocal(quotient), T)
    elif name == "euler":
        mean = Series.from_coefficients([ONE] + [sp.Rational(1, 2)] * order)
        factor = ser.power(ser.reciprocal(mean), T)
    else:
        raise UnknownNameError(f"Unknown multivariate family '{name}'; expected one of {list(MULTI_FAMILIES)}")
    return sp.expand((linear * MultiSeries.from_univariate_sum(factor, d))[index])


def levy_sheffer_multi(mu: MultiUmbra, nu: MultiUmbra, k: Sequence[int]) -> sp.Expr:
    """V_k(x,t) = E[(t·μ + (x_1 + ... + x_d)·β·ν)^k].

    Raises:
        DegenerateUmbraError: If a first-order moment of ν vanishes
    """
    index = _index(mu, k)
    if nu.dimension != mu.dimension:
        raise ParameterError(f"Dimension mismatch: {mu.dimension} vs {nu.dimension}")
    for j in range(nu.dimension):
        if is_zero(nu.moment(unit_index(nu.dimension, j))):
            raise DegenerateUmbraError(
                f"Lévy-Sheffer systems need nonzero first-order moments of '{nu.label}'"
            )
    total_x = sum(coordinates(mu.dimension), ZERO)
    time = dot_multi(T, mu)
    space = dot_multi(total_x, partition_multi(nu))
    total = ZERO
    for j in indices_below(index):
        rest = tuple(a - b for a, b in zip(index, j))
        total += multi_binomial(index, j) * time.moment(j) * space.moment(rest)
    return sp.expand(total)


def levy_sheffer_multi_series(mu: MultiUmbra, nu: MultiUmbra, order: int) -> MultiSeries:
    """Series oracle g(z)^t exp((x_1 + ... + x_d)(h(z) - 1))."""
    total_x = sum(coordinates(mu.dimension), ZERO)
    return mser.power(mu.series(order), T) * mser.exp((nu.series(order) - 1) * total_x)
