"""Classical polynomial families from TSH polynomials, and Lévy-Sheffer systems.

Each family has two independent constructions. :func:`classical` expands the
family's generating function with truncated series; :func:`umbral` assembles
it from the TSH basis Q_k of the family's process, either as Q_k itself or as
P_k(x,t) = Σ_j Q_j(x,t) B_{k,j}(m_1, ..., m_{k-j+1}) for an m-umbra built
from the special umbrae. Parameters missing from ``params`` stay symbolic.
"""

import logging
import math
import threading
from functools import lru_cache
from typing import Dict, Mapping, Optional, Tuple

import sympy as sp

from ..algebra import series as ser
from ..algebra.combinatorics import binomial, partial_bell, stirling_first
from ..algebra.indeterminates import ONE, T, X, ZERO, PolyLike, as_poly, is_zero, symbol
from ..algebra.series import Series
from ..exceptions import DegenerateUmbraError, ParameterError
from ..umbral.levy import (
    bernoulli_half_umbra,
    bernoulli_walk_umbra,
    brownian_umbra,
    gamma_umbra,
    pascal_umbra,
    poisson_umbra,
    uniform_walk_umbra,
)
from ..umbral.umbra import (
    Umbra,
    add,
    comp_inverse,
    composition,
    cumulants,
    derivative,
    dot,
    inverse,
    partition_umbra,
    scale,
    special,
)
from .registry import FamilySpec, get_family
from .univariate import _substitute_x_powers, q_poly

logger = logging.getLogger(__name__)

Params = Optional[Mapping[str, PolyLike]]

_announced = set()
_announce_lock = threading.Lock()


def _announce(spec: FamilySpec) -> None:
    with _announce_lock:
        if spec.name in _announced:
            return
        _announced.add(spec.name)
    logger.info(f"Family '{spec.name}' normalization: {spec.normalization}")


def _is_number(value: sp.Expr) -> bool:
    return bool(value.is_number)


def resolve_parameters(name: str, params: Params = None) -> Dict[str, sp.Expr]:
    """Family parameters as exact expressions, symbolic where not given.

    Raises:
        UnknownNameError: If the family is not registered
        ParameterError: On unknown parameter names or out-of-range values
    """
    spec = get_family(name)
    given = dict(params or {})
    unknown = sorted(set(given) - set(spec.parameters))
    if unknown:
        raise ParameterError(
            f"Family '{spec.name}' takes parameters {sorted(spec.parameters)}, got {unknown}"
        )
    values = {}
    for key in spec.parameters:
        raw = given.get(key)
        values[key] = symbol(key) if raw is None else as_poly(raw)

    p = values.get("p")
    if p is not None and _is_number(p) and not (0 < p < 1):
        raise ParameterError(f"p must lie in (0, 1), got {p}")
    lam = values.get("lam")
    if lam is not None and _is_number(lam) and not lam > 0:
        raise ParameterError(f"lambda must be positive, got {lam}")
    sigma = values.get("sigma")
    if sigma is not None and _is_number(sigma) and not sigma > 0:
        raise ParameterError(f"sigma must be positive, got {sigma}")
    a = values.get("a")
    if a is not None and _is_number(a) and not a > 0:
        raise ParameterError(f"a must be positive, got {a}")
    return values


def _check_degree(k: int) -> None:
    if k < 0:
        raise ParameterError(f"Degree must be nonnegative, got {k}")


@lru_cache(maxsize=64)
def _process_umbra(name: str, items: Tuple[Tuple[str, sp.Expr], ...]) -> Umbra:
    values = dict(items)
    builders = {
        "bernoulli": lambda: uniform_walk_umbra(1),
        "euler": bernoulli_half_umbra,
        "krawtchouk": lambda: bernoulli_walk_umbra(values["p"]),
        "pseudo-narumi": lambda: uniform_walk_umbra(values["a"]),
        "hermite": lambda: brownian_umbra(values["sigma"]),
        "poisson-charlier": lambda: poisson_umbra(values["lam"]),
        "laguerre": lambda: gamma_umbra(1),
        "actuarial": lambda: gamma_umbra(values["lam"]),
        "meixner": lambda: pascal_umbra(values["p"]),
    }
    alpha = builders[name]()
    alpha.label = name
    return alpha


def process_umbra(name: str, params: Params = None) -> Umbra:
    """The umbra α of the family's process; the process is t·α."""
    spec = get_family(name)
    values = resolve_parameters(spec.name, params)
    return _process_umbra(spec.name, tuple(sorted(values.items())))


@lru_cache(maxsize=64)
def _m_umbra(name: str, items: Tuple[Tuple[str, sp.Expr], ...]) -> Umbra:
    values = dict(items)
    chi = special("singleton")
    if name == "krawtchouk":
        return comp_inverse(dot(-1, bernoulli_walk_umbra(values["p"])))
    if name == "pseudo-narumi":
        return comp_inverse(special("unity"))
    if name == "actuarial":
        return comp_inverse(dot(chi, scale(-1, chi)))
    if name == "meixner":
        return dot(chi, add(dot(-1, chi), scale(1 / values["p"], chi)))
    raise ParameterError(f"Family '{name}' is not built from an m-umbra")


def m_umbra(name: str, params: Params = None) -> Umbra:
    """The umbra whose moments m_i enter P_k = Σ_j Q_j B_{k,j}(m)."""
    spec = get_family(name)
    values = resolve_parameters(spec.name, params)
    return _m_umbra(spec.name, tuple(sorted(values.items())))


def umbral(name: str, k: int, params: Params = None) -> sp.Expr:
    """The family polynomial of degree k built from the TSH basis."""
    _check_degree(k)
    spec = get_family(name)
    alpha = process_umbra(spec.name, params)
    _announce(spec)
    if spec.construction == "tsh":
        return q_poly(alpha, k).expr
    if k == 0:
        return ONE
    if spec.construction == "stirling":
        weights = [stirling_first(k, j) for j in range(k + 1)]
    else:
        m = m_umbra(spec.name, params).moments(k)[1:]
        weights = [ZERO] + [partial_bell(k, j, m) for j in range(1, k + 1)]
    total = sum(
        (weights[j] * q_poly(alpha, j).expr for j in range(1, k + 1) if weights[j] != 0),
        ZERO,
    )
    return sp.expand(total)


def _egf(name: str, values: Dict[str, sp.Expr], order: int) -> Series:
    """Truncated EGF in z of the family, x and t kept symbolic."""
    z = Series.variable(order)
    one = Series.one(order)
    shifted_x = Series.exponential(X, order)
    if name == "bernoulli":
        # (e^z - 1)/z has EGF coefficients 1/(n+1).
        quotient = Series.from_coefficients([sp.Rational(1, n + 1) for n in range(order + 1)])
        return shifted_x * ser.power(ser.reciprocal(quotient), T)
    if name == "euler":
        mean = Series.from_coefficients([ONE] + [sp.Rational(1, 2)] * order)
        return shifted_x * ser.power(ser.reciprocal(mean), T)
    if name == "krawtchouk":
        p = values["p"]
        ratio = (1 - p) / p
        return ser.power(one + z, T - X) * ser.power(one - z * ratio, X)
    if name == "pseudo-narumi":
        # log(1+z)/z has EGF coefficients (-1)^n n!/(n+1).
        quotient = Series.from_coefficients(
            [sp.Rational((-1) ** n * math.factorial(n), n + 1) for n in range(order + 1)]
        )
        return ser.power(one + z, X) * ser.power(quotient, values["a"] * T)
    if name == "hermite":
        quadratic = [ZERO] * (order + 1)
        if order >= 2:
            quadratic[2] = -values["sigma"] ** 2 * T
        return shifted_x * ser.exp(Series.from_coefficients(quadratic))
    if name == "poisson-charlier":
        return Series.exponential(-values["lam"] * T, order) * ser.power(one + z, X)
    if name == "laguerre":
        return shifted_x * ser.power(one - z, T)
    if name == "actuarial":
        exponent = [ZERO] + [values["lam"] * T - X] + [-X] * (order - 1)
        return ser.exp(Series.from_coefficients(exponent[: order + 1]))
    if name == "meixner":
        p = values["p"]
        return ser.power(one + z * (1 / p), X) * ser.power(one + z, -X - T)
    raise ParameterError(f"No generating function for family '{name}'")


def classical(name: str, k: int, params: Params = None) -> sp.Expr:
    """Degree-k coefficient of the family's classical generating function."""
    _check_degree(k)
    spec = get_family(name)
    values = resolve_parameters(spec.name, params)
    order = max(k, 1)
    return sp.expand(_egf(spec.name, values, order)[k])


def levy_sheffer(alpha: Umbra, gamma: Umbra, k: int) -> sp.Expr:
    """V_k(x,t), the k-th moment of x·β·γ + t·α.

    The generating function is f_α(z)^t exp(x (f_γ(z) - 1)).

    Raises:
        DegenerateUmbraError: If γ has a vanishing first moment
    """
    _check_degree(k)
    if is_zero(gamma.moment(1)):
        raise DegenerateUmbraError(f"Lévy-Sheffer systems need g_1 != 0 for '{gamma.label}'")
    space = dot(X, partition_umbra(gamma))
    time = dot(T, alpha)
    expr = sum(
        (binomial(k, j) * space.moment(j) * time.moment(k - j) for j in range(k + 1)), ZERO
    )
    return sp.expand(expr)


def levy_sheffer_combination(alpha: Umbra, gamma: Umbra, k: int) -> sp.Expr:
    """V_k = Σ_i E[(x + t·β·κ_ρ)^i] B_{k,i}(g_1, ...) with ρ = α·β·γ^{<-1>}."""
    _check_degree(k)
    if is_zero(gamma.moment(1)):
        raise DegenerateUmbraError(f"Lévy-Sheffer systems need g_1 != 0 for '{gamma.label}'")
    if k == 0:
        return ONE
    rho = composition(alpha, comp_inverse(gamma))
    inner = dot(T, partition_umbra(cumulants(rho)))
    g = gamma.moments(k)[1:]
    total = ZERO
    for i in range(1, k + 1):
        weight = partial_bell(k, i, g)
        if weight == 0:
            continue
        shifted = sum((binomial(i, j) * X**j * inner.moment(i - j) for j in range(i + 1)), ZERO)
        total += weight * shifted
    return sp.expand(total)


def levy_sheffer_series(alpha: Umbra, gamma: Umbra, order: int) -> Series:
    """Series oracle f_α(z)^t exp(x (f_γ(z) - 1))."""
    return ser.power(alpha.series(order), T) * ser.exp((gamma.series(order) - 1) * X)


def orthogonal_system(name: str, params: Params = None) -> Tuple[Umbra, Umbra]:
    """The Lévy-Meixner pair (α, γ) whose V_k are orthogonal for the family.

    For Laguerre this is the Gamma system n!(-1)^n L_n^{(t-1)}(x) with
    generating function (1+z)^{-t} exp(xz/(1+z)); the family's own Q_k are
    TSH for the Gamma process but not orthogonal.
    """
    spec = get_family(name)
    if not spec.orthogonal:
        raise ParameterError(f"Family '{spec.name}' has no orthogonal Lévy-Sheffer system")
    values = resolve_parameters(spec.name, params)
    chi = special("singleton")
    if spec.name == "hermite":
        return dot(-1, brownian_umbra(values["sigma"])), chi
    if spec.name == "poisson-charlier":
        return scale(-values["lam"], special("unity")), cumulants(chi)
    if spec.name == "laguerre":
        logger.debug("Laguerre orthogonality uses the Gamma Lévy-Meixner system L_n^{(t-1)}")
        return dot(-1, chi), derivative(dot(-1, chi))
    return dot(-1, chi), m_umbra(spec.name, params)


def orthogonality_measure(alpha: Umbra, gamma: Umbra) -> Umbra:
    """Umbra of the process under which the V_k are orthogonal: -t·(α·β·γ^{<-1>})."""
    return inverse(T, composition(alpha, comp_inverse(gamma)))


def orthogonal_polynomial(name: str, k: int, params: Params = None) -> sp.Expr:
    alpha, gamma = orthogonal_system(name, params)
    return levy_sheffer(alpha, gamma, k)


def orthogonality_check(name: str, n: int, m: int, params: Params = None) -> sp.Expr:
    """E[V_n V_m] with the process moments substituted for the powers of x."""
    _check_degree(min(n, m))
    alpha, gamma = orthogonal_system(name, params)
    measure = orthogonality_measure(alpha, gamma)
    product = sp.expand(levy_sheffer(alpha, gamma, n) * levy_sheffer(alpha, gamma, m))
    return _substitute_x_powers(product, measure.moment)
