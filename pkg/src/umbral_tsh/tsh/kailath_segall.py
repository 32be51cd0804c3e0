"""Kailath-Segall polynomials P_n(x_1, ..., x_n) and their family specializations.

The x_j stand for the variations of a process; they are formal indeterminates
here. P_n satisfies the alternating recursion and n! P_n is the n-th moment
of β·[(χ·χ)p], where p has moments x_i and χ·χ has moments (-1)^{i-1}(i-1)!.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

import sympy as sp

from ..algebra.indeterminates import ONE, T, X, ZERO, PolyLike, as_poly, indexed_symbols, symbol
from ..checks import IdentityCheck, compare
from ..exceptions import ParameterError, UnknownNameError
from ..umbral.levy import brownian_umbra
from ..umbral.umbra import (
    Umbra,
    add,
    cumulants,
    dot,
    inverse,
    multiply,
    partition_umbra,
    scale,
    special,
)
from .families import Params, resolve_parameters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KsPoly:
    """Degree-n Kailath-Segall polynomial in x_1..x_n."""

    n: int
    expr: sp.Expr

    @property
    def variables(self) -> List[sp.Symbol]:
        return ks_variables(self.n)

    def substitute(self, values: List[PolyLike]) -> sp.Expr:
        """P_n with x_j replaced by ``values[j-1]``."""
        if len(values) < self.n:
            raise ParameterError(f"P_{self.n} needs {self.n} values, got {len(values)}")
        mapping = {var: as_poly(value) for var, value in zip(self.variables, values)}
        return sp.expand(self.expr.subs(mapping, simultaneous=True))

    def equals(self, other: "KsPoly") -> bool:
        return self.n == other.n and sp.expand(self.expr - other.expr) == 0


def ks_variables(n: int) -> List[sp.Symbol]:
    return indexed_symbols("x", n)


@lru_cache(maxsize=None)
def _recursive(n: int) -> sp.Expr:
    if n == 0:
        return ONE
    xs = ks_variables(n)
    total = sum(((-1) ** (j + 1) * _recursive(n - j) * xs[j - 1] for j in range(1, n + 1)), ZERO)
    return sp.expand(sp.Rational(1, n) * total)


def ks_recursive(n: int) -> KsPoly:
    """P_n = (1/n)(P_{n-1} x_1 - P_{n-2} x_2 + ... ± P_0 x_n)."""
    if n < 0:
        raise ParameterError(f"Degree must be nonnegative, got {n}")
    return KsPoly(n, _recursive(n))


def ks_umbral(n: int) -> KsPoly:
    """P_n = E[(β·[(χ·χ)p])^n] / n!."""
    if n < 0:
        raise ParameterError(f"Degree must be nonnegative, got {n}")
    xs = ks_variables(n)
    variations = Umbra(lambda i: xs[i - 1], "p")
    signed = multiply(cumulants(special("singleton")), variations)
    moment = partition_umbra(signed).moment(n)
    return KsPoly(n, sp.expand(moment / math.factorial(n)))


def ks_homogeneity_check(n: int, a: PolyLike = None) -> IdentityCheck:
    """P_n(a x_1, a² x_2, ..., aⁿ x_n) = aⁿ P_n(x_1, ..., x_n)."""
    factor = symbol("a") if a is None else as_poly(a)
    poly = ks_recursive(n)
    scaled = poly.substitute([factor**j * x for j, x in enumerate(poly.variables, start=1)])
    return compare(f"ks-homogeneity n={n}", scaled, sp.expand(factor**n * poly.expr))


# Each family maps (j, params) to x_j, with the normalizing factor of P_k.
_Assignment = Callable[[int, Dict[str, sp.Expr]], sp.Expr]


def _hermite(j: int, v: Dict[str, sp.Expr]) -> sp.Expr:
    if j == 1:
        return X
    return v["sigma"] ** 2 * T if j == 2 else ZERO


def _poisson_charlier(j: int, v: Dict[str, sp.Expr]) -> sp.Expr:
    return X - v["lam"] * T if j == 1 else X


def _laguerre(j: int, v: Dict[str, sp.Expr]) -> sp.Expr:
    return T - X if j == 1 else T


def _actuarial(j: int, v: Dict[str, sp.Expr]) -> sp.Expr:
    if j == 1:
        return v["lam"] * T - X
    return (-1) ** j * X / sp.factorial(j - 1)


def _meixner(j: int, v: Dict[str, sp.Expr]) -> sp.Expr:
    return (v["p"] ** (-j) - 1) * X - T


_SPECIALIZATIONS: Dict[str, Tuple[_Assignment, Callable[[int], sp.Expr], bool]] = {
    # name: (x_j assignment, factor in k, assignment is the derived one with x_j -> (-1)^j x_j)
    "hermite": (_hermite, sp.factorial, False),
    "poisson-charlier": (_poisson_charlier, sp.factorial, False),
    "laguerre": (_laguerre, lambda k: (-1) ** k * sp.factorial(k), True),
    "actuarial": (_actuarial, sp.factorial, False),
    "meixner": (_meixner, sp.factorial, False),
}


def ks_families() -> List[str]:
    return list(_SPECIALIZATIONS)


def _specialization(family: str):
    entry = _SPECIALIZATIONS.get(family) or _SPECIALIZATIONS.get(family.replace("_", "-"))
    if entry is None:
        raise UnknownNameError(
            f"No Kailath-Segall specialization for '{family}'; expected one of {ks_families()}"
        )
    return entry


def ks_assignment(family: str, n: int, params: Params = None) -> List[sp.Expr]:
    """The values x_1..x_n substituted for the family."""
    assign, _, _ = _specialization(family)
    values = resolve_parameters(family.replace("_", "-"), params)
    return [sp.expand(assign(j, values)) for j in range(1, n + 1)]


def ks_specialize(family: str, k: int, params: Params = None) -> sp.Expr:
    """factor(k) · P_k(x_1, ..., x_k) under the family's assignment.

    The actuarial assignment x_1 = λt - x, x_n = (-1)^n x/(n-1)! gives the
    polynomials with generating function exp(λtz + x(1 - e^z)).
    """
    _, factor, _ = _specialization(family)
    values = ks_assignment(family, k, params)
    return sp.expand(factor(k) * ks_recursive(k).substitute(values))


def ks_cumulant_pair(family: str, params: Params = None) -> Tuple[Umbra, Umbra]:
    """Umbrae (A, B) with κ_A ∔ κ_B ≡ (χ·χ)p for the family's x_j."""
    _specialization(family)
    name = family.replace("_", "-")
    v = resolve_parameters(name, params)
    chi = special("singleton")
    unity = special("unity")
    if name == "hermite":
        return dot(X, unity), inverse(T, brownian_umbra(v["sigma"]))
    if name == "poisson-charlier":
        return dot(X, chi), dot(-v["lam"] * T, unity)
    if name == "laguerre":
        return dot(X, unity), inverse(T, special("boolean_unity"))
    if name == "actuarial":
        return dot(v["lam"] * T, unity), inverse(X, special("bell"))
    return dot(X, add(dot(-1, chi), scale(1 / v["p"], chi))), inverse(T, chi)


def ks_derived_assignment(family: str, n: int, params: Params = None) -> List[sp.Expr]:
    """x_1..x_n read off from E[κ_A^j] + E[κ_B^j] = (-1)^{j-1}(j-1)! x_j."""
    first, second = ks_cumulant_pair(family, params)
    left, right = cumulants(first), cumulants(second)
    _, _, flipped = _specialization(family)
    values = []
    for j in range(1, n + 1):
        value = (left.moment(j) + right.moment(j)) / ((-1) ** (j - 1) * sp.factorial(j - 1))
        values.append(sp.expand((-1) ** j * value if flipped else value))
    return values
