"""Time-space harmonic polynomials of a univariate Lévy process.

For the process t·α the basis Q_k(x,t) = E[(x - t·α)^k] is TSH. It is built
here in three independent ways (inverse moments, the partition/Stirling
closed form and complete Bell polynomials of the cumulants of -t·α), and the
martingale, Wald, Appell and Sheffer identities are checked as exact
polynomial identities with t and s as indeterminates.
"""

import logging
import threading
import weakref
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import sympy as sp

from ..algebra.combinatorics import (
    binomial,
    complete_bell,
    partitions,
    stirling_first,
)
from ..algebra.indeterminates import (
    ONE,
    S,
    T,
    X,
    ZERO,
    PolyLike,
    as_poly,
    coefficient_map,
    is_zero,
)
from ..checks import IdentityCheck, compare
from ..umbral.umbra import Umbra, cumulants, dot, inverse

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TshPoly:
    """A polynomial P(x, t) of degree ``k`` in x, with its provenance."""

    k: int
    expr: sp.Expr
    label: str = ""

    def coefficients(self) -> Dict[Tuple[int, int], sp.Expr]:
        """(x-power, t-power) mapped to coefficients (polynomials in parameters)."""
        expanded = sp.expand(self.expr)
        result: Dict[Tuple[int, int], sp.Expr] = {}
        for term in sp.Add.make_args(expanded):
            if term == 0:
                continue
            j = sp.degree(term, X)
            i = sp.degree(term, T)
            coefficient = term / (X**j * T**i)
            key = (int(j), int(i))
            result[key] = sp.expand(result.get(key, ZERO) + coefficient)
        return result

    def at(self, x: PolyLike = X, t: PolyLike = T) -> sp.Expr:
        return sp.expand(self.expr.subs({X: as_poly(x), T: as_poly(t)}, simultaneous=True))

    def equals(self, other: "TshPoly") -> bool:
        return is_zero(self.expr - other.expr)


class DerivedUmbrae:
    """Per-umbra cache of the dot-products reused across degrees (weakly keyed)."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._table: "weakref.WeakKeyDictionary[Any, Dict[str, Any]]" = (
            weakref.WeakKeyDictionary()
        )

    def get(self, alpha: Any, key: str, build: Callable[[], Any]) -> Any:
        with self._lock:
            entry = self._table.setdefault(alpha, {})
            derived = entry.get(key)
            if derived is None:
                derived = build()
                entry[key] = derived
            return derived


_DERIVED = DerivedUmbrae()


def _inverse_time(alpha: Umbra) -> Umbra:
    return _DERIVED.get(alpha, "-t", lambda: inverse(T, alpha))


def _forward_time(alpha: Umbra) -> Umbra:
    return _DERIVED.get(alpha, "t", lambda: dot(T, alpha))


def _elapsed_time(alpha: Umbra) -> Umbra:
    return _DERIVED.get(alpha, "t-s", lambda: dot(T - S, alpha))


def q_poly(alpha: Umbra, k: int) -> TshPoly:
    """Q_k(x,t) = Σ_j C(k,j) x^j E[(-t·α)^{k-j}]."""
    backward = _inverse_time(alpha)
    expr = sum(
        (binomial(k, j) * X**j * backward.moment(k - j) for j in range(k + 1)), ZERO
    )
    return TshPoly(k, sp.expand(expr), alpha.label)


def q_coeffs_direct(alpha: Umbra, k: int) -> TshPoly:
    """Q_k through the partition/Stirling closed form of its coefficients.

    c_{i,j} = C(k,j) Σ_{λ ⊢ k-j} d_λ (-1)^i s(l(λ), i) a^λ, where d_λ uses
    the factorial of the partitioned integer k - j; the sign (-1)^{2l+i}
    reduces to (-1)^i.
    """
    a = alpha.moments(k)[1:]
    expr = ZERO
    for j in range(k + 1):
        inner = ZERO
        for partition in partitions(k - j):
            length = partition.length
            time_part = sum(
                ((-1) ** i * stirling_first(length, i) * T**i for i in range(length + 1)),
                ZERO,
            )
            inner += partition.coefficient() * partition.monomial(a) * time_part
        expr += binomial(k, j) * X**j * inner
    return TshPoly(k, sp.expand(expr), alpha.label)


def complete_bell_form(alpha: Umbra, k: int) -> TshPoly:
    """Q_k = Y_k(x + h_1, h_2, ..., h_k) with h the cumulants of -t·α."""
    if k == 0:
        return TshPoly(0, ONE, alpha.label)
    h = cumulants(_inverse_time(alpha)).moments(k)[1:]
    arguments = [X + h[0]] + list(h[1:])
    return TshPoly(k, complete_bell(k, arguments), alpha.label)


def _substitute_x_powers(poly: sp.Expr, moment: Callable[[int], sp.Expr]) -> sp.Expr:
    """Replace each x^j in ``poly`` by ``moment(j)``."""
    expanded = sp.expand(poly)
    degree = int(sp.degree(expanded, X)) if expanded.has(X) else 0
    polynomial = sp.Poly(expanded, X)
    total = ZERO
    for j in range(degree + 1):
        coefficient = polynomial.coeff_monomial(X**j)
        if coefficient != 0:
            total += coefficient * moment(j)
    return sp.expand(total)


def martingale_check(alpha: Umbra, k: int) -> IdentityCheck:
    """Σ_j C(k,j) E[(x + (t-s)·α)^j] E[(-t·α)^{k-j}] = Q_k(x, s) in ℚ[x,s,t]."""
    elapsed = _elapsed_time(alpha)
    backward = _inverse_time(alpha)
    lhs = ZERO
    for j in range(k + 1):
        shifted = sum(
            (binomial(j, i) * X**i * elapsed.moment(j - i) for i in range(j + 1)), ZERO
        )
        lhs += binomial(k, j) * shifted * backward.moment(k - j)
    rhs = q_poly(alpha, k).at(t=S)
    return compare(f"martingale[{alpha.label}] k={k}", sp.expand(lhs), rhs)


def wald_check(alpha: Umbra, k: int) -> IdentityCheck:
    """Substituting the moments of t·α for x-powers in Q_k gives δ_{k,0}."""
    forward = _forward_time(alpha)
    value = _substitute_x_powers(q_poly(alpha, k).expr, forward.moment)
    return compare(f"wald[{alpha.label}] k={k}", value, ONE if k == 0 else ZERO)


def appell_check(alpha: Umbra, k: int) -> IdentityCheck:
    """d/dx Q_k = k Q_{k-1}."""
    lhs = sp.diff(q_poly(alpha, k).expr, X)
    rhs = k * q_poly(alpha, k - 1).expr if k >= 1 else ZERO
    return compare(f"appell[{alpha.label}] k={k}", lhs, rhs)


def sheffer_split(alpha: Umbra, k: int, s: PolyLike = S) -> IdentityCheck:
    """Q_k(x, t+s) = Σ_j C(k,j) P_j(s) Q_{k-j}(x,t) with P_j(s) = Q_j(0, s)."""
    shift = as_poly(s)
    lhs = q_poly(alpha, k).at(t=T + shift)
    rhs = sum(
        (
            binomial(k, j) * q_poly(alpha, j).at(x=0, t=shift) * q_poly(alpha, k - j).expr
            for j in range(k + 1)
        ),
        ZERO,
    )
    return compare(f"sheffer[{alpha.label}] k={k}", lhs, sp.expand(rhs))


def tsh_coefficients(alpha: Umbra, p0: Sequence[PolyLike], k: Optional[int] = None) -> sp.Expr:
    """P(x,t) = Σ_j p_j(t) x^j with p_j(t) = Σ_{i>=j} C(i,j) p_i(0) E[(-t·α)^{i-j}]."""
    initial = [as_poly(v) for v in p0]
    degree = len(initial) - 1 if k is None else k
    initial = (initial + [ZERO] * (degree + 1))[: degree + 1]
    backward = _inverse_time(alpha)
    expr = ZERO
    for j in range(degree + 1):
        coefficient = sum(
            (
                binomial(i, j) * initial[i] * backward.moment(i - j)
                for i in range(j, degree + 1)
                if initial[i] != 0
            ),
            ZERO,
        )
        expr += coefficient * X**j
    return sp.expand(expr)


def is_tsh(alpha: Umbra, poly: PolyLike, name: str = "") -> IdentityCheck:
    """Decide whether P(x,t) is TSH for t·α by rebuilding it from P(x, 0)."""
    expr = as_poly(poly)
    initial_poly = sp.expand(expr.subs(T, 0))
    degree = int(sp.degree(initial_poly, X)) if initial_poly.has(X) else 0
    if expr.has(X):
        degree = max(degree, int(sp.degree(expr, X)))
    initial = [coefficient_map(initial_poly, [X]).get((j,), ZERO) for j in range(degree + 1)]
    rebuilt = tsh_coefficients(alpha, initial)
    return compare(name or f"tsh[{alpha.label}]", expr, rebuilt)
