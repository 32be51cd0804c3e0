"""Moment/cumulant transforms on finite moment sequences.

Classical cumulants go through the umbral cumulant and partition umbrae.
Boolean and free cumulants work on ordinary generating functions:
M(z) = 1/(1 - B(z)) and M(z) = R(z M(z)). Moment sequences include a_0 = 1;
cumulant sequences start at index 1.
"""

import logging
from typing import List, Sequence, Tuple

import sympy as sp

from ..algebra.indeterminates import ONE, ZERO, PolyLike, as_poly, is_zero
from ..exceptions import ConstantTermError
from .umbra import Umbra, cumulants, partition_umbra

logger = logging.getLogger(__name__)


def _moment_prefix(moments: Sequence[PolyLike]) -> List[sp.Expr]:
    values = [as_poly(v) for v in moments]
    if not values or not is_zero(values[0] - 1):
        raise ConstantTermError("Moment sequences must start with a_0 = 1")
    return values


def classical_cumulants(moments: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """Cumulants k_1..k_N of the moments a_0..a_N."""
    values = _moment_prefix(moments)
    kappa = cumulants(Umbra.from_sequence(values))
    return tuple(kappa.moment(n) for n in range(1, len(values)))


def classical_moments(kappas: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """Moments a_0..a_N from cumulants k_1..k_N."""
    source = Umbra.from_sequence([ONE] + [as_poly(v) for v in kappas])
    result = partition_umbra(source)
    return tuple(result.moments(len(kappas)))


def boolean_cumulants(moments: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """b_1..b_N with M = 1/(1 - B): b_n = a_n - Σ_{k<n} b_k a_{n-k}."""
    a = _moment_prefix(moments)
    b: List[sp.Expr] = [ZERO]
    for n in range(1, len(a)):
        total = a[n] - sum((b[k] * a[n - k] for k in range(1, n)), ZERO)
        b.append(sp.expand(total))
    return tuple(b[1:])


def boolean_moments(cumulants_: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """a_0..a_N from boolean cumulants b_1..b_N."""
    b = [ZERO] + [as_poly(v) for v in cumulants_]
    a: List[sp.Expr] = [ONE]
    for n in range(1, len(b)):
        a.append(sp.expand(sum((b[k] * a[n - k] for k in range(1, n + 1)), ZERO)))
    return tuple(a)


def _ordinary_powers(a: Sequence[sp.Expr], max_power: int) -> List[List[sp.Expr]]:
    """Truncated ordinary powers M^0..M^max_power of M = Σ a_n z^n."""
    order = len(a) - 1
    powers = [[ONE] + [ZERO] * order]
    for _ in range(max_power):
        previous = powers[-1]
        powers.append(
            [
                sp.expand(sum((previous[k] * a[n - k] for k in range(n + 1)), ZERO))
                for n in range(order + 1)
            ]
        )
    return powers


def free_cumulants(moments: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """r_1..r_N solving M(z) = R(z M(z)) with R = 1 + Σ r_n z^n.

    Coefficient n reads a_n = Σ_{s=1}^{n} r_s [z^{n-s}] M^s, and the s = n
    term is r_n itself.
    """
    a = _moment_prefix(moments)
    order = len(a) - 1
    powers = _ordinary_powers(a, order)
    r: List[sp.Expr] = [ZERO]
    for n in range(1, order + 1):
        total = a[n] - sum((r[s] * powers[s][n - s] for s in range(1, n)), ZERO)
        r.append(sp.expand(total))
    return tuple(r[1:])


def free_moments(cumulants_: Sequence[PolyLike]) -> Tuple[sp.Expr, ...]:
    """a_0..a_N from free cumulants r_1..r_N."""
    r = [ZERO] + [as_poly(v) for v in cumulants_]
    order = len(r) - 1
    a: List[sp.Expr] = [ONE] + [ZERO] * order
    for n in range(1, order + 1):
        # [z^{n-s}] M^s only involves a_0..a_{n-1}.
        powers = _ordinary_powers(a[:n] + [ZERO] * (order - n + 1), n)
        a[n] = sp.expand(sum((r[s] * powers[s][n - s] for s in range(1, n + 1)), ZERO))
    return tuple(a)
