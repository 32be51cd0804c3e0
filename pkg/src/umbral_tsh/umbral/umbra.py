"""Umbrae as lazily evaluated moment sequences and the umbral operations.

An :class:`Umbra` is identified with its moment sequence a_0 = 1, a_1, a_2, ...
Two similar umbrae are the same object here, and uncorrelation is implicit in
the binomial convolution of :func:`add`. Every operation computes moment n
from moments of order at most n of its inputs.
"""

import logging
import math
import threading
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Union

import sympy as sp

from ..algebra.combinatorics import (
    complete_bell,
    lower_factorial,
    partial_bell,
    stirling_first,
)
from ..algebra.indeterminates import ONE, ZERO, PolyLike, as_poly, is_zero
from ..algebra.series import Series
from ..exceptions import (
    ConstantTermError,
    DegenerateUmbraError,
    ParameterError,
    TruncationOrderError,
    UnknownNameError,
)

logger = logging.getLogger(__name__)


class Umbra:
    """A symbolic random variable known through its moments.

    Args:
        moment: Oracle returning a_n for n >= 1 (a_0 is always 1).
        label: Human-readable provenance, used in logs and reports.
    """

    def __init__(self, moment: Callable[[int], PolyLike], label: str = "umbra"):
        self._moment = moment
        self.label = label
        self._cache: Dict[int, sp.Expr] = {0: ONE}
        self._lock = threading.RLock()

    @classmethod
    def from_sequence(cls, values: Sequence[PolyLike], label: str = "sequence") -> "Umbra":
        """Umbra with the given finite moment prefix; a_0 must be 1."""
        moments = [as_poly(v) for v in values]
        if not moments or not is_zero(moments[0] - 1):
            raise ConstantTermError("A moment sequence must start with a_0 = 1")

        def moment(n: int) -> sp.Expr:
            if n >= len(moments):
                raise TruncationOrderError(
                    f"Umbra '{label}' only knows moments up to order {len(moments) - 1}"
                )
            return moments[n]

        return cls(moment, label)

    @classmethod
    def from_series(cls, series: Series, label: str = "series") -> "Umbra":
        return cls.from_sequence(series.coeffs, label)

    def moment(self, n: int) -> sp.Expr:
        if n < 0:
            raise ParameterError(f"Moment order must be nonnegative, got {n}")
        with self._lock:
            cached = self._cache.get(n)
            if cached is None:
                cached = as_poly(self._moment(n))
                self._cache[n] = cached
            return cached

    def moments(self, n: int) -> List[sp.Expr]:
        """a_0, ..., a_n."""
        return [self.moment(i) for i in range(n + 1)]

    def series(self, order: int) -> Series:
        return Series(tuple(self.moments(order)))

    def equals(self, other: "Umbra", order: int) -> bool:
        """Moment-by-moment equality up to ``order``."""
        return all(is_zero(self.moment(n) - other.moment(n)) for n in range(order + 1))

    def __repr__(self) -> str:
        return f"Umbra({self.label})"


PolyOrUmbra = Union[PolyLike, Umbra]


def _describe(value: PolyOrUmbra) -> str:
    return value.label if isinstance(value, Umbra) else str(as_poly(value))


_SPECIAL_MOMENTS: Dict[str, Callable[[int], sp.Expr]] = {
    "augmentation": lambda n: ZERO,
    "unity": lambda n: ONE,
    "boolean_unity": lambda n: sp.factorial(n),
    "singleton": lambda n: ONE if n == 1 else ZERO,
    "bell": lambda n: sp.bell(n),
    # z/(e^z - 1) convention: B_1 = -1/2 whatever sympy's default is.
    "bernoulli": lambda n: -sp.Rational(1, 2) if n == 1 else sp.bernoulli(n),
    # Euler umbra, EGF 2e^z/(e^z + 1).
    "euler": lambda n: sp.euler(n, 1),
    # Euler numbers, EGF sech z.
    "euler_numbers": lambda n: sp.euler(n),
    "gaussian": lambda n: ONE if n == 2 else ZERO,
}

SPECIAL_ALIASES = {
    "epsilon": "augmentation",
    "u": "unity",
    "u_bar": "boolean_unity",
    "chi": "singleton",
    "beta": "bell",
    "iota": "bernoulli",
    "eta": "euler",
    "varepsilon": "euler_numbers",
    "varsigma": "gaussian",
}


def special_names() -> List[str]:
    return sorted(_SPECIAL_MOMENTS)


@lru_cache(maxsize=None)
def special(name: str) -> Umbra:
    """Special scalar umbra by name or alias (see ``SPECIAL_ALIASES``)."""
    canonical = SPECIAL_ALIASES.get(name, name)
    moment = _SPECIAL_MOMENTS.get(canonical)
    if moment is None:
        raise UnknownNameError(
            f"Unknown special umbra '{name}'; expected one of {special_names()}"
        )
    return Umbra(moment, canonical)


def add(alpha: Umbra, gamma: Umbra) -> Umbra:
    """α + γ for uncorrelated umbrae: binomial convolution of moments."""

    def moment(n: int) -> sp.Expr:
        return sum(
            (math.comb(n, k) * alpha.moment(k) * gamma.moment(n - k) for k in range(n + 1)),
            ZERO,
        )

    return Umbra(moment, f"({alpha.label} + {gamma.label})")


def scale(c: PolyLike, alpha: Umbra) -> Umbra:
    """c α, with moments c^n a_n."""
    factor = as_poly(c)
    return Umbra(lambda n: factor**n * alpha.moment(n), f"{factor}*{alpha.label}")


def multiply(alpha: Umbra, gamma: Umbra) -> Umbra:
    """Product α γ of uncorrelated umbrae, with moments a_n g_n."""
    return Umbra(
        lambda n: alpha.moment(n) * gamma.moment(n), f"({alpha.label})({gamma.label})"
    )


def dot(e: PolyOrUmbra, alpha: Umbra) -> Umbra:
    """The dot-product e·α for a polynomial or umbra ``e``.

    Moment i is Σ_k L_k B_{i,k}(a_1, ...), with L_k = (e)_k for a polynomial
    and L_k = Σ_j s(k,j) g_j (the factorial moments of γ) for an umbra.
    """
    if isinstance(e, Umbra):
        gamma = e

        @lru_cache(maxsize=None)
        def weight(k: int) -> sp.Expr:
            return sp.expand(
                sum((stirling_first(k, j) * gamma.moment(j) for j in range(k + 1)), ZERO)
            )

    else:
        value = as_poly(e)

        @lru_cache(maxsize=None)
        def weight(k: int) -> sp.Expr:
            return lower_factorial(k, value)

    def moment(i: int) -> sp.Expr:
        a = alpha.moments(i)[1:]
        return sum((weight(k) * partial_bell(i, k, a) for k in range(1, i + 1)), ZERO)

    return Umbra(moment, f"{_describe(e)}.{alpha.label}")


def cumulants(alpha: Umbra) -> Umbra:
    """The α-cumulant umbra χ·α."""
    result = dot(special("singleton"), alpha)
    result.label = f"kappa({alpha.label})"
    return result


def partition_umbra(alpha: Umbra) -> Umbra:
    """β·α, with moment n the complete Bell polynomial Y_n(a_1, ..., a_n)."""
    return Umbra(
        lambda n: complete_bell(n, alpha.moments(n)[1:]), f"beta.{alpha.label}"
    )


def inverse(t: PolyLike, alpha: Umbra) -> Umbra:
    """The umbra -t·α."""
    return dot(-as_poly(t), alpha)


def derivative(alpha: Umbra) -> Umbra:
    """α_D with moments n a_{n-1}."""
    return Umbra(lambda n: n * alpha.moment(n - 1), f"D({alpha.label})")


def disjoint_sum(alpha: Umbra, gamma: Umbra) -> Umbra:
    """α ∔ γ with moments a_n + g_n for n >= 1."""
    return Umbra(
        lambda n: alpha.moment(n) + gamma.moment(n), f"({alpha.label} (+) {gamma.label})"
    )


def composition(alpha: Umbra, gamma: Umbra) -> Umbra:
    """α·β·γ with moment i = Σ_k a_k B_{i,k}(g_1, ...)."""

    def moment(i: int) -> sp.Expr:
        g = gamma.moments(i)[1:]
        return sum(
            (alpha.moment(k) * partial_bell(i, k, g) for k in range(1, i + 1)), ZERO
        )

    return Umbra(moment, f"{alpha.label}.beta.{gamma.label}")


def comp_inverse(alpha: Umbra, label: Optional[str] = None) -> Umbra:
    """α^{<-1>} such that α·β·α^{<-1>} ≡ χ.

    Solved order by order from Σ_k a_k B_{i,k}(g) = δ_{i,1}: only the k = 1
    term involves g_i, the others use lower moments.
    """
    lead = alpha.moment(1)
    if is_zero(lead):
        raise DegenerateUmbraError(
            f"Compositional inverse of '{alpha.label}' needs a nonzero first moment"
        )
    result: Umbra

    def moment(i: int) -> sp.Expr:
        if i == 1:
            return 1 / lead
        g = result.moments(i - 1)[1:]
        total = sum(
            (alpha.moment(k) * partial_bell(i, k, g) for k in range(2, i + 1)), ZERO
        )
        return -total / lead

    result = Umbra(moment, label or f"{alpha.label}^<-1>")
    return result
