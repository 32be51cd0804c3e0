"""Truncated exponential generating functions with exact coefficients.

A :class:`Series` of order N stores c_0..c_N where c_k multiplies z^k/k!, so
the moments of an umbra are read straight off its generating function. All
operations are pure and return new values; orders must agree.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import sympy as sp

from ..exceptions import ConstantTermError, DegenerateUmbraError, TruncationOrderError
from .indeterminates import ONE, ZERO, PolyLike, as_poly, is_zero

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 12


@dataclass(frozen=True)
class Series:
    """Truncated EGF c_0 + c_1 z + c_2 z^2/2! + ... + c_N z^N/N!."""

    coeffs: Tuple[sp.Expr, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise TruncationOrderError("A series needs at least the constant term")

    @classmethod
    def from_coefficients(cls, values: Sequence[PolyLike]) -> "Series":
        return cls(tuple(as_poly(v) for v in values))

    @classmethod
    def from_ordinary(cls, values: Sequence[PolyLike]) -> "Series":
        """Build from ordinary coefficients o_k of z^k (c_k = k! o_k)."""
        return cls(
            tuple(sp.expand(math.factorial(k) * as_poly(v)) for k, v in enumerate(values))
        )

    @classmethod
    def constant(cls, value: PolyLike, order: int = DEFAULT_ORDER) -> "Series":
        return cls((as_poly(value),) + (ZERO,) * order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "Series":
        return cls.constant(ONE, order)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "Series":
        """The series z."""
        coeffs = [ZERO] * (order + 1)
        if order >= 1:
            coeffs[1] = ONE
        return cls(tuple(coeffs))

    @classmethod
    def exponential(cls, rate: PolyLike = 1, order: int = DEFAULT_ORDER) -> "Series":
        """e^{rate z}, coefficients rate^k."""
        value = as_poly(rate)
        return cls(tuple(sp.expand(value**k) for k in range(order + 1)))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> sp.Expr:
        return self.coeffs[k]

    def ordinary(self) -> Tuple[sp.Expr, ...]:
        return tuple(c / math.factorial(k) for k, c in enumerate(self.coeffs))

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationOrderError(
                f"Cannot raise truncation order from {self.order} to {order}"
            )
        return Series(self.coeffs[: order + 1])

    def shift(self, value: PolyLike) -> "Series":
        """Add ``value`` to the constant term."""
        return Series((sp.expand(self.coeffs[0] + as_poly(value)),) + self.coeffs[1:])

    def scale_argument(self, factor: PolyLike) -> "Series":
        """f(factor z)."""
        c = as_poly(factor)
        return Series(tuple(sp.expand(c**k * v) for k, v in enumerate(self.coeffs)))

    def subs(self, mapping: dict) -> "Series":
        return Series(tuple(sp.expand(c.subs(mapping)) for c in self.coeffs))

    def equals(self, other: "Series") -> bool:
        _check_orders(self, other)
        return all(is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs))

    def __add__(self, other: Union["Series", PolyLike]) -> "Series":
        if not isinstance(other, Series):
            return self.shift(other)
        _check_orders(self, other)
        return Series(tuple(sp.expand(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Series":
        return Series(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["Series", PolyLike]) -> "Series":
        if not isinstance(other, Series):
            return self.shift(-as_poly(other))
        return self + (-other)

    def __mul__(self, other: Union["Series", PolyLike]) -> "Series":
        if isinstance(other, Series):
            return mul(self, other)
        value = as_poly(other)
        return Series(tuple(sp.expand(value * c) for c in self.coeffs))

    __rmul__ = __mul__


def _check_orders(f: Series, g: Series) -> None:
    if f.order != g.order:
        raise TruncationOrderError(f"Series orders differ: {f.order} != {g.order}")


def mul(f: Series, g: Series) -> Series:
    """EGF product, h_n = Σ C(n,k) f_k g_{n-k}."""
    _check_orders(f, g)
    coeffs = []
    for n in range(f.order + 1):
        total = ZERO
        for k in range(n + 1):
            total += math.comb(n, k) * f[k] * g[n - k]
        coeffs.append(sp.expand(total))
    return Series(tuple(coeffs))


def reciprocal(f: Series) -> Series:
    """1/f for f_0 a nonzero constant."""
    if is_zero(f[0]):
        raise ConstantTermError("Cannot invert a series with zero constant term")
    inverse_lead = 1 / f[0]
    coeffs = [sp.expand(inverse_lead)]
    for n in range(1, f.order + 1):
        total = ZERO
        for k in range(1, n + 1):
            total += math.comb(n, k) * f[k] * coeffs[n - k]
        coeffs.append(sp.expand(-inverse_lead * total))
    return Series(tuple(coeffs))


def exp(f: Series) -> Series:
    """exp(f) for f with zero constant term (h' = f' h)."""
    if not is_zero(f[0]):
        raise ConstantTermError(f"exp needs a zero constant term, got {f[0]}")
    coeffs = [ONE]
    for n in range(1, f.order + 1):
        total = ZERO
        for k in range(1, n + 1):
            total += math.comb(n - 1, k - 1) * f[k] * coeffs[n - k]
        coeffs.append(sp.expand(total))
    return Series(tuple(coeffs))


def log(f: Series) -> Series:
    """log(f) for f with constant term 1 (f' = g' f)."""
    if not is_zero(f[0] - 1):
        raise ConstantTermError(f"log needs constant term 1, got {f[0]}")
    coeffs = [ZERO]
    for n in range(1, f.order + 1):
        total = f[n]
        for k in range(1, n):
            total -= math.comb(n - 1, k - 1) * coeffs[k] * f[n - k]
        coeffs.append(sp.expand(total))
    return Series(tuple(coeffs))


def power(f: Series, e: PolyLike) -> Series:
    """f^e = exp(e log f); ``e`` may be any polynomial, typically t."""
    if not is_zero(f[0] - 1):
        raise ConstantTermError(f"Powers need constant term 1, got {f[0]}")
    return exp(log(f) * as_poly(e))


def compose(f: Series, g: Series) -> Series:
    """f(g(z)) for g with zero constant term, summed over powers of g."""
    _check_orders(f, g)
    if not is_zero(g[0]):
        raise ConstantTermError(f"Inner series must vanish at 0, got {g[0]}")
    result = Series.constant(f[0], f.order)
    g_power = Series.one(f.order)
    for k in range(1, f.order + 1):
        g_power = mul(g_power, g)
        result = result + g_power * (f[k] / math.factorial(k))
    return result


def compose_shifted(f: Series, g: Series) -> Series:
    """f(g(z) - 1) for g with constant term 1; the EGF of α·β·γ."""
    if not is_zero(g[0] - 1):
        raise ConstantTermError(f"compose_shifted needs g_0 = 1, got {g[0]}")
    return compose(f, g - 1)


def derivative(f: Series) -> Series:
    """f'(z), padded with a zero coefficient to keep the order."""
    return Series(f.coeffs[1:] + (ZERO,))


def revert(f: Series) -> Series:
    """h with h_0 = 1 and (f - 1)∘(h - 1) = z, by Newton iteration.

    The correction at each step vanishes below the current precision, so the
    unknown coefficient past the truncation order never reaches the result.
    """
    if not is_zero(f[0] - 1):
        raise ConstantTermError(f"Reversion needs f_0 = 1, got {f[0]}")
    if is_zero(f[1]):
        raise DegenerateUmbraError("Reversion needs a nonzero first coefficient")
    if not f[1].is_Rational:
        raise DegenerateUmbraError(f"Reversion needs a rational f_1, got {f[1]}")
    order = f.order
    shifted = f - 1
    slope = derivative(shifted)
    z = Series.variable(order)
    inner = z * (1 / f[1])
    precision = 2
    while True:
        residual = compose(shifted, inner) - z
        correction = mul(residual, reciprocal(compose(slope, inner)))
        inner = inner - correction
        if precision > order:
            break
        precision *= 2
    logger.debug(f"Reverted series of order {order}")
    return inner + 1
