"""Symbolic Lévy processes.

A Lévy process X_t is represented by an umbra α with X_t ≡ t·α. From a
triplet (c0, s, η) the umbra is β·(c0 χ ∔ s ς ∔ η), where η carries the
moments of the Lévy measure (compensated form, so η has no linear term).
The named process umbrae below are the random walks and processes whose
TSH polynomials are the classical families.
"""

import logging
import math
from typing import Optional, Sequence

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..algebra.indeterminates import ONE, PolyLike, as_poly, is_zero
from ..exceptions import ParameterError
from .transforms import boolean_cumulants, free_cumulants
from .umbra import (
    Umbra,
    add,
    comp_inverse,
    composition,
    derivative,
    disjoint_sum,
    dot,
    partition_umbra,
    scale,
    special,
)

logger = logging.getLogger(__name__)


class LevyTriplet(BaseModel):
    """Symbolic Lévy triplet: compensated drift, Gaussian scale and jump umbra."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    c0: sp.Expr = Field(sp.Integer(0), description="Drift after compensation")
    s: sp.Expr = Field(sp.Integer(0), description="Gaussian scale (variance s^2)")
    jumps: Optional[Umbra] = Field(
        None, description="Umbra η of the Lévy measure moments, with η_1 = 0"
    )

    @field_validator("c0", "s", mode="before")
    @classmethod
    def _coerce_poly(cls, value: PolyLike) -> sp.Expr:
        return as_poly(value)

    @field_validator("jumps")
    @classmethod
    def _check_compensated(cls, value: Optional[Umbra]) -> Optional[Umbra]:
        if value is not None and not is_zero(value.moment(1)):
            raise ParameterError(
                "Jump umbra must have a vanishing first moment (compensated form)"
            )
        return value

    @classmethod
    def from_jump_moments(
        cls, jump_moments: Sequence[PolyLike], c0: PolyLike = 0, s: PolyLike = 0
    ) -> "LevyTriplet":
        """Triplet whose η has the given finite moment prefix (η_0 = 1, η_1 = 0)."""
        return cls(c0=c0, s=s, jumps=Umbra.from_sequence(jump_moments, "eta"))

    @classmethod
    def compound_poisson(
        cls, rate: PolyLike, jump_law: Umbra, s: PolyLike = 0
    ) -> "LevyTriplet":
        """Compound Poisson process with jump law J: c0 = rate E[J], η_i = rate E[J^i]."""
        intensity = as_poly(rate)
        eta = Umbra(
            lambda n: 0 if n == 1 else intensity * jump_law.moment(n),
            f"eta[{intensity}*{jump_law.label}]",
        )
        return cls(c0=intensity * jump_law.moment(1), s=s, jumps=eta)


def levy_cumulant_umbra(triplet: LevyTriplet) -> Umbra:
    """c0 χ ∔ s ς ∔ η, whose moments are the cumulants of X_1."""
    gamma = disjoint_sum(scale(triplet.c0, special("singleton")), scale(triplet.s, special("gaussian")))
    if triplet.jumps is not None:
        gamma = disjoint_sum(gamma, triplet.jumps)
    return gamma


def levy_umbra(triplet: LevyTriplet) -> Umbra:
    """β·(c0 χ ∔ s ς ∔ η); the process is t·(this umbra)."""
    result = partition_umbra(levy_cumulant_umbra(triplet))
    result.label = f"levy(c0={triplet.c0}, s={triplet.s})"
    return result


def subordinate(subordinator: LevyTriplet, process: LevyTriplet) -> Umbra:
    """X_{T_t} as t·(α_T·β·γ_X), with γ_X the cumulant umbra of X."""
    return composition(levy_umbra(subordinator), levy_cumulant_umbra(process))


def brownian_umbra(sigma: PolyLike = 1) -> Umbra:
    """β·(σ ς): Brownian motion with variance σ² per unit time."""
    return levy_umbra(LevyTriplet(s=sigma))


def poisson_umbra(lam: PolyLike = 1) -> Umbra:
    """λ·β: Poisson process with intensity λ."""
    return dot(lam, special("bell"))


def gamma_umbra(lam: PolyLike = 1) -> Umbra:
    """λ·ū: X_t ~ Gamma(shape λt, scale 1)."""
    return dot(lam, special("boolean_unity"))


def pascal_umbra(p: PolyLike) -> Umbra:
    """ū·d·β with d = p/q: negative binomial counts of p-events before t q-events."""
    probability = as_poly(p)
    d = probability / (1 - probability)
    return dot(special("boolean_unity"), dot(d, special("bell")))


def uniform_walk_umbra(a: PolyLike = 1) -> Umbra:
    """a·(-1·ι): sum of a independent uniforms on [0, 1]."""
    return dot(a, dot(-1, special("bernoulli")))


def bernoulli_walk_umbra(p: PolyLike) -> Umbra:
    """χ·p·β: a single Bernoulli(p) step."""
    return dot(special("singleton"), dot(p, special("bell")))


def bernoulli_half_umbra() -> Umbra:
    """½(u + (-1)·𝜀) with 𝜀 the Euler-numbers umbra; all moments 1/2.

    Its generating function is e^{z/2}/sech(z/2) = (1 + e^z)/2.
    """
    euler_part = dot(-1, special("euler_numbers"))
    result = scale(sp.Rational(1, 2), add(special("unity"), euler_part))
    result.label = "bernoulli(1/2)"
    return result


def point_mass_law(value: PolyLike) -> Umbra:
    """Jump law concentrated at ``value``."""
    return scale(value, special("unity"))


def uniform_law(low: PolyLike, high: PolyLike) -> Umbra:
    """Uniform jump law on [low, high]: low + (high - low) U."""
    lo, hi = as_poly(low), as_poly(high)
    return add(scale(lo, special("unity")), scale(hi - lo, dot(-1, special("bernoulli"))))


def normal_law(mean: PolyLike, std: PolyLike) -> Umbra:
    """Normal jump law: mean + std Z with Z ≡ β·ς."""
    standard = partition_umbra(special("gaussian"))
    return add(scale(mean, special("unity")), scale(std, standard))


def exponential_law(scale_: PolyLike) -> Umbra:
    """Exponential jump law with the given scale: scale·ū."""
    return scale(scale_, special("boolean_unity"))


def boolean_levy_umbra(moments: Sequence[PolyLike], t: PolyLike = 1) -> Umbra:
    """ū·β·φ with φ built from t times the boolean cumulants.

    The result has moments n! a_n(t), where a(t) are the ordinary moments of
    the boolean convolution power at time t (M_t = 1/(1 - t B)).
    """
    time = as_poly(t)
    b = boolean_cumulants(moments)
    phi = Umbra.from_sequence(
        [ONE] + [math.factorial(n) * time * value for n, value in enumerate(b, start=1)],
        "phi",
    )
    return composition(special("boolean_unity"), phi)


def free_levy_umbra(moments: Sequence[PolyLike], t: PolyLike = 1) -> Umbra:
    """K·β·((-1·K)_D)^{<-1>} with K built from t times the free cumulants.

    K has generating function R_t(z) = 1 + t(R(z) - 1); the result has
    moments n! a_n(t) for the free convolution power at time t.
    """
    time = as_poly(t)
    r = free_cumulants(moments)
    kappa = Umbra.from_sequence(
        [ONE] + [math.factorial(n) * time * value for n, value in enumerate(r, start=1)],
        "K",
    )
    inner = comp_inverse(derivative(dot(-1, kappa)))
    return composition(kappa, inner)
