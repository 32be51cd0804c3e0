"""Samplers for the increments of concrete Lévy processes and their exact umbrae."""

import logging
from typing import Union

import numpy as np

from ..algebra.indeterminates import as_poly
from ..exceptions import ParameterError
from ..multivar.umbra import MultiUmbra, brownian_tuple
from ..umbral.levy import (
    LevyTriplet,
    brownian_umbra,
    exponential_law,
    gamma_umbra,
    levy_umbra,
    normal_law,
    pascal_umbra,
    point_mass_law,
    poisson_umbra,
    uniform_law,
)
from ..umbral.umbra import Umbra
from .models import JumpSpec, ProcessSpec

logger = logging.getLogger(__name__)


def _draw_jumps(jump: JumpSpec, rng: np.random.Generator, count: int) -> np.ndarray:
    if jump.kind == "point-mass":
        return np.full(count, jump.value)
    if jump.kind == "uniform":
        return rng.uniform(jump.low, jump.high, size=count)
    if jump.kind == "normal":
        return rng.normal(jump.mean, jump.std, size=count)
    return rng.exponential(jump.scale, size=count)


def sample_increment(
    spec: ProcessSpec, dt: float, rng: np.random.Generator, size: int = 1
) -> np.ndarray:
    """Draw ``size`` independent copies of X_dt.

    Returns:
        Array of shape (size,), or (size, d) for multivariate Brownian motion

    Raises:
        ParameterError: If dt is not positive
    """
    if not dt > 0:
        raise ParameterError(f"Increment length must be positive, got {dt}")
    if spec.kind == "brownian":
        return rng.normal(0.0, spec.s * np.sqrt(dt), size=size)
    if spec.kind == "poisson":
        return rng.poisson(spec.lam * dt, size=size).astype(float)
    if spec.kind == "gamma":
        return rng.gamma(spec.lam * dt, 1.0, size=size)
    if spec.kind == "pascal":
        return rng.negative_binomial(dt, 1.0 - spec.p, size=size).astype(float)
    if spec.kind == "compound-poisson":
        counts = rng.poisson(spec.lam * dt, size=size)
        jumps = _draw_jumps(spec.jump_law(), rng, int(counts.sum()))
        owners = np.repeat(np.arange(size), counts)
        return np.bincount(owners, weights=jumps, minlength=size).astype(float)
    covariance = np.asarray(spec.covariance, dtype=float) * dt
    return rng.multivariate_normal(np.zeros(spec.dimension), covariance, size=size)


def jump_umbra(jump: JumpSpec) -> Umbra:
    if jump.kind == "point-mass":
        return point_mass_law(jump.value)
    if jump.kind == "uniform":
        return uniform_law(jump.low, jump.high)
    if jump.kind == "normal":
        return normal_law(jump.mean, jump.std)
    return exponential_law(jump.scale)


def process_umbra(spec: ProcessSpec) -> Union[Umbra, MultiUmbra]:
    """The umbra α (or tuple μ) with X_t ≡ t·α at the spec's exact parameters."""
    if spec.kind == "brownian":
        return brownian_umbra(spec.s)
    if spec.kind == "poisson":
        return poisson_umbra(spec.lam)
    if spec.kind == "gamma":
        return gamma_umbra(spec.lam)
    if spec.kind == "pascal":
        return pascal_umbra(spec.p)
    if spec.kind == "compound-poisson":
        triplet = LevyTriplet.compound_poisson(spec.lam, jump_umbra(spec.jump_law()))
        return levy_umbra(triplet)
    covariance = [[as_poly(v) for v in row] for row in spec.covariance]
    return brownian_tuple(covariance)
