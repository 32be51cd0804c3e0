"""Monte-Carlo corroboration of symbolic moments and of the martingale property.

Samples are drawn in chunks. Each chunk owns a Philox generator spawned from
the root SeedSequence, so a report depends only on (spec, seed, sizes) and
not on the number of workers. Chunk sums are combined in chunk order with
``math.fsum``.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import sympy as sp

from ..algebra.combinatorics import MultiIndex, indices_of_degree
from ..algebra.indeterminates import T, X, as_poly
from ..exceptions import ParameterError
from ..multivar.umbra import MultiUmbra, dot_multi
from ..tsh.univariate import q_poly
from ..umbral.umbra import dot
from .models import MartingaleResidual, MomentEstimate, ProcessSpec, SimReport
from .processes import process_umbra, sample_increment

logger = logging.getLogger(__name__)

CHUNK_SIZE = 100_000


def chunk_generators(seed: int, n_chunks: int) -> List[np.random.Generator]:
    """Independent Philox streams, one per chunk."""
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def _chunk_sizes(total: int, chunk: int) -> List[int]:
    sizes = [chunk] * (total // chunk)
    if total % chunk:
        sizes.append(total % chunk)
    return sizes


def _run_chunks(
    work: Callable[[int, np.random.Generator], np.ndarray],
    sizes: Sequence[int],
    seed: int,
    workers: int,
) -> List[np.ndarray]:
    generators = chunk_generators(seed, len(sizes))
    if workers <= 1:
        return [work(size, rng) for size, rng in zip(sizes, generators)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(work, sizes, generators))


def _z_score(difference: float, standard_error: float, scale: float) -> Optional[float]:
    if standard_error > 0:
        return difference / standard_error
    return 0.0 if abs(difference) <= 1e-12 * max(1.0, abs(scale)) else None


def _estimate(power_sums: np.ndarray, square_sums: np.ndarray, n: int) -> Tuple[float, float]:
    mean = math.fsum(power_sums) / n
    second = math.fsum(square_sums) / n
    variance = max(second - mean * mean, 0.0) * n / max(n - 1, 1)
    return mean, math.sqrt(variance / n)


def _indices(spec: ProcessSpec, k_max: int) -> List[MultiIndex]:
    if spec.dimension == 1:
        return [(k,) for k in range(k_max + 1)]
    return [index for n in range(k_max + 1) for index in indices_of_degree(spec.dimension, n)]


def _as_string(value: sp.Expr) -> str:
    if value.is_Rational:
        return f"{value.p}/{value.q}"
    return sp.sstr(value)


def empirical_moments(
    spec: ProcessSpec,
    t: float,
    k_max: int,
    n_samples: int,
    seed: int,
    workers: int = 1,
) -> SimReport:
    """Compare sample moments of X_t with the symbolic moments of t·α.

    For multivariate Brownian motion every multi-index of total degree at
    most ``k_max`` is reported.
    """
    if n_samples < 1:
        raise ParameterError(f"n_samples must be at least 1, got {n_samples}")
    if k_max < 0:
        raise ParameterError(f"k_max must be nonnegative, got {k_max}")
    indices = _indices(spec, k_max)
    exponents = np.asarray(indices, dtype=float)

    def work(size: int, rng: np.random.Generator) -> np.ndarray:
        sample = sample_increment(spec, t, rng, size).reshape(size, spec.dimension)
        values = np.prod(sample[:, None, :] ** exponents[None, :, :], axis=2)
        return np.stack([values.sum(axis=0), (values * values).sum(axis=0)])

    sums = _run_chunks(work, _chunk_sizes(n_samples, CHUNK_SIZE), seed, workers)

    alpha = process_umbra(spec)
    exact_t = as_poly(t)
    process = dot_multi(exact_t, alpha) if isinstance(alpha, MultiUmbra) else dot(exact_t, alpha)
    estimates = []
    for position, index in enumerate(indices):
        exact = process.moment(index) if isinstance(alpha, MultiUmbra) else process.moment(index[0])
        symbolic = float(exact)
        empirical, standard_error = _estimate(
            np.array([chunk[0, position] for chunk in sums]),
            np.array([chunk[1, position] for chunk in sums]),
            n_samples,
        )
        z = _z_score(empirical - symbolic, standard_error, symbolic)
        estimates.append(
            MomentEstimate(
                index=list(index),
                exact=_as_string(exact),
                symbolic=symbolic,
                empirical=empirical,
                standard_error=standard_error,
                z_score=z,
            )
        )
    report = SimReport(process=spec, seed=seed, n_samples=n_samples, t=t, moments=estimates)
    if not report.passes():
        logger.warning(f"Empirical moments of {spec.kind} exceed 5 standard errors")
    return report


def _evaluator(expr: sp.Expr) -> Callable[[np.ndarray, float], np.ndarray]:
    function = sp.lambdify((X, T), expr, modules="numpy")

    def evaluate(x: np.ndarray, t: float) -> np.ndarray:
        result = np.asarray(function(x, t), dtype=float)
        return result if result.shape == x.shape else np.full(x.shape, float(result))

    return evaluate


def martingale_mc(
    spec: ProcessSpec,
    k: int,
    s: float,
    t: float,
    n_outer: int,
    n_inner: int,
    seed: int,
    workers: int = 1,
) -> SimReport:
    """Residuals mean_inner Q_k(X_s + ΔX_{t-s}, t) - Q_k(X_s, s) over outer samples."""
    if not 0 < s < t:
        raise ParameterError(f"Need 0 < s < t, got s={s}, t={t}")
    if n_outer < 1 or n_inner < 1:
        raise ParameterError("n_outer and n_inner must be at least 1")
    if spec.dimension != 1:
        raise ParameterError("Martingale residuals are computed for univariate processes")
    alpha = process_umbra(spec)
    evaluate = _evaluator(q_poly(alpha, k).expr)

    def work(size: int, rng: np.random.Generator) -> np.ndarray:
        start = sample_increment(spec, s, rng, size)
        increments = sample_increment(spec, t - s, rng, size * n_inner).reshape(size, n_inner)
        inner = evaluate(start[:, None] + increments, t).mean(axis=1)
        residual = inner - evaluate(start, s)
        return np.array([residual.sum(), (residual * residual).sum(), np.abs(residual).max()])

    outer_chunk = max(1, CHUNK_SIZE // n_inner)
    sums = _run_chunks(work, _chunk_sizes(n_outer, outer_chunk), seed, workers)
    mean, standard_error = _estimate(
        np.array([chunk[0] for chunk in sums]), np.array([chunk[1] for chunk in sums]), n_outer
    )
    residual = MartingaleResidual(
        k=k,
        s=s,
        t=t,
        mean=mean,
        standard_error=standard_error,
        max_abs=max(float(chunk[2]) for chunk in sums),
        z_score=_z_score(mean, standard_error, 1.0),
    )
    report = SimReport(
        process=spec, seed=seed, n_samples=n_outer, n_inner=n_inner, t=t, residuals=[residual]
    )
    if not report.passes():
        logger.warning(f"Martingale residual of Q_{k} for {spec.kind} exceeds 5 standard errors")
    return report
