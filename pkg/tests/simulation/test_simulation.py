import numpy as np
import pytest
import sympy as sp
from pydantic import ValidationError

from umbral_tsh.exceptions import ParameterError
from umbral_tsh.simulation import (
    JumpSpec,
    MomentEstimate,
    ProcessSpec,
    SimReport,
    chunk_generators,
    empirical_moments,
    martingale_mc,
    process_umbra,
    sample_increment,
)
from umbral_tsh.umbral.levy import poisson_umbra

BROWNIAN = ProcessSpec(kind="brownian")
POISSON = ProcessSpec(kind="poisson", lam=1.0)


def test_sample_shapes():
    rng = np.random.default_rng(0)
    assert sample_increment(BROWNIAN, 0.5, rng, 10).shape == (10,)
    spec = ProcessSpec(kind="multivariate-brownian", covariance=[[1.0, 0.5], [0.5, 1.0]])
    assert sample_increment(spec, 0.5, rng, 10).shape == (10, 2)
    jumps = ProcessSpec(kind="compound-poisson", jump=JumpSpec(kind="uniform", low=-1.0, high=1.0))
    assert sample_increment(jumps, 1.0, rng, 7).shape == (7,)


def test_increment_length_must_be_positive():
    rng = np.random.default_rng(0)
    with pytest.raises(ParameterError):
        sample_increment(BROWNIAN, 0.0, rng)


def test_chunk_generators_are_reproducible():
    first = [g.standard_normal(3) for g in chunk_generators(7, 2)]
    second = [g.standard_normal(3) for g in chunk_generators(7, 2)]
    assert all(np.array_equal(a, b) for a, b in zip(first, second))
    assert not np.array_equal(first[0], first[1])


def test_same_seed_same_report():
    one = empirical_moments(POISSON, 1.0, 3, 20_000, seed=11)
    two = empirical_moments(POISSON, 1.0, 3, 20_000, seed=11)
    assert one.model_dump() == two.model_dump()


def test_workers_do_not_change_the_report():
    serial = empirical_moments(BROWNIAN, 1.0, 4, 250_000, seed=3, workers=1)
    threaded = empirical_moments(BROWNIAN, 1.0, 4, 250_000, seed=3, workers=2)
    assert serial.model_dump() == threaded.model_dump()


def test_exact_moments_reported():
    report = empirical_moments(POISSON, 1.0, 2, 1_000, seed=0)
    zeroth, _, second = report.moments
    assert zeroth.exact == "1/1"
    assert zeroth.z_score == 0.0
    assert second.exact == "2/1"
    brownian = empirical_moments(BROWNIAN, 1.0, 3, 1_000, seed=0)
    assert [m.exact for m in brownian.moments] == ["1/1", "0/1", "1/1", "0/1"]


@pytest.mark.parametrize(
    "spec",
    [
        BROWNIAN,
        POISSON,
        ProcessSpec(kind="gamma", lam=2.0),
        ProcessSpec(kind="multivariate-brownian", covariance=[[2.0, 1.0], [1.0, 2.0]]),
    ],
)
def test_moments_within_tolerance(spec):
    report = empirical_moments(spec, 1.0, 4, 50_000, seed=0)
    assert report.passes(5.0), report.z_scores()


def test_martingale_residuals():
    constant = martingale_mc(BROWNIAN, 0, 0.5, 1.0, 200, 4, seed=1)
    assert constant.residuals[0].mean == 0.0
    assert constant.residuals[0].z_score == 0.0
    report = martingale_mc(BROWNIAN, 2, 0.5, 1.0, 2_000, 16, seed=1)
    assert report.passes(5.0), report.z_scores()


def test_martingale_argument_checks():
    with pytest.raises(ParameterError):
        martingale_mc(BROWNIAN, 2, 1.0, 0.5, 10, 2, seed=0)
    with pytest.raises(ParameterError):
        martingale_mc(BROWNIAN, 2, 0.5, 1.0, 0, 2, seed=0)


def test_invalid_specs():
    with pytest.raises(ValidationError):
        ProcessSpec(kind="poisson", lam=0.0)
    with pytest.raises(ValidationError):
        ProcessSpec(kind="pascal", p=1.0)
    with pytest.raises(ValidationError):
        ProcessSpec(kind="multivariate-brownian", covariance=[[1.0, 2.0], [2.0, 1.0]])
    with pytest.raises(ValidationError):
        JumpSpec(kind="uniform", low=1.0, high=0.0)


def test_degenerate_discrepancy_fails():
    estimate = MomentEstimate(
        index=[1], exact="1/1", symbolic=1.0, empirical=2.0, standard_error=0.0, z_score=None
    )
    report = SimReport(process=BROWNIAN, seed=0, n_samples=1, t=1.0, moments=[estimate])
    assert not report.passes()


def test_point_mass_jumps_give_poisson():
    spec = ProcessSpec(kind="compound-poisson", lam=2.0, jump=JumpSpec(kind="point-mass", value=1.0))
    alpha = process_umbra(spec)
    reference = poisson_umbra(2)
    for k in range(6):
        assert sp.expand(alpha.moment(k) - reference.moment(k)) == 0, k


@pytest.mark.slow
@pytest.mark.parametrize(
    "spec",
    [
        BROWNIAN,
        POISSON,
        ProcessSpec(kind="gamma", lam=1.0),
        ProcessSpec(kind="pascal", p=0.5),
    ],
)
def test_large_sample_corroboration(spec):
    report = empirical_moments(spec, 1.0, 4, 1_000_000, seed=0, workers=2)
    assert report.passes(5.0), report.z_scores()
    for k in range(1, 5):
        residuals = martingale_mc(spec, k, 0.5, 1.0, 20_000, 16, seed=k)
        assert residuals.passes(5.0), (k, residuals.z_scores())
