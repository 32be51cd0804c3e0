import math

import pytest
import sympy as sp

from umbral_tsh.algebra.indeterminates import T, symbol
from umbral_tsh.umbral import (
    LevyTriplet,
    Umbra,
    bernoulli_half_umbra,
    bernoulli_walk_umbra,
    boolean_levy_umbra,
    brownian_umbra,
    cumulants,
    dot,
    free_levy_umbra,
    gamma_umbra,
    levy_umbra,
    pascal_umbra,
    poisson_umbra,
    subordinate,
    uniform_walk_umbra,
)
from umbral_tsh.umbral.levy import point_mass_law, uniform_law


def test_brownian_moments():
    sigma = symbol("sigma")
    assert brownian_umbra(sigma).moments(4) == [1, 0, sigma**2, 0, 3 * sigma**4]


def test_poisson_gamma_pascal_first_moments():
    lam = symbol("lam")
    assert poisson_umbra(lam).moment(2) == lam**2 + lam
    assert gamma_umbra(1).moments(4) == [1, 1, 2, 6, 24]
    assert dot(T, gamma_umbra(2)).moment(1) == 2 * T
    # negative binomial with d = p/q = 1
    assert pascal_umbra(sp.Rational(1, 2)).moment(1) == 1


def test_random_walk_steps():
    assert uniform_walk_umbra(1).moments(3) == [1, sp.Rational(1, 2), sp.Rational(1, 3), sp.Rational(1, 4)]
    p = symbol("p")
    assert bernoulli_walk_umbra(p).moments(3) == [1, p, p, p]
    assert bernoulli_half_umbra().moments(4) == [1] + [sp.Rational(1, 2)] * 4


def test_compound_poisson_with_unit_jumps_is_poisson():
    triplet = LevyTriplet.compound_poisson(2, point_mass_law(1))
    assert levy_umbra(triplet).equals(poisson_umbra(2), 5)


def test_uniform_jump_law():
    assert uniform_law(0, 2).moments(2) == [1, 1, sp.Rational(4, 3)]


def test_jump_umbra_must_be_compensated():
    with pytest.raises(ValueError):
        LevyTriplet(jumps=Umbra.from_sequence([1, 1, 1]))


def test_boolean_levy_umbra_recovers_moments():
    catalan = [sp.catalan(n) for n in range(5)]
    alpha = boolean_levy_umbra(catalan)
    assert alpha.moments(4) == [math.factorial(n) * c for n, c in enumerate(catalan)]


def test_free_levy_umbra_recovers_semicircle():
    alpha = free_levy_umbra([1, 0, 1, 0, 2])
    assert alpha.moments(4) == [1, 0, 2, 0, 48]


@pytest.mark.parametrize(
    "triplet, expected",
    [
        (LevyTriplet(s=2), [1, 0, 4, 0, 48]),
        (LevyTriplet(c0=3), [1, 3, 9, 27, 81]),
        (LevyTriplet(c0=1, s=1), [1, 1, 2, 4, 10]),
    ],
)
def test_gaussian_and_drift_triplets(triplet, expected):
    assert levy_umbra(triplet).moments(4) == expected


def test_drift_and_scale_are_the_only_cumulants():
    kappa = cumulants(levy_umbra(LevyTriplet(c0=3, s=2)))
    assert kappa.moments(5) == [1, 3, 4, 0, 0, 0]


def test_brownian_motion_subordinated_to_poisson():
    subordinator = LevyTriplet.compound_poisson(1, point_mass_law(1))
    alpha = subordinate(subordinator, LevyTriplet(s=1))
    # exp(e^{z^2/2} - 1)
    assert cumulants(alpha).moments(6) == [1, 0, 1, 0, 3, 0, 15]
    assert alpha.moments(4) == [1, 0, 1, 0, 6]


def test_subordination_to_unit_drift_is_identity():
    process = LevyTriplet.compound_poisson(2, uniform_law(0, 1), s=1)
    assert subordinate(LevyTriplet(c0=1), process).equals(levy_umbra(process), 5)
