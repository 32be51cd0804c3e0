import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral_tsh.exceptions import ParameterError, UnknownNameError
from umbral_tsh.tsh import (
    get_family,
    ks_assignment,
    ks_derived_assignment,
    ks_families,
    ks_homogeneity_check,
    ks_recursive,
    ks_specialize,
    ks_umbral,
    ks_variables,
    umbral,
)


def test_low_degrees():
    x1, x2, x3 = ks_variables(3)
    assert ks_recursive(0).expr == 1
    assert ks_recursive(1).expr == x1
    assert ks_recursive(2).expr == sp.expand((x1**2 - x2) / 2)
    assert ks_recursive(3).expr == sp.expand((x1**3 - 3 * x1 * x2 + 2 * x3) / 6)


def test_recursion_matches_umbral_form():
    for n in range(8):
        assert ks_recursive(n).equals(ks_umbral(n)), n


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=-3, max_value=3), st.integers(min_value=0, max_value=5))
def test_homogeneity(a, n):
    assert ks_homogeneity_check(n, a)


def test_symbolic_homogeneity():
    assert ks_homogeneity_check(4)


@pytest.mark.parametrize("family", ["hermite", "poisson-charlier", "laguerre", "actuarial", "meixner"])
def test_specializations_match_families(family):
    assert family in ks_families()
    params = get_family(family).parameters
    for k in range(6):
        assert sp.expand(ks_specialize(family, k, params) - umbral(family, k, params)) == 0, k


@pytest.mark.parametrize("family", ["hermite", "poisson-charlier", "laguerre", "actuarial", "meixner"])
def test_assignments_follow_from_cumulants(family):
    params = get_family(family).parameters
    stated = ks_assignment(family, 5, params)
    derived = ks_derived_assignment(family, 5, params)
    assert all(sp.expand(a - b) == 0 for a, b in zip(stated, derived))


def test_errors():
    with pytest.raises(UnknownNameError):
        ks_specialize("bernoulli", 2)
    with pytest.raises(ParameterError):
        ks_recursive(3).substitute([1])
    with pytest.raises(ParameterError):
        ks_recursive(-1)
