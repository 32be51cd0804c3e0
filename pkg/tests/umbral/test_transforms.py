import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral_tsh.exceptions import ConstantTermError
from umbral_tsh.umbral import (
    boolean_cumulants,
    boolean_moments,
    classical_cumulants,
    classical_moments,
    free_cumulants,
    free_moments,
)

CATALAN = [sp.catalan(n) for n in range(7)]
SEMICIRCLE = [1, 0, 1, 0, 2, 0, 5]

moment_tails = st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=6)


def test_gaussian_cumulants():
    assert classical_cumulants([1, 0, 1, 0, 3]) == (0, 1, 0, 0)
    assert classical_moments([0, 1, 0, 0]) == (1, 0, 1, 0, 3)


def test_boolean_cumulants_of_catalan():
    assert boolean_cumulants(CATALAN[:5]) == (1, 1, 2, 5)


def test_free_cumulants_of_catalan_and_semicircle():
    assert free_cumulants(CATALAN) == (1,) * 6
    assert free_cumulants(SEMICIRCLE) == (0, 1, 0, 0, 0, 0)
    assert free_moments([0, 1, 0, 0, 0, 0]) == tuple(SEMICIRCLE)


def test_constant_term_must_be_one():
    with pytest.raises(ConstantTermError):
        boolean_cumulants([2, 1])
    with pytest.raises(ConstantTermError):
        free_cumulants([0, 1])


@settings(max_examples=30, deadline=None)
@given(moment_tails)
def test_classical_round_trip(tail):
    moments = [1] + tail
    assert list(classical_moments(classical_cumulants(moments))) == moments


@settings(max_examples=30, deadline=None)
@given(moment_tails)
def test_boolean_round_trip(tail):
    moments = [1] + tail
    assert list(boolean_moments(boolean_cumulants(moments))) == moments


@settings(max_examples=30, deadline=None)
@given(moment_tails)
def test_free_round_trip(tail):
    moments = [1] + tail
    assert list(free_moments(free_cumulants(moments))) == moments
