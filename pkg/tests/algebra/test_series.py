import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral_tsh.algebra import multiseries as mser
from umbral_tsh.algebra import series as ser
from umbral_tsh.algebra.indeterminates import T
from umbral_tsh.algebra.multiseries import MultiSeries
from umbral_tsh.algebra.series import Series
from umbral_tsh.exceptions import ConstantTermError, DegenerateUmbraError, TruncationOrderError
from umbral_tsh.umbral import comp_inverse, composition, special

small_ints = st.integers(min_value=-3, max_value=3)


def test_exp_of_z_is_the_exponential():
    assert ser.exp(Series.variable(5)).coeffs == (1,) * 6


def test_reciprocal_and_power():
    e = Series.exponential(1, 4)
    assert ser.reciprocal(e).equals(Series.exponential(-1, 4))
    assert ser.power(e, T).equals(Series.exponential(T, 4))


def test_compose_with_the_identity():
    f = Series.from_coefficients([1, 2, 3, 4])
    assert ser.compose(f, Series.variable(3)).equals(f)


def test_revert_exponential_gives_logarithm():
    # (e^z - 1)^{<-1>} = log(1 + z), EGF coefficients (-1)^{k-1} (k-1)!
    assert ser.revert(Series.exponential(1, 5)).coeffs == (1, 1, -1, 2, -6, 24)


def test_series_errors():
    with pytest.raises(ConstantTermError):
        ser.exp(Series.one(3))
    with pytest.raises(ConstantTermError):
        ser.log(Series.variable(3))
    with pytest.raises(TruncationOrderError):
        Series.one(3) + Series.one(4)
    with pytest.raises(DegenerateUmbraError):
        ser.revert(Series.from_coefficients([1, 0, 1]))
    with pytest.raises(TruncationOrderError):
        Series.one(2).truncate(5)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_ints, min_size=4, max_size=4))
def test_log_inverts_exp(tail):
    f = Series.from_coefficients([0] + tail)
    assert ser.log(ser.exp(f)).equals(f)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_ints, min_size=3, max_size=3))
def test_revert_is_a_compositional_inverse(tail):
    f = Series.from_coefficients([1, 1] + tail)
    h = ser.revert(f)
    assert ser.compose(f - 1, h - 1).equals(Series.variable(f.order))


def test_multiseries_exp_and_log():
    order = 3
    linear = MultiSeries.from_function(2, order, lambda i: 1 if sum(i) == 1 else 0)
    expected = MultiSeries.linear_exponential([1, 1], order)
    assert mser.exp(linear).equals(expected)
    assert mser.log(expected).equals(linear)
    assert MultiSeries.from_univariate_sum(Series.exponential(1, order), 2).equals(expected)


def test_multiseries_power_and_index_bounds():
    f = MultiSeries.linear_exponential([1, 2], 3)
    assert mser.power(f, T).equals(MultiSeries.linear_exponential([T, 2 * T], 3))
    assert f[(1, 1)] == 2
    with pytest.raises(TruncationOrderError):
        _ = f[(2, 2)]
    assert sp.expand(mser.mul(f, f)[(0, 2)]) == 16


ORDER = 12


def _closed_forms():
    e = Series.exponential(1, ORDER)
    return {
        "unity": e,
        "bell": ser.exp(e - 1),
        "boolean_unity": Series.from_ordinary([1] * (ORDER + 1)),
        # z/(e^z - 1) = 1/((e^z - 1)/z)
        "bernoulli": ser.reciprocal(
            Series.from_coefficients([sp.Rational(1, n + 1) for n in range(ORDER + 1)])
        ),
        # 2e^z/(e^z + 1) = 1/((1 + e^{-z})/2)
        "euler": ser.reciprocal(
            Series.from_coefficients([1] + [sp.Rational((-1) ** n, 2) for n in range(1, ORDER + 1)])
        ),
        "euler_numbers": ser.reciprocal((e + Series.exponential(-1, ORDER)) * sp.Rational(1, 2)),
    }


@pytest.mark.parametrize("name", ["unity", "bell", "boolean_unity", "bernoulli", "euler", "euler_numbers"])
def test_special_umbrae_match_closed_form_generating_functions(name):
    assert special(name).series(ORDER).equals(_closed_forms()[name]), name


def _lagrange_inverse(f):
    """EGF coefficients of (f - 1)^{<-1>} + 1 by Lagrange inversion."""
    w = sp.Symbol("w")
    shifted = sum(c * w**k / sp.factorial(k) for k, c in enumerate(f.coeffs) if k >= 1)
    ratio = sp.series(w / shifted, w, 0, f.order).removeO()
    coeffs = [sp.Integer(1)]
    for n in range(1, f.order + 1):
        coeffs.append(sp.factorial(n - 1) * sp.expand(ratio**n).coeff(w, n - 1))
    return Series.from_coefficients(coeffs)


@pytest.mark.parametrize(
    "coefficients",
    [(1, 1, 3, -2, 5, 1, 7), (1, 2, 0, 1, -1, 4), (1, sp.Rational(-1, 2), 1, 0, 3)],
)
def test_revert_agrees_with_lagrange_inversion(coefficients):
    f = Series.from_coefficients(coefficients)
    assert ser.revert(f).equals(_lagrange_inverse(f))


def test_revert_twice_is_the_identity():
    f = Series.from_coefficients([1, 1, 3, -2, 5, 1, 7])
    assert ser.revert(ser.revert(f)).equals(f)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([-2, -1, 1, 2, 3]), st.lists(small_ints, min_size=3, max_size=3))
def test_revert_is_an_involution(lead, tail):
    f = Series.from_coefficients([1, lead] + tail)
    assert ser.revert(ser.revert(f)).equals(f)


def test_umbral_composition_agrees_with_series_composition(catalogue):
    order = 8
    for alpha in catalogue.values():
        for gamma in catalogue.values():
            expected = ser.compose_shifted(alpha.series(order), gamma.series(order))
            assert composition(alpha, gamma).series(order).equals(expected), (alpha.label, gamma.label)


def test_compositional_inverse_agrees_with_revert(catalogue):
    order = 8
    for alpha in catalogue.values():
        assert comp_inverse(alpha).series(order).equals(ser.revert(alpha.series(order))), alpha.label
