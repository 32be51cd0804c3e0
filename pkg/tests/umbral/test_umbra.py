import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from umbral_tsh.algebra.indeterminates import S, T
from umbral_tsh.exceptions import (
    ConstantTermError,
    DegenerateUmbraError,
    ParameterError,
    TruncationOrderError,
    UnknownNameError,
)
from umbral_tsh.umbral import (
    Umbra,
    add,
    comp_inverse,
    composition,
    cumulants,
    derivative,
    disjoint_sum,
    dot,
    inverse,
    multiply,
    partition_umbra,
    scale,
    special,
)


def test_special_umbrae_moments():
    assert special("bell").moments(5) == [1, 1, 2, 5, 15, 52]
    assert special("boolean_unity").moments(4) == [1, 1, 2, 6, 24]
    assert special("singleton").moments(3) == [1, 1, 0, 0]
    assert special("augmentation").moments(2) == [1, 0, 0]
    assert special("bernoulli").moments(3) == [1, sp.Rational(-1, 2), sp.Rational(1, 6), 0]
    assert special("euler").moments(2) == [1, sp.Rational(1, 2), 0]
    assert special("euler_numbers").moments(4) == [1, 0, -1, 0, 5]
    assert special("gaussian").moments(3) == [1, 0, 1, 0]


def test_special_aliases_and_unknown_names():
    assert special("beta").label == "bell"
    assert special("u_bar").label == "boolean_unity"
    with pytest.raises(UnknownNameError):
        special("nope")
    with pytest.raises(KeyError):
        special("nope")


def test_from_sequence_validation():
    with pytest.raises(ConstantTermError):
        Umbra.from_sequence([2, 1])
    short = Umbra.from_sequence([1, 3])
    assert short.moment(1) == 3
    with pytest.raises(TruncationOrderError):
        short.moment(2)
    with pytest.raises(ParameterError):
        short.moment(-1)


def test_dot_product_moments():
    assert dot(2, special("unity")).moment(3) == 8
    assert dot(T, special("bell")).moment(2) == T**2 + T
    # n·χ has moments (n)_k
    assert dot(T, special("singleton")).moment(3) == T**3 - 3 * T**2 + 2 * T


def test_sums_products_and_scaling():
    unity = special("unity")
    assert add(unity, unity).moments(3) == [1, 2, 4, 8]
    assert scale(3, unity).moment(2) == 9
    assert multiply(special("bell"), unity).moments(4) == special("bell").moments(4)
    assert disjoint_sum(special("singleton"), special("singleton")).moments(3) == [1, 2, 0, 0]
    assert derivative(unity).moments(3) == [1, 1, 2, 3]


def test_cumulants_of_poisson_are_all_one():
    assert cumulants(special("bell")).moments(5) == [1] * 6


def test_partition_inverts_cumulants(test_umbrae):
    for alpha in test_umbrae:
        assert partition_umbra(cumulants(alpha)).equals(alpha, 6), alpha.label


def test_dot_product_is_additive_in_time(test_umbrae):
    for alpha in test_umbrae:
        assert dot(T + S, alpha).equals(add(dot(T, alpha), dot(S, alpha)), 5), alpha.label


def test_inverse_cancels(test_umbrae):
    for alpha in test_umbrae:
        assert add(dot(T, alpha), inverse(T, alpha)).equals(special("augmentation"), 5)


def test_compositional_inverse():
    for name in ("unity", "bell", "boolean_unity"):
        alpha = special(name)
        assert composition(alpha, comp_inverse(alpha)).equals(special("singleton"), 6), name
    with pytest.raises(DegenerateUmbraError):
        comp_inverse(special("augmentation"))


def test_composition_with_singleton_is_identity(random_umbrae):
    for alpha in random_umbrae:
        assert composition(alpha, special("singleton")).equals(alpha, 6)


positions = st.integers(0, 2)
small_ints = st.integers(-3, 3)


@settings(max_examples=15, deadline=None)
@given(first=positions, second=positions, third=positions)
def test_dot_product_is_associative(random_umbrae, first, second, third):
    alpha, gamma, eta = random_umbrae[first], random_umbrae[second], random_umbrae[third]
    assert dot(alpha, dot(gamma, eta)).equals(dot(dot(alpha, gamma), eta), 8)


@settings(max_examples=15, deadline=None)
@given(first=positions, second=positions)
def test_cumulants_are_additive(random_umbrae, first, second):
    alpha, gamma = random_umbrae[first], random_umbrae[second]
    assert cumulants(add(alpha, gamma)).equals(disjoint_sum(cumulants(alpha), cumulants(gamma)), 8)


@settings(max_examples=15, deadline=None)
@given(position=positions, c=small_ints)
def test_cumulants_are_homogeneous(random_umbrae, position, c):
    alpha = random_umbrae[position]
    kappa = cumulants(alpha)
    scaled = cumulants(scale(c, alpha))
    for i in range(9):
        assert scaled.moment(i) == c**i * kappa.moment(i), i


@settings(max_examples=15, deadline=None)
@given(position=positions, c=small_ints)
def test_cumulants_are_semi_invariant(random_umbrae, position, c):
    alpha = random_umbrae[position]
    kappa = cumulants(alpha)
    shifted = cumulants(add(alpha, scale(c, special("unity"))))
    assert shifted.moment(1) == kappa.moment(1) + c
    for i in (0, *range(2, 9)):
        assert shifted.moment(i) == kappa.moment(i), i


def test_cumulant_laws_with_symbolic_constant(catalogue):
    unity = special("unity")
    for alpha in catalogue.values():
        kappa = cumulants(alpha)
        scaled = cumulants(scale(S, alpha))
        shifted = cumulants(add(alpha, scale(S, unity)))
        for i in range(6):
            assert sp.expand(scaled.moment(i) - S**i * kappa.moment(i)) == 0, (alpha.label, i)
            expected = kappa.moment(i) + (S if i == 1 else 0)
            assert sp.expand(shifted.moment(i) - expected) == 0, (alpha.label, i)
