import pytest
import sympy as sp

from umbral_tsh.algebra.indeterminates import T, X
from umbral_tsh.tsh import (
    appell_check,
    complete_bell_form,
    is_tsh,
    martingale_check,
    q_coeffs_direct,
    q_poly,
    sheffer_split,
    tsh_coefficients,
    wald_check,
)
from umbral_tsh.umbral import brownian_umbra, gamma_umbra, poisson_umbra


def test_hermite_basis():
    bm = brownian_umbra(1)
    assert q_poly(bm, 2).expr == X**2 - T
    assert q_poly(bm, 3).expr == X**3 - 3 * T * X
    assert q_poly(bm, 4).expr == X**4 - 6 * T * X**2 + 3 * T**2


def test_poisson_basis():
    assert q_poly(poisson_umbra(1), 2).expr == sp.expand(X**2 - 2 * T * X + T**2 - T)


def test_three_constructions_agree(test_umbrae):
    for alpha in test_umbrae:
        for k in range(7):
            q = q_poly(alpha, k)
            assert q.equals(q_coeffs_direct(alpha, k)), (alpha.label, k)
            assert q.equals(complete_bell_form(alpha, k)), (alpha.label, k)


def test_martingale_wald_appell_sheffer(test_umbrae):
    for alpha in test_umbrae:
        for k in range(5):
            assert martingale_check(alpha, k), (alpha.label, k)
            assert wald_check(alpha, k), (alpha.label, k)
            assert appell_check(alpha, k), (alpha.label, k)
            assert sheffer_split(alpha, k), (alpha.label, k)


def test_coefficients_and_evaluation():
    q = q_poly(gamma_umbra(1), 2)
    assert q.coefficients() == {(2, 0): 1, (1, 1): -2, (0, 2): 1, (0, 1): -1}
    assert q.at(x=0, t=1) == 0


def test_tsh_reconstruction_and_converse():
    bm = brownian_umbra(1)
    assert tsh_coefficients(bm, [0, 0, 1]) == X**2 - T
    assert is_tsh(bm, X**2 - T)
    check = is_tsh(bm, X**2)
    assert not check
    assert "lhs=" in check.witness()


@pytest.mark.parametrize("k", [0, 1, 2])
def test_wald_identity_is_kronecker_delta(k):
    assert wald_check(poisson_umbra(2), k).holds
