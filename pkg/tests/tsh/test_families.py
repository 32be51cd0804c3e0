import pytest
import sympy as sp

from umbral_tsh.algebra.indeterminates import T, X, is_zero, symbol
from umbral_tsh.exceptions import DegenerateUmbraError, ParameterError, UnknownNameError
from umbral_tsh.tsh import (
    classical,
    family_names,
    get_family,
    is_tsh,
    levy_sheffer,
    levy_sheffer_combination,
    levy_sheffer_series,
    load_family_registry,
    orthogonal_polynomial,
    orthogonal_system,
    orthogonality_check,
    process_umbra,
    q_poly,
    resolve_parameters,
    umbral,
)
from umbral_tsh.umbral import dot, special

FAMILIES = [
    "bernoulli",
    "euler",
    "krawtchouk",
    "pseudo-narumi",
    "hermite",
    "poisson-charlier",
    "laguerre",
    "actuarial",
    "meixner",
]
HALF = sp.Rational(1, 2)


def test_registry_lists_every_family():
    assert family_names() == FAMILIES
    spec = get_family("poisson_charlier")
    assert spec.name == "poisson-charlier"
    assert spec.construction == "stirling"
    assert spec.parameters == {"lam": "1"}
    with pytest.raises(UnknownNameError):
        get_family("chebyshev")


def test_registry_from_file(tmp_path):
    path = tmp_path / "families.yaml"
    path.write_text(
        "families:\n"
        "  hermite:\n"
        "    title: Hermite\n"
        "    process: brownian\n"
        "    construction: tsh\n"
        "    parameters: {sigma: 2}\n"
        "    normalization: Q_k\n"
        "    classical_egf: exp(xz - t z^2/2)\n"
    )
    registry = load_family_registry(path)
    assert list(registry) == ["hermite"]
    assert registry["hermite"].parameters == {"sigma": "2"}
    with pytest.raises(FileNotFoundError):
        load_family_registry(tmp_path / "missing.yaml")


@pytest.mark.parametrize("name", FAMILIES)
def test_classical_equals_umbral_at_defaults(name):
    params = get_family(name).parameters
    for k in range(6):
        assert sp.expand(classical(name, k, params) - umbral(name, k, params)) == 0, k


@pytest.mark.parametrize("k", range(7))
def test_laguerre_matches_associated_laguerre_polynomials(k):
    # Q_k(x, t) = (-1)^k k! L_k^{(t-k)}(x)
    expected = (-1) ** k * sp.factorial(k) * sp.expand_func(sp.assoc_laguerre(k, T - k, X))
    assert sp.expand(umbral("laguerre", k, {}) - expected) == 0


@pytest.mark.parametrize("name", FAMILIES)
def test_family_polynomials_are_tsh(name):
    params = get_family(name).parameters
    alpha = process_umbra(name, params)
    for k in range(5):
        assert is_tsh(alpha, umbral(name, k, params)), k


@pytest.mark.parametrize(
    "name, k, params, expected",
    [
        ("hermite", 3, {"sigma": 1}, X**3 - 3 * T * X),
        ("bernoulli", 1, {}, X - T / 2),
        ("bernoulli", 2, {}, X**2 - T * X + T * (3 * T - 1) / 12),
        ("euler", 1, {}, X - T / 2),
        ("krawtchouk", 1, {"p": HALF}, T - 2 * X),
        ("pseudo-narumi", 1, {"a": 1}, X - T / 2),
        ("poisson-charlier", 2, {"lam": 1}, X**2 - X - 2 * T * X + T**2),
        ("laguerre", 2, {}, X**2 - 2 * T * X + T**2 - T),
        ("actuarial", 2, {"lam": 1}, (T - X) ** 2 - X),
        ("meixner", 2, {"p": HALF}, X**2 - 2 * T * X + T**2 - 3 * X + T),
    ],
)
def test_known_polynomials(name, k, params, expected):
    assert sp.expand(umbral(name, k, params) - expected) == 0


def test_symbolic_parameters():
    sigma, lam = symbol("sigma"), symbol("lam")
    assert umbral("hermite", 2) == X**2 - sigma**2 * T
    charlier = umbral("poisson-charlier", 2)
    assert sp.expand(charlier - (X**2 - X - 2 * lam * T * X + lam**2 * T**2)) == 0
    assert is_zero(classical("meixner", 2) - umbral("meixner", 2))


def test_bernoulli_at_unit_time_is_classical():
    for k in range(5):
        assert sp.expand(umbral("bernoulli", k).subs(T, 1) - sp.bernoulli(k, X)) == 0


def test_parameter_validation():
    with pytest.raises(ParameterError):
        resolve_parameters("meixner", {"p": "3/2"})
    with pytest.raises(ParameterError):
        resolve_parameters("hermite", {"p": "1/2"})
    with pytest.raises(ParameterError):
        resolve_parameters("poisson-charlier", {"lam": 0})
    with pytest.raises(ParameterError):
        umbral("hermite", -1)
    assert resolve_parameters("krawtchouk") == {"p": symbol("p")}


def test_levy_sheffer_paths_agree():
    pairs = [
        (special("bell"), special("unity")),
        (special("boolean_unity"), special("bell")),
        (dot(-1, special("bernoulli")), special("boolean_unity")),
    ]
    for alpha, gamma in pairs:
        oracle = levy_sheffer_series(alpha, gamma, 4)
        for k in range(5):
            direct = levy_sheffer(alpha, gamma, k)
            assert sp.expand(direct - levy_sheffer_combination(alpha, gamma, k)) == 0
            assert sp.expand(direct - oracle[k]) == 0


def test_levy_sheffer_with_singleton_reduces_to_tsh_basis():
    alpha = special("bell")
    for k in range(5):
        expected = q_poly(dot(-1, alpha), k).expr
        assert sp.expand(levy_sheffer(alpha, special("singleton"), k) - expected) == 0


def test_levy_sheffer_needs_nonzero_first_moment():
    with pytest.raises(DegenerateUmbraError):
        levy_sheffer(special("bell"), special("augmentation"), 2)


@pytest.mark.parametrize("name", ["hermite", "poisson-charlier", "laguerre", "meixner"])
def test_orthogonality(name):
    params = get_family(name).parameters
    for n in range(5):
        for m in range(n):
            assert orthogonality_check(name, n, m, params) == 0, (n, m)
    assert orthogonality_check(name, 2, 2, params) != 0


def test_hermite_norm():
    assert orthogonality_check("hermite", 2, 2, {"sigma": 1}) == 2 * T**2
    assert orthogonal_polynomial("hermite", 2, {"sigma": 1}) == X**2 - T


def test_orthogonal_system_only_for_meixner_class():
    with pytest.raises(ParameterError):
        orthogonal_system("bernoulli")
