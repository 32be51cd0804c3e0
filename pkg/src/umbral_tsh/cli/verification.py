"""Verification suites: every identity computed along independent paths.

Each suite returns the list of checks it ran. Families use their registry
default parameters so that every check is an identity over the rationals in
x, s and t.
"""

import logging
from typing import Callable, Dict, List, Optional

import sympy as sp
from pydantic import BaseModel, Field

from ..algebra import series as ser
from ..algebra.combinatorics import indices_of_degree
from ..algebra.indeterminates import S, T, ZERO
from ..checks import IdentityCheck, all_hold, compare
from ..exceptions import UnknownNameError
from ..multivar import (
    MULTI_FAMILIES,
    MultiUmbra,
    add_multi,
    brownian_tuple,
    classical_multi,
    dot_multi,
    family_multi,
    levy_sheffer_multi,
    levy_sheffer_multi_series,
    martingale_check_multi,
    process_tuple,
    special_tuples,
)
from ..tsh import (
    appell_check,
    classical,
    complete_bell_form,
    family_names,
    get_family,
    is_tsh,
    ks_derived_assignment,
    ks_families,
    ks_assignment,
    ks_homogeneity_check,
    ks_recursive,
    ks_specialize,
    ks_umbral,
    levy_sheffer,
    levy_sheffer_combination,
    martingale_check,
    orthogonal_system,
    orthogonality_check,
    process_umbra,
    q_coeffs_direct,
    q_poly,
    sheffer_split,
    umbral,
    wald_check,
)
from ..umbral import (
    Umbra,
    add,
    boolean_cumulants,
    boolean_moments,
    comp_inverse,
    composition,
    cumulants,
    disjoint_sum,
    dot,
    free_cumulants,
    free_moments,
    partition_umbra,
    scale,
    special,
)

logger = logging.getLogger(__name__)

SUITES = ("umbral", "tsh", "families", "ks", "multivariate", "all")


class CheckOutcome(BaseModel):
    name: str = Field(..., description="Identity checked")
    holds: bool = Field(..., description="Whether it holds exactly")
    witness: Optional[str] = Field(None, description="lhs/rhs pair when it fails")


class VerificationReport(BaseModel):
    """Machine-readable outcome of a verification suite."""

    suite: str = Field(..., description="Suite name")
    max_degree: int = Field(..., description="Largest degree checked")
    passed: bool = Field(..., description="True iff every check holds")
    checks: List[CheckOutcome] = Field(default_factory=list)

    @classmethod
    def from_checks(cls, suite: str, max_degree: int, checks: List[IdentityCheck]) -> "VerificationReport":
        outcomes = [
            CheckOutcome(name=c.name, holds=c.holds, witness=None if c.holds else c.witness())
            for c in checks
        ]
        return cls(
            suite=suite,
            max_degree=max_degree,
            passed=all(c.holds for c in checks),
            checks=outcomes,
        )


def default_parameters(name: str) -> Dict[str, sp.Expr]:
    """Registry defaults of a family's parameters as exact values."""
    return {key: sp.Rational(value) for key, value in get_family(name).parameters.items()}


def _equal_lists(name: str, lhs, rhs) -> IdentityCheck:
    pairs = list(zip(lhs, rhs))
    if len(pairs) != len(lhs) or len(pairs) != len(rhs):
        return IdentityCheck(name=name, holds=False, lhs=list(lhs), rhs=list(rhs))
    return all_hold(name, (compare(f"{name} [{n}]", a, b) for n, (a, b) in enumerate(pairs)))


def _equal_moments(name: str, first, second, degree: int) -> IdentityCheck:
    return _equal_lists(name, first.moments(degree), second.moments(degree))


def _catalogue() -> Dict[str, object]:
    return {
        "unity": special("unity"),
        "bell": special("bell"),
        "boolean_unity": special("boolean_unity"),
        "bernoulli": special("bernoulli"),
        "euler": special("euler"),
    }


_TRIPLES = (
    ("bell", "boolean_unity", "bernoulli"),
    ("unity", "euler", "bell"),
    ("boolean_unity", "bell", "euler"),
)


def _shifted_first(kappa: Umbra, a) -> Umbra:
    return Umbra(lambda k: kappa.moment(k) + a if k == 1 else kappa.moment(k), f"{kappa.label}+{a}")


def _algebraic_laws(n: int) -> List[IdentityCheck]:
    """Associativity, cumulant additivity, homogeneity and semi-invariance."""
    checks = []
    for first, second, third in _TRIPLES:
        alpha, gamma, eta = special(first), special(second), special(third)
        checks.append(
            _equal_moments(
                f"associativity {first}.({second}.{third})",
                dot(alpha, dot(gamma, eta)),
                dot(dot(alpha, gamma), eta),
                n,
            )
        )
    catalogue = _catalogue()
    labels = list(catalogue)
    for left, right in zip(labels, labels[1:]):
        alpha, gamma = catalogue[left], catalogue[right]
        checks.append(
            _equal_moments(
                f"cumulant additivity {left}+{right}",
                cumulants(add(alpha, gamma)),
                disjoint_sum(cumulants(alpha), cumulants(gamma)),
                n,
            )
        )
    unity = special("unity")
    for label, alpha in catalogue.items():
        kappa = cumulants(alpha)
        checks.append(
            _equal_lists(
                f"cumulant homogeneity {label}",
                cumulants(scale(S, alpha)).moments(n),
                [S**k * kappa.moment(k) for k in range(n + 1)],
            )
        )
        checks.append(
            _equal_moments(
                f"semi-invariance {label}",
                cumulants(add(alpha, scale(S, unity))),
                _shifted_first(kappa, S),
                n,
            )
        )
    return checks


def _same_series(name: str, alpha: Umbra, series: ser.Series) -> IdentityCheck:
    return _equal_lists(name, alpha.series(series.order).coeffs, series.coeffs)


def _generating_function_paths(n: int) -> List[IdentityCheck]:
    """Moments of each operation against the matching series manipulation."""
    checks = []
    catalogue = _catalogue()
    for label, alpha in catalogue.items():
        f = alpha.series(n)
        checks.append(_same_series(f"dot = power {label}", dot(T, alpha), ser.power(f, T)))
        checks.append(_same_series(f"cumulants = log {label}", cumulants(alpha), ser.log(f) + 1))
        checks.append(_same_series(f"partition = exp {label}", partition_umbra(alpha), ser.exp(f - 1)))
        checks.append(_same_series(f"comp_inverse = revert {label}", comp_inverse(alpha), ser.revert(f)))
        for other, gamma in catalogue.items():
            checks.append(
                _same_series(
                    f"composition = compose_shifted {label}.{other}",
                    composition(alpha, gamma),
                    ser.compose_shifted(f, gamma.series(n)),
                )
            )
    return checks


def umbral_suite(max_degree: int) -> List[IdentityCheck]:
    checks = []
    n = max_degree
    for label, alpha in _catalogue().items():
        checks.append(
            _equal_moments(f"partition(cumulants({label}))", partition_umbra(cumulants(alpha)), alpha, n)
        )
        checks.append(
            _equal_moments(
                f"dot additivity {label}", dot(T + S, alpha), add(dot(T, alpha), dot(S, alpha)), n
            )
        )
    for label in ("unity", "bell", "boolean_unity"):
        alpha = special(label)
        checks.append(
            _equal_moments(
                f"composition inverse {label}",
                composition(alpha, comp_inverse(alpha)),
                special("singleton"),
                n,
            )
        )
    checks.extend(_algebraic_laws(n))
    if n >= 1:
        checks.extend(_generating_function_paths(n))
        catalan = [sp.catalan(k) for k in range(n + 1)]
        checks.append(
            _equal_lists("boolean round trip (Catalan)", boolean_moments(boolean_cumulants(catalan)), catalan)
        )
        checks.append(
            _equal_lists("free round trip (Catalan)", free_moments(free_cumulants(catalan)), catalan)
        )
        checks.append(_equal_lists("free cumulants of Catalan", free_cumulants(catalan), [1] * n))
    return checks


def tsh_suite(max_degree: int) -> List[IdentityCheck]:
    checks = []
    umbrae = dict(_catalogue())
    for name in family_names():
        umbrae[f"process[{name}]"] = process_umbra(name, default_parameters(name))
    for label, alpha in umbrae.items():
        for k in range(max_degree + 1):
            q = q_poly(alpha, k)
            checks.append(compare(f"q_coeffs_direct[{label}] k={k}", q.expr, q_coeffs_direct(alpha, k).expr))
            checks.append(compare(f"complete_bell[{label}] k={k}", q.expr, complete_bell_form(alpha, k).expr))
            checks.append(martingale_check(alpha, k))
            checks.append(wald_check(alpha, k))
            checks.append(appell_check(alpha, k))
            checks.append(sheffer_split(alpha, k))
    return checks


def families_suite(max_degree: int) -> List[IdentityCheck]:
    checks = []
    for name in family_names():
        params = default_parameters(name)
        alpha = process_umbra(name, params)
        for k in range(max_degree + 1):
            polynomial = umbral(name, k, params)
            checks.append(compare(f"{name} classical=umbral k={k}", classical(name, k, params), polynomial))
            checks.append(is_tsh(alpha, polynomial, f"{name} is TSH k={k}"))
        if not get_family(name).orthogonal:
            continue
        system = orthogonal_system(name, params)
        top = min(max_degree, 5)
        for k in range(top + 1):
            checks.append(
                compare(
                    f"{name} levy-sheffer paths k={k}",
                    levy_sheffer(*system, k),
                    levy_sheffer_combination(*system, k),
                )
            )
        for n in range(top + 1):
            for m in range(n):
                checks.append(compare(f"{name} orthogonality n={n} m={m}", orthogonality_check(name, n, m, params), ZERO))
    return checks


def ks_suite(max_degree: int) -> List[IdentityCheck]:
    checks = []
    for n in range(max_degree + 1):
        checks.append(compare(f"ks recursive=umbral n={n}", ks_recursive(n).expr, ks_umbral(n).expr))
        checks.append(ks_homogeneity_check(n))
    for family in ks_families():
        params = default_parameters(family)
        checks.append(
            _equal_lists(
                f"ks {family} assignment",
                ks_assignment(family, max_degree, params),
                ks_derived_assignment(family, max_degree, params),
            )
        )
        for k in range(max_degree + 1):
            checks.append(
                compare(f"ks {family} k={k}", ks_specialize(family, k, params), umbral(family, k, params))
            )
    return checks


def multivariate_suite(max_degree: int) -> List[IdentityCheck]:
    checks = []
    top = min(max_degree, 4)
    for name in MULTI_FAMILIES:
        mu = process_tuple(name, 2)
        for n in range(top + 1):
            for index in indices_of_degree(2, n):
                checks.append(martingale_check_multi(mu, index))
                checks.append(
                    compare(f"{name}-multi classical i={index}", classical_multi(name, index), family_multi(name, index))
                )
                checks.append(
                    compare(
                        f"{name}-multi 3-fold dot i={index}",
                        dot_multi(3, mu).moment(index),
                        add_multi(mu, add_multi(mu, mu)).moment(index),
                    )
                )
    mu, nu = brownian_tuple(d=2), special_tuples("unity", 2)
    oracle = levy_sheffer_multi_series(mu, nu, max(top, 1))
    for n in range(top + 1):
        for index in indices_of_degree(2, n):
            checks.append(
                compare(f"levy-sheffer-multi paths i={index}", levy_sheffer_multi(mu, nu, index), oracle[index])
            )
    bell = special("bell")
    lifted = MultiUmbra.from_umbra(bell)
    for k in range(max_degree + 1):
        checks.append(
            compare(f"dot_multi d=1 k={k}", dot_multi(T, lifted).moment((k,)), dot(T, bell).moment(k))
        )
    return checks


_SUITES: Dict[str, Callable[[int], List[IdentityCheck]]] = {
    "umbral": umbral_suite,
    "tsh": tsh_suite,
    "families": families_suite,
    "ks": ks_suite,
    "multivariate": multivariate_suite,
}


def run_suite(suite: str, max_degree: int) -> VerificationReport:
    """Run a named suite ('all' runs every suite in order)."""
    if suite not in SUITES:
        raise UnknownNameError(f"Unknown suite '{suite}'; expected one of {list(SUITES)}")
    names = list(_SUITES) if suite == "all" else [suite]
    checks: List[IdentityCheck] = []
    for name in names:
        logger.info(f"Running suite '{name}' up to degree {max_degree}")
        checks.extend(_SUITES[name](max_degree))
    report = VerificationReport.from_checks(suite, max_degree, checks)
    for check in checks:
        if not check.holds:
            logger.error(f"Identity '{check.name}' failed: {check.witness()}")
    return report
