import pytest
import sympy as sp

from umbral_tsh.algebra.combinatorics import (
    IntPartition,
    complete_bell,
    indices_below,
    indices_of_degree,
    lower_factorial,
    multi_index_partitions,
    partial_bell,
    partitions,
    stirling_first,
)
from umbral_tsh.algebra.indeterminates import T, indexed_symbols
from umbral_tsh.exceptions import ParameterError, TruncationOrderError


def test_partitions_of_four_in_reverse_lexicographic_order():
    parts = [p.parts for p in partitions(4)]
    assert parts == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == (IntPartition(()),)


@pytest.mark.parametrize("n", range(1, 8))
def test_partition_coefficients_count_set_partitions(n):
    assert sum(p.coefficient() for p in partitions(n)) == sp.bell(n)


def test_partition_coefficient_and_monomial():
    partition = IntPartition((2, 1, 1))
    assert partition.coefficient() == 6
    a = indexed_symbols("a", 2)
    assert partition.monomial(a) == a[0] ** 2 * a[1]


def test_multi_index_partitions():
    assert len(multi_index_partitions((1, 1))) == 2
    shapes = multi_index_partitions((2, 1))
    assert len(shapes) == 4
    assert all(shape.target == (2, 1) for shape in shapes)
    # Weighted by their coefficients they count the set partitions of 3 labelled points.
    assert sum(shape.coefficient() for shape in shapes) == 5
    with pytest.raises(ParameterError):
        multi_index_partitions((1, -1))


def test_partial_and_complete_bell():
    a = indexed_symbols("a", 3)
    assert partial_bell(4, 2, a) == sp.expand(4 * a[0] * a[2] + 3 * a[1] ** 2)
    assert complete_bell(3, a) == sp.expand(a[0] ** 3 + 3 * a[0] * a[1] + a[2])
    assert complete_bell(0, []) == 1
    with pytest.raises(TruncationOrderError):
        partial_bell(3, 1, [1])
    with pytest.raises(ParameterError):
        partial_bell(2, 3, [1, 1])


def test_stirling_and_lower_factorial():
    assert stirling_first(3, 1) == 2
    assert stirling_first(3, 2) == -3
    assert stirling_first(4, 2) == 11
    assert stirling_first(2, 5) == 0
    assert lower_factorial(3, T) == T**3 - 3 * T**2 + 2 * T
    assert lower_factorial(0) == 1


def test_multi_index_helpers():
    assert indices_of_degree(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert list(indices_below((1, 1))) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(ParameterError):
        partitions(-1)


def _partition_counts(top):
    counts = [1] + [0] * top
    for part in range(1, top + 1):
        for n in range(part, top + 1):
            counts[n] += counts[n - part]
    return counts


def test_partition_counts_match_recurrence():
    counts = _partition_counts(30)
    for n in range(31):
        assert len(partitions(n)) == counts[n], n
    assert counts[30] == 5604


@pytest.mark.parametrize("n", range(8))
def test_signed_stirling_numbers_expand_lower_factorial(n):
    expansion = sum(stirling_first(n, k) * T**k for k in range(n + 1))
    assert sp.expand(expansion - lower_factorial(n, T)) == 0


@pytest.mark.parametrize("n", range(9))
def test_one_dimensional_multi_index_partitions_are_partitions(n):
    shapes = multi_index_partitions((n,))
    as_parts = {
        tuple(sorted((column[0] for column in shape.columns), reverse=True)): shape for shape in shapes
    }
    assert len(as_parts) == len(shapes)
    assert set(as_parts) == {p.parts for p in partitions(n)}
    for partition in partitions(n):
        assert as_parts[partition.parts].coefficient() == partition.coefficient(), partition.parts
