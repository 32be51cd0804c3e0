"""Partitions, Stirling numbers and Bell polynomials.

Integer partitions and multiset partitions are enumerated by sympy and then
frozen into hashable records carrying the combinatorial weights the umbral
formulas need. Results are memoized per argument up to the cap configured in
:class:`~umbral_tsh.settings.UmbralSettings`.
"""

import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import sympy as sp
from sympy.functions.combinatorial.numbers import bell, stirling
from sympy.utilities.iterables import multiset_partitions
from sympy.utilities.iterables import partitions as integer_partitions

from ..exceptions import ParameterError, TruncationOrderError
from ..settings import get_settings
from .indeterminates import ONE, T, ZERO, PolyLike, as_poly

logger = logging.getLogger(__name__)

MultiIndex = Tuple[int, ...]

_CACHE_SIZE = get_settings().cache_size


@dataclass(frozen=True)
class IntPartition:
    """A partition of ``n`` stored as weakly decreasing parts."""

    parts: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def multiplicities(self) -> Tuple[Tuple[int, int], ...]:
        """Pairs ``(part, r_part)`` by increasing part."""
        return tuple(sorted(Counter(self.parts).items()))

    def coefficient(self) -> int:
        """d_λ = n! / Π r_j! (j!)^{r_j}, the number of set partitions of this shape."""
        denominator = 1
        for part, count in self.multiplicities:
            denominator *= math.factorial(count) * math.factorial(part) ** count
        return math.factorial(self.n) // denominator

    def monomial(self, a: Sequence[sp.Expr]) -> sp.Expr:
        """Π a_j^{r_j} with ``a[0]`` standing for a_1."""
        result = ONE
        for part, count in self.multiplicities:
            result *= a[part - 1] ** count
        return result


@dataclass(frozen=True)
class MultiIndexPartition:
    """A multi-index partition: nonzero columns in lexicographic order."""

    columns: Tuple[MultiIndex, ...]

    @property
    def dimension(self) -> int:
        return len(self.columns[0]) if self.columns else 0

    @property
    def target(self) -> MultiIndex:
        return tuple(sum(column) for column in zip(*self.columns))

    @property
    def length(self) -> int:
        return len(self.columns)

    @property
    def multiplicities(self) -> Tuple[Tuple[MultiIndex, int], ...]:
        return tuple(sorted(Counter(self.columns).items()))

    def multiplicity_factorial(self) -> int:
        """𝔪(λ)! = Π over distinct columns of (their count)!"""
        return math.prod(math.factorial(count) for _, count in self.multiplicities)

    def column_factorial(self) -> int:
        """λ! = Π over columns of the column's multi-index factorial."""
        return math.prod(multi_factorial(column) for column in self.columns)

    def coefficient(self) -> int:
        """i! / (𝔪(λ)! λ!), the number of ways to realize this shape."""
        return multi_factorial(self.target) // (
            self.multiplicity_factorial() * self.column_factorial()
        )


def partitions(n: int) -> Tuple[IntPartition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ParameterError(f"Cannot partition a negative integer: {n}")
    return _partitions(n)


@lru_cache(maxsize=_CACHE_SIZE)
def _partitions(n: int) -> Tuple[IntPartition, ...]:
    if n == 0:
        return (IntPartition(()),)
    found = []
    # sympy reuses the yielded dict, so it is read immediately.
    for counts in integer_partitions(n):
        parts = sorted(
            (part for part, count in counts.items() for _ in range(count)),
            reverse=True,
        )
        found.append(IntPartition(tuple(parts)))
    found.sort(key=lambda partition: partition.parts, reverse=True)
    logger.debug(f"Enumerated {len(found)} partitions of {n}")
    return tuple(found)


def multi_index_partitions(i: Sequence[int]) -> Tuple[MultiIndexPartition, ...]:
    """All multi-index partitions of ``i``, ordered by length then columns."""
    index = tuple(int(v) for v in i)
    if any(v < 0 for v in index):
        raise ParameterError(f"Multi-index entries must be nonnegative: {index}")
    return _multi_index_partitions(index)


@lru_cache(maxsize=_CACHE_SIZE)
def _multi_index_partitions(index: MultiIndex) -> Tuple[MultiIndexPartition, ...]:
    if sum(index) == 0:
        return (MultiIndexPartition(()),)
    labels = [j for j, count in enumerate(index) for _ in range(count)]
    found = []
    for blocks in multiset_partitions(labels):
        columns = sorted(
            tuple(block.count(j) for j in range(len(index))) for block in blocks
        )
        found.append(MultiIndexPartition(tuple(columns)))
    found.sort(key=lambda partition: (partition.length, partition.columns))
    return tuple(found)


def partial_bell(n: int, k: int, a: Sequence[PolyLike]) -> sp.Expr:
    """Exponential partial Bell polynomial B_{n,k}(a_1, ..., a_{n-k+1})."""
    if n == 0 and k == 0:
        return ONE
    if not 1 <= k <= n:
        raise ParameterError(f"Partial Bell polynomial needs 1 <= k <= n, got n={n}, k={k}")
    needed = n - k + 1
    if len(a) < needed:
        raise TruncationOrderError(
            f"B_{{{n},{k}}} needs {needed} arguments, got {len(a)}"
        )
    return _partial_bell(n, k, tuple(as_poly(v) for v in a[:needed]))


@lru_cache(maxsize=_CACHE_SIZE)
def _partial_bell(n: int, k: int, args: Tuple[sp.Expr, ...]) -> sp.Expr:
    return sp.expand(bell(n, k, args))


def complete_bell(n: int, a: Sequence[PolyLike]) -> sp.Expr:
    """Complete Bell polynomial Y_n(a_1, ..., a_n), with Y_0 = 1."""
    if n == 0:
        return ONE
    if len(a) < n:
        raise TruncationOrderError(f"Y_{n} needs {n} arguments, got {len(a)}")
    return sp.expand(sum((partial_bell(n, k, a) for k in range(1, n + 1)), ZERO))


@lru_cache(maxsize=_CACHE_SIZE)
def stirling_first(n: int, k: int) -> sp.Integer:
    """Signed Stirling number of the first kind s(n, k)."""
    if n < 0 or k < 0:
        raise ParameterError(f"Stirling numbers need nonnegative arguments, got ({n}, {k})")
    if k > n:
        return ZERO
    return sp.Integer(stirling(n, k, kind=1, signed=True))


def lower_factorial(n: int, var: PolyLike = T) -> sp.Expr:
    """(var)_n = var (var - 1) ... (var - n + 1), expanded."""
    if n < 0:
        raise ParameterError(f"Lower factorial order must be nonnegative, got {n}")
    if n == 0:
        return ONE
    return sp.expand(sp.expand_func(sp.ff(as_poly(var), n)))


def binomial(n: int, k: int) -> sp.Integer:
    return sp.Integer(math.comb(n, k))


def multi_factorial(i: Sequence[int]) -> int:
    return math.prod(math.factorial(v) for v in i)


def multi_binomial(i: Sequence[int], k: Sequence[int]) -> sp.Integer:
    """Π_j C(i_j, k_j)."""
    return sp.Integer(math.prod(math.comb(a, b) for a, b in zip(i, k)))


def indices_below(i: Sequence[int]) -> Iterator[MultiIndex]:
    """All multi-indices k with k <= i componentwise, in lexicographic order."""
    return itertools.product(*(range(v + 1) for v in i))


def indices_of_degree(d: int, n: int) -> List[MultiIndex]:
    """All multi-indices in dimension ``d`` with total degree ``n``, lexicographic."""
    found = [
        index
        for index in itertools.product(range(n + 1), repeat=d)
        if sum(index) == n
    ]
    return sorted(found)


def unit_index(d: int, j: int) -> MultiIndex:
    return tuple(1 if position == j else 0 for position in range(d))
