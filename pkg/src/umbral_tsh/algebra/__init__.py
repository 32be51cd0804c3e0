"""Exact algebra: indeterminates, combinatorics and truncated series."""

from .combinatorics import (
    IntPartition,
    MultiIndexPartition,
    complete_bell,
    lower_factorial,
    multi_index_partitions,
    partial_bell,
    partitions,
    stirling_first,
)
from .indeterminates import ONE, S, T, X, ZERO, as_poly, is_zero, poly_equal, symbol
from .multiseries import MultiSeries
from .series import DEFAULT_ORDER, Series

__all__ = [
    "IntPartition",
    "MultiIndexPartition",
    "partitions",
    "multi_index_partitions",
    "partial_bell",
    "complete_bell",
    "stirling_first",
    "lower_factorial",
    "Series",
    "MultiSeries",
    "DEFAULT_ORDER",
    "symbol",
    "as_poly",
    "is_zero",
    "poly_equal",
    "X",
    "T",
    "S",
    "ONE",
    "ZERO",
]
