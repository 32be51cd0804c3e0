"""Named indeterminates and the exact coefficient ring.

Every polynomial in the library is a sympy expression kept in expanded form
over the rationals. Symbols are interned by name: asking twice for ``t``
returns the same object, and a foreign symbol that reuses a registered name
with different assumptions is rejected instead of silently captured.
"""

import logging
import threading
from fractions import Fraction
from typing import Dict, Iterable, List, Union

import sympy as sp

from ..exceptions import IndeterminateCollisionError, ParameterError

logger = logging.getLogger(__name__)

PolyLike = Union[sp.Expr, int, Fraction, str]

_REGISTRY: Dict[str, sp.Symbol] = {}
_LOCK = threading.Lock()


def symbol(name: str) -> sp.Symbol:
    """Return the interned indeterminate called ``name``."""
    with _LOCK:
        existing = _REGISTRY.get(name)
        if existing is None:
            existing = sp.Symbol(name)
            _REGISTRY[name] = existing
        return existing


def symbols(names: Iterable[str]) -> List[sp.Symbol]:
    return [symbol(name) for name in names]


def indexed_symbols(prefix: str, count: int, start: int = 1) -> List[sp.Symbol]:
    """Return ``prefix1, prefix2, ...`` (``count`` of them)."""
    return [symbol(f"{prefix}{j}") for j in range(start, start + count)]


def register(sym: sp.Symbol) -> sp.Symbol:
    """Intern a symbol built elsewhere, refusing name collisions."""
    with _LOCK:
        existing = _REGISTRY.setdefault(sym.name, sym)
    if existing != sym:
        raise IndeterminateCollisionError(
            f"Indeterminate '{sym.name}' is already registered with different assumptions"
        )
    return existing


X = symbol("x")
T = symbol("t")
S = symbol("s")

ONE = sp.Integer(1)
ZERO = sp.Integer(0)


def as_poly(value: PolyLike) -> sp.Expr:
    """Coerce ``value`` into an expanded exact expression.

    Accepts sympy expressions, integers, fractions, decimal floats (read through
    their shortest decimal representation) and strings such as ``"1/2"`` or
    ``"2*t - x"``.
    """
    if isinstance(value, bool):
        raise ParameterError("Booleans are not polynomial values")
    if isinstance(value, sp.Basic):
        expr = value
    elif isinstance(value, int):
        expr = sp.Integer(value)
    elif isinstance(value, Fraction):
        expr = sp.Rational(value.numerator, value.denominator)
    elif isinstance(value, float):
        expr = sp.Rational(repr(value))
    elif isinstance(value, str):
        with _LOCK:
            local_names = dict(_REGISTRY)
        try:
            expr = sp.sympify(value, locals=local_names, rational=True)
        except (sp.SympifyError, SyntaxError, TypeError) as e:
            raise ParameterError(f"Cannot parse polynomial value '{value}': {e}") from e
    else:
        raise ParameterError(f"Unsupported polynomial value: {value!r}")
    for sym in expr.free_symbols:
        register(sym)
    return sp.expand(expr)


def to_rational(value: PolyLike, name: str = "value") -> sp.Rational:
    """Parse a numeric parameter into an exact rational."""
    expr = as_poly(value)
    if not expr.is_Rational:
        raise ParameterError(f"Parameter '{name}' must be a rational number, got {expr}")
    return expr


def is_zero(expr: sp.Expr) -> bool:
    expanded = sp.expand(expr)
    if expanded == 0:
        return True
    # Rational functions in the parameters need a common denominator.
    return sp.cancel(sp.together(expanded)) == 0


def poly_equal(lhs: sp.Expr, rhs: sp.Expr) -> bool:
    return is_zero(lhs - rhs)


def coefficient_map(expr: sp.Expr, gens: List[sp.Symbol]) -> Dict[tuple, sp.Expr]:
    """Monomial exponent tuples (over ``gens``) mapped to their coefficients."""
    expanded = sp.expand(expr)
    if expanded == 0:
        return {}
    return dict(sp.Poly(expanded, *gens).as_dict())


def sorted_generators(expr: sp.Expr, leading: List[sp.Symbol]) -> List[sp.Symbol]:
    """``leading`` followed by any other free symbols of ``expr`` by name."""
    others = sorted(
        (sym for sym in sp.expand(expr).free_symbols if sym not in leading),
        key=lambda sym: sym.name,
    )
    return list(leading) + others
