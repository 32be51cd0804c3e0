"""Output records and their JSON, CSV and LaTeX renderings.

Coefficients are exact: JSON and CSV carry them as "p/q" strings in lowest
terms, LaTeX uses \\frac. Terms are listed by descending degree in x (or
x_1, ..., x_d), then t, then the parameters.
"""

import csv
import io
import json
import re
from datetime import datetime
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import ParameterError

_INDEXED = re.compile(r"^x(\d+)$")
_LATEX_NAMES = {"lam": r"\lambda", "sigma": r"\sigma"}


class Term(BaseModel):
    """One monomial with its exact coefficient."""

    coefficient: str = Field(..., description='Exact rational "p/q" in lowest terms')
    monomial: Dict[str, int] = Field(
        default_factory=dict, description="Exponent per indeterminate; empty for constants"
    )


class OutputRecord(BaseModel):
    """A generated polynomial."""

    descriptor: str = Field(..., description="Family or umbra descriptor")
    degree: List[int] = Field(..., description="Degree, or multi-index")
    terms: List[Term] = Field(default_factory=list, description="Nonzero terms in display order")
    metadata: Dict[str, str] = Field(default_factory=dict, description="Truncation order, parameters")

    def to_expr(self) -> sp.Expr:
        """The polynomial back as a sympy expression."""
        total = sp.Integer(0)
        for term in self.terms:
            numerator, denominator = term.coefficient.split("/")
            value = sp.Rational(int(numerator), int(denominator))
            for name, power in term.monomial.items():
                value *= sp.Symbol(name) ** power
            total += value
        return total


def _generator_key(sym: sp.Symbol) -> Tuple[int, int, str]:
    name = sym.name
    if name == "x":
        return (0, 0, name)
    indexed = _INDEXED.match(name)
    if indexed:
        return (0, int(indexed.group(1)), name)
    if name == "t":
        return (1, 0, name)
    if name == "s":
        return (2, 0, name)
    return (3, 0, name)


def _generators(expr: sp.Expr) -> List[sp.Symbol]:
    return sorted(expr.free_symbols, key=_generator_key)


def _rational(value: sp.Expr) -> sp.Rational:
    if not value.is_Rational:
        raise ParameterError(
            f"Coefficient {value} is not rational; give numeric values for the parameters"
        )
    return value


def polynomial_terms(expr: sp.Expr) -> List[Tuple[sp.Rational, Dict[str, int]]]:
    """(coefficient, exponent map) pairs in display order."""
    expanded = sp.expand(expr)
    if expanded == 0:
        return []
    gens = _generators(expanded)
    if not gens:
        return [(_rational(expanded), {})]
    try:
        poly = sp.Poly(expanded, *gens)
    except sp.PolynomialError as exc:
        raise ParameterError(
            f"Cannot render {expanded} as a polynomial; give numeric values for "
            f"parameters in denominators ({exc})"
        ) from exc
    terms = []
    for exponents, coefficient in poly.terms():
        monomial = {gen.name: int(e) for gen, e in zip(gens, exponents) if e}
        terms.append((_rational(sp.sympify(coefficient)), monomial))
    return terms


def make_record(
    descriptor: str, degree: Sequence[int], expr: sp.Expr, metadata: Dict[str, str]
) -> OutputRecord:
    terms = [
        Term(coefficient=f"{c.p}/{c.q}", monomial=monomial)
        for c, monomial in polynomial_terms(expr)
    ]
    return OutputRecord(
        descriptor=descriptor, degree=list(degree), terms=terms, metadata=dict(metadata)
    )


def to_json(payload) -> str:
    """Stable JSON: sorted keys, two-space indent, trailing newline."""
    if isinstance(payload, BaseModel):
        data = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _monomial_text(monomial: Dict[str, int]) -> str:
    if not monomial:
        return "1"
    return "*".join(name if power == 1 else f"{name}^{power}" for name, power in monomial.items())


def records_to_csv(records: Sequence[OutputRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["descriptor", "degree", "coefficient", "monomial"])
    for record in records:
        degree = ";".join(str(v) for v in record.degree)
        for term in record.terms:
            writer.writerow([record.descriptor, degree, term.coefficient, _monomial_text(term.monomial)])
    return buffer.getvalue()


def _latex_symbol(name: str) -> str:
    if name in _LATEX_NAMES:
        return _LATEX_NAMES[name]
    indexed = _INDEXED.match(name)
    if indexed:
        return f"x_{{{indexed.group(1)}}}"
    return name


def _latex_power(base: str, power: int) -> str:
    if power == 1:
        return base
    exponent = str(power) if power < 10 else f"{{{power}}}"
    return f"{base}^{exponent}"


def _latex_monomial(monomial: Dict[str, int]) -> str:
    # params, then t and s, then the x's
    order = sorted(
        monomial,
        key=lambda name: {0: 2, 1: 1, 2: 1, 3: 0}[_generator_key(sp.Symbol(name))[0]],
    )
    text = ""
    previous = ""
    for name in order:
        base = _latex_symbol(name)
        if previous.startswith("\\"):
            text += " "
        text += _latex_power(base, monomial[name])
        previous = base
    return text


def _latex_coefficient(value: sp.Rational, has_monomial: bool) -> str:
    magnitude = abs(value)
    if magnitude == 1 and has_monomial:
        return ""
    if magnitude.q == 1:
        return str(magnitude.p)
    return f"\\frac{{{magnitude.p}}}{{{magnitude.q}}}"


def latex_polynomial(expr: sp.Expr) -> str:
    terms = polynomial_terms(expr)
    if not terms:
        return "0"
    pieces = []
    for position, (coefficient, monomial) in enumerate(terms):
        body = _latex_coefficient(coefficient, bool(monomial)) + _latex_monomial(monomial)
        if position == 0:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
    return "".join(pieces)


def records_to_latex(records: Sequence[OutputRecord]) -> str:
    """A single polynomial as a bare fragment; several as a tabular."""
    if len(records) == 1:
        return latex_polynomial(records[0].to_expr()) + "\n"
    lines = [r"\begin{tabular}{lll}", r"family & degree & polynomial \\ \hline"]
    for record in records:
        degree = ",".join(str(v) for v in record.degree)
        lines.append(f"{record.descriptor} & {degree} & ${latex_polynomial(record.to_expr())}$ \\\\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def render_records(records: Sequence[OutputRecord], fmt: str) -> str:
    if fmt == "json":
        return to_json(records[0] if len(records) == 1 else list(records))
    if fmt == "csv":
        return records_to_csv(records)
    return records_to_latex(records)


def _float_text(value) -> str:
    return "" if value is None else repr(float(value))


def sim_report_to_csv(report) -> str:
    """One row per moment estimate and per martingale residual."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["kind", "index", "exact", "expected", "observed", "standard_error", "z_score"])
    for m in report.moments:
        writer.writerow(
            [
                "moment",
                ";".join(str(v) for v in m.index),
                m.exact,
                _float_text(m.symbolic),
                _float_text(m.empirical),
                _float_text(m.standard_error),
                _float_text(m.z_score),
            ]
        )
    for r in report.residuals:
        writer.writerow(
            [
                "martingale",
                str(r.k),
                "0/1",
                _float_text(0.0),
                _float_text(r.mean),
                _float_text(r.standard_error),
                _float_text(r.z_score),
            ]
        )
    return buffer.getvalue()


class RunSummary(BaseModel):
    """A ledger row as shown by ``umbral-tsh runs``."""

    model_config = ConfigDict(from_attributes=True)

    id: int
    command: str
    target: str
    status: str
    start_time: datetime
    end_time: datetime
    num_checks: int
    num_failures: int


class RecordedCheck(BaseModel):
    model_config = ConfigDict(from_attributes=True)

    name: str
    holds: bool
    witness: Optional[str] = None


class RunDetail(RunSummary):
    parameters: Optional[str] = Field(None, description="Flags and provenance as stored, JSON text")
    checks: List[RecordedCheck] = Field(default_factory=list)
