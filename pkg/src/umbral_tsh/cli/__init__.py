"""Command-line surface: generation, tables, verification suites and simulation."""

from .main import build_parser, main
from .render import OutputRecord, Term, latex_polynomial, make_record, render_records
from .verification import CheckOutcome, VerificationReport, run_suite

__all__ = [
    "main",
    "build_parser",
    "Term",
    "OutputRecord",
    "make_record",
    "render_records",
    "latex_polynomial",
    "CheckOutcome",
    "VerificationReport",
    "run_suite",
]
