import logging

import pytest
import sympy as sp
from pydantic import ValidationError

from umbral_tsh.algebra.indeterminates import T, X
from umbral_tsh.checks import all_hold, compare
from umbral_tsh.settings import UmbralSettings
from umbral_tsh.utils import (
    TruncatingLogFormatter,
    get_git_metadata,
    get_library_versions,
    get_provenance,
    setup_truncating_logger,
)


def _record(message: str) -> logging.LogRecord:
    return logging.LogRecord("umbral_tsh.test", logging.ERROR, __file__, 1, message, (), None)


def test_formatter_truncates_long_witnesses():
    formatter = TruncatingLogFormatter(max_field_length=20)
    output = formatter.format(_record(f"Identity 'q' failed: lhs={'x + ' * 40}x rhs=1"))
    assert "...[truncated]" in output
    assert output.endswith(" rhs=1")
    assert output.startswith("ERROR umbral_tsh.test: ")


def test_formatter_leaves_short_messages():
    formatter = TruncatingLogFormatter(max_field_length=20)
    assert formatter.format(_record("lhs=x rhs=x")) == "ERROR umbral_tsh.test: lhs=x rhs=x"


def test_setup_truncating_logger_replaces_handlers():
    logger = setup_truncating_logger("umbral_tsh.test_setup", level=logging.DEBUG)
    logger = setup_truncating_logger("umbral_tsh.test_setup", level=logging.DEBUG)
    assert logger.level == logging.DEBUG
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0].formatter, TruncatingLogFormatter)


def test_provenance_keys():
    assert set(get_git_metadata()) == {"git_commit", "git_branch"}
    versions = get_library_versions()
    assert versions["sympy"] == sp.__version__
    assert {"git_commit", "sympy", "numpy"} <= set(get_provenance())


def test_cache_size_from_environment(monkeypatch):
    monkeypatch.delenv("UMBRAL_TSH_CACHE_SIZE", raising=False)
    assert UmbralSettings().cache_size == 512
    monkeypatch.setenv("UMBRAL_TSH_CACHE_SIZE", "64")
    assert UmbralSettings().cache_size == 64
    monkeypatch.setenv("UMBRAL_TSH_CACHE_SIZE", "0")
    with pytest.raises(ValidationError):
        UmbralSettings()


def test_identity_checks():
    good = compare("expand", (X - T) ** 2, X**2 - 2 * X * T + T**2)
    assert good.holds and bool(good)
    bad = compare("shift", X + 1, X)
    assert not bad
    assert bad.witness() == "lhs=x + 1 rhs=x"
    folded = all_hold("batch", [good, bad])
    assert not folded.holds
    assert folded.name == "batch: shift"
    assert all_hold("empty", []).holds
