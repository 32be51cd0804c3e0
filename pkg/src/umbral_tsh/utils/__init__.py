"""Logging and provenance helpers."""

from .logging_utils import TruncatingLogFormatter, setup_truncating_logger
from .provenance import get_git_metadata, get_library_versions, get_provenance

__all__ = [
    "TruncatingLogFormatter",
    "setup_truncating_logger",
    "get_git_metadata",
    "get_library_versions",
    "get_provenance",
]
