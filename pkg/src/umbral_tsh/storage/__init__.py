"""Run ledger: verification and simulation runs stored in DuckDB."""

from .adapter import BaseDBAdapter
from .duckdb_adapter import DuckDBAdapter
from .manager import StorageManager
from .models import Base, Run, RunCheck

__all__ = ["Base", "Run", "RunCheck", "BaseDBAdapter", "DuckDBAdapter", "StorageManager"]
