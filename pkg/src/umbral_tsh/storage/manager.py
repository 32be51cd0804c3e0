import json
import logging
from datetime import datetime
from typing import Dict, Iterable, List, Optional, Tuple

from .adapter import BaseDBAdapter
from .models import Run, RunCheck

logger = logging.getLogger(__name__)

CheckRow = Tuple[str, bool, Optional[str]]


class StorageManager:
    """Main interface for the run ledger, delegating to a single DB adapter.

    Args:
        adapter (BaseDBAdapter): The database adapter to use (e.g., DuckDBAdapter).
    """

    def __init__(self, adapter: BaseDBAdapter) -> None:
        self._adapter = adapter

    # --- Run CRUD ---

    def add_run(self, run: Run) -> Run:
        return self._adapter.add_run(run)

    def get_run(self, run_id: int) -> Optional[Run]:
        return self._adapter.get_run(run_id)

    def delete_run(self, run_id: int) -> None:
        self._adapter.delete_run(run_id)

    def list_runs(self) -> List[Run]:
        return self._adapter.list_runs()

    # --- RunCheck ---

    def list_run_checks(self, run_id: int) -> List[RunCheck]:
        return self._adapter.list_run_checks(run_id)

    def record_run(
        self,
        command: str,
        target: str,
        start_time: datetime,
        checks: Iterable[CheckRow],
        parameters: Optional[Dict] = None,
        status: Optional[str] = None,
    ) -> Run:
        """Store a finished run with its checks.

        Args:
            command: Subcommand name
            target: Suite name or process kind
            start_time: When the run started
            checks: (name, holds, witness) rows
            parameters: Flags and provenance, serialized as JSON
            status: Overrides the status derived from the checks

        Returns:
            The stored Run
        """
        rows = list(checks)
        failures = sum(1 for _, holds, _ in rows if not holds)
        run = Run(
            command=command,
            target=target,
            start_time=start_time,
            end_time=datetime.now(),
            status=status or ("passed" if failures == 0 else "failed"),
            num_checks=len(rows),
            num_failures=failures,
            parameters=json.dumps(parameters or {}, sort_keys=True, default=str),
        )
        run = self._adapter.add_run(run)
        self._adapter.add_run_checks(
            [
                RunCheck(run_id=run.id, name=name, holds=holds, witness=witness)
                for name, holds, witness in rows
            ]
        )
        logger.info(f"Recorded {command} run {run.id} ({len(rows)} checks, {failures} failed)")
        return run
