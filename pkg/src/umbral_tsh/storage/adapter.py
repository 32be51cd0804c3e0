from abc import ABC, abstractmethod
from typing import List, Optional

from .models import Run, RunCheck


class BaseDBAdapter(ABC):
    """Backend of the run ledger.

    A run is written once, after its suite or simulation has finished, and
    its checks right after it. Implementations hand back detached ORM rows
    with their ids filled in.
    """

    @abstractmethod
    def add_run(self, run: Run) -> Run:
        ...

    @abstractmethod
    def get_run(self, run_id: int) -> Optional[Run]:
        """None when no run has this id."""

    @abstractmethod
    def delete_run(self, run_id: int) -> None:
        """Remove the run together with its checks."""

    @abstractmethod
    def list_runs(self) -> List[Run]:
        """Every run, oldest first."""

    @abstractmethod
    def add_run_checks(self, checks: List[RunCheck]) -> List[RunCheck]:
        """Store the checks of one run; each carries its ``run_id``."""

    @abstractmethod
    def list_run_checks(self, run_id: int) -> List[RunCheck]:
        """Checks of a run in the order they were recorded."""
