import os
from typing import List, Optional

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from .adapter import BaseDBAdapter
from .models import Base, Run, RunCheck


class DuckDBAdapter(BaseDBAdapter):
    """DuckDB implementation of BaseDBAdapter using SQLAlchemy.

    Args:
        db_path (str): Path to the DuckDB database file. Defaults to 'data/umbral_tsh.db'.
    """

    def __init__(self, db_path: Optional[str] = None) -> None:
        if db_path is None:
            db_path = os.path.join("data", "umbral_tsh.db")
        directory = os.path.dirname(db_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        self.engine = create_engine(f"duckdb:///{db_path}")
        Base.metadata.create_all(self.engine)
        self.SessionLocal = sessionmaker(bind=self.engine)

    # --- Run CRUD ---

    def add_run(self, run: Run) -> Run:
        """Add a new run to the database."""
        with self.SessionLocal() as session:
            session.add(run)
            session.commit()
            session.refresh(run)
            return run

    def get_run(self, run_id: int) -> Optional[Run]:
        """Retrieve a run by its ID."""
        with self.SessionLocal() as session:
            return session.get(Run, run_id)

    def delete_run(self, run_id: int) -> None:
        """Delete a run and its checks by the run ID."""
        with self.SessionLocal() as session:
            session.query(RunCheck).filter(RunCheck.run_id == run_id).delete()
            db_obj = session.get(Run, run_id)
            if db_obj:
                session.delete(db_obj)
            session.commit()

    def list_runs(self) -> List[Run]:
        """List all runs in the database."""
        with self.SessionLocal() as session:
            return session.query(Run).order_by(Run.id).all()

    # --- RunCheck ---

    def add_run_checks(self, checks: List[RunCheck]) -> List[RunCheck]:
        """Add the checks of a run in one transaction."""
        with self.SessionLocal() as session:
            session.add_all(checks)
            session.commit()
            for check in checks:
                session.refresh(check)
            return checks

    def list_run_checks(self, run_id: int) -> List[RunCheck]:
        """List the checks of a run, in insertion order."""
        with self.SessionLocal() as session:
            return (
                session.query(RunCheck)
                .filter(RunCheck.run_id == run_id)
                .order_by(RunCheck.id)
                .all()
            )
