from sqlalchemy import Boolean, Column, DateTime, ForeignKey, Integer, Sequence, String, Text
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class Run(Base):
    """A single CLI run (verification suite or simulation).

    Attributes:
        id (int): Primary key, unique identifier for the run.
        command (str): Subcommand that produced the run ('verify' or 'sim').
        target (str): Suite name or process kind.
        start_time (datetime): When the run started.
        end_time (datetime): When the run finished.
        status (str): 'passed', 'failed' or 'error'.
        num_checks (int): Number of recorded checks.
        num_failures (int): Number of failing checks.
        parameters (str): Flags and provenance of the run, stored as a JSON string.
    """

    __tablename__ = "runs"

    run_id_seq = Sequence("run_id_seq")
    id = Column(
        Integer,
        run_id_seq,
        server_default=run_id_seq.next_value(),
        primary_key=True,
    )
    command = Column(String(32), nullable=False)
    target = Column(String(64), nullable=False)
    start_time = Column(DateTime, nullable=False)
    end_time = Column(DateTime, nullable=False)
    status = Column(String(32), nullable=False)
    num_checks = Column(Integer, nullable=False)
    num_failures = Column(Integer, nullable=False)
    parameters = Column(Text, nullable=True)

    checks = relationship("RunCheck", back_populates="run")


class RunCheck(Base):
    """Outcome of one identity check or statistical comparison within a run.

    Attributes:
        id (int): Primary key.
        run_id (int): Foreign key to Run.
        name (str): Identity or moment being checked.
        holds (bool): Whether the check passed.
        witness (str): lhs/rhs pair or z-score for failed checks.
    """

    __tablename__ = "run_checks"

    run_check_id_seq = Sequence("run_check_id_seq")
    id = Column(
        Integer,
        run_check_id_seq,
        server_default=run_check_id_seq.next_value(),
        primary_key=True,
    )
    run_id = Column(Integer, ForeignKey("runs.id"), nullable=False)
    name = Column(String(256), nullable=False)
    holds = Column(Boolean, nullable=False)
    witness = Column(Text, nullable=True)

    run = relationship("Run", back_populates="checks")
