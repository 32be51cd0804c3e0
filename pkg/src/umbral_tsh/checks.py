"""Outcome records for exact identity checks."""

import logging
from typing import Any

import sympy as sp
from pydantic import BaseModel, ConfigDict, Field

from .algebra.indeterminates import is_zero

logger = logging.getLogger(__name__)


class IdentityCheck(BaseModel):
    """Result of comparing two exact expressions; falsy when they differ."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    name: str = Field(..., description="Identity being checked")
    holds: bool = Field(..., description="Whether both sides agree exactly")
    lhs: Any = Field(None, description="Left-hand side as computed")
    rhs: Any = Field(None, description="Right-hand side as computed")

    def __bool__(self) -> bool:
        return self.holds

    def witness(self) -> str:
        return f"lhs={sp.sstr(self.lhs)} rhs={sp.sstr(self.rhs)}"


def compare(name: str, lhs: Any, rhs: Any) -> IdentityCheck:
    """Check ``lhs == rhs`` exactly, logging the witness pair on failure."""
    holds = is_zero(sp.sympify(lhs) - sp.sympify(rhs))
    check = IdentityCheck(name=name, holds=holds, lhs=lhs, rhs=rhs)
    if not holds:
        logger.debug(f"Identity '{name}' failed: {check.witness()}")
    return check


def all_hold(name: str, checks) -> IdentityCheck:
    """Fold several checks into one; the first failure becomes the witness."""
    checks = list(checks)
    for check in checks:
        if not check.holds:
            return IdentityCheck(name=f"{name}: {check.name}", holds=False, lhs=check.lhs, rhs=check.rhs)
    return IdentityCheck(name=name, holds=True)
