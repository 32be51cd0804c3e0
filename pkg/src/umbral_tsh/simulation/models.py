"""Data models for process simulation."""

import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, model_validator

ProcessKind = Literal[
    "brownian", "poisson", "gamma", "pascal", "compound-poisson", "multivariate-brownian"
]


class JumpSpec(BaseModel):
    """Jump law of a compound Poisson process."""

    kind: Literal["point-mass", "uniform", "normal", "exponential"] = Field(
        "point-mass", description="Jump distribution"
    )
    value: float = Field(1.0, description="Jump size for a point mass")
    low: float = Field(0.0, description="Lower end for uniform jumps")
    high: float = Field(1.0, description="Upper end for uniform jumps")
    mean: float = Field(0.0, description="Mean of normal jumps")
    std: float = Field(1.0, description="Standard deviation of normal jumps")
    scale: float = Field(1.0, description="Scale of exponential jumps")

    @model_validator(mode="after")
    def _check_ranges(self) -> "JumpSpec":
        if self.kind == "uniform" and not self.low < self.high:
            raise ValueError(f"Uniform jumps need low < high, got [{self.low}, {self.high}]")
        if self.kind == "normal" and not self.std > 0:
            raise ValueError(f"Normal jumps need std > 0, got {self.std}")
        if self.kind == "exponential" and not self.scale > 0:
            raise ValueError(f"Exponential jumps need scale > 0, got {self.scale}")
        return self


class ProcessSpec(BaseModel):
    """A concrete Lévy process with numeric parameters."""

    kind: ProcessKind = Field(..., description="Process family")
    s: float = Field(1.0, description="Brownian scale (variance s^2 per unit time)")
    lam: float = Field(1.0, description="Intensity of Poisson, Gamma and compound Poisson")
    p: float = Field(0.5, description="Pascal success probability")
    jump: Optional[JumpSpec] = Field(None, description="Jump law for compound Poisson")
    covariance: Optional[List[List[float]]] = Field(
        None, description="Covariance matrix for multivariate Brownian motion"
    )

    @model_validator(mode="after")
    def _check_ranges(self) -> "ProcessSpec":
        if self.kind == "brownian" and not self.s > 0:
            raise ValueError(f"Brownian scale must be positive, got {self.s}")
        if self.kind in ("poisson", "gamma", "compound-poisson") and not self.lam > 0:
            raise ValueError(f"lambda must be positive, got {self.lam}")
        if self.kind == "pascal" and not 0 < self.p < 1:
            raise ValueError(f"p must lie in (0, 1), got {self.p}")
        if self.kind == "multivariate-brownian":
            if not self.covariance:
                raise ValueError("Multivariate Brownian motion needs a covariance matrix")
            matrix = np.asarray(self.covariance, dtype=float)
            d = matrix.shape[0]
            if matrix.ndim != 2 or matrix.shape != (d, d):
                raise ValueError(f"Covariance must be square, got shape {matrix.shape}")
            if not np.allclose(matrix, matrix.T):
                raise ValueError("Covariance must be symmetric")
            if np.linalg.eigvalsh(matrix).min() < -1e-12:
                raise ValueError("Covariance must be positive semidefinite")
        return self

    @property
    def dimension(self) -> int:
        return len(self.covariance) if self.kind == "multivariate-brownian" else 1

    def jump_law(self) -> JumpSpec:
        return self.jump if self.jump is not None else JumpSpec()


class MomentEstimate(BaseModel):
    """Empirical against symbolic moment E[X_t^i]."""

    index: List[int] = Field(..., description="Degree, or multi-index for d > 1")
    exact: str = Field(..., description="Symbolic moment as an exact rational")
    symbolic: float = Field(..., description="Symbolic moment as a float")
    empirical: float = Field(..., description="Sample mean of X_t^i")
    standard_error: float = Field(..., description="Standard error of the sample mean")
    z_score: Optional[float] = Field(
        None, description="(empirical - symbolic) / standard_error; None when degenerate"
    )


class MartingaleResidual(BaseModel):
    """Inner average of Q_k(X_t, t) given X_s, minus Q_k(X_s, s)."""

    k: int = Field(..., description="Degree of the TSH polynomial")
    s: float = Field(..., description="Conditioning time")
    t: float = Field(..., description="Terminal time")
    mean: float = Field(..., description="Mean residual over outer samples")
    standard_error: float = Field(..., description="Standard error of the mean residual")
    max_abs: float = Field(..., description="Largest absolute residual")
    z_score: Optional[float] = Field(None, description="mean / standard_error; None when degenerate")


class SimReport(BaseModel):
    """Outcome of a simulation run."""

    process: ProcessSpec = Field(..., description="Simulated process")
    seed: int = Field(..., description="Root seed of the SeedSequence")
    n_samples: int = Field(..., description="Number of samples (outer samples for residuals)")
    n_inner: Optional[int] = Field(None, description="Inner samples per outer sample")
    t: float = Field(..., description="Time horizon")
    moments: List[MomentEstimate] = Field(default_factory=list)
    residuals: List[MartingaleResidual] = Field(default_factory=list)

    def z_scores(self) -> List[Optional[float]]:
        return [m.z_score for m in self.moments] + [r.z_score for r in self.residuals]

    def max_abs_z(self) -> float:
        """Largest |z|; degenerate nonzero discrepancies count as infinite."""
        values = [math.inf if z is None else abs(z) for z in self.z_scores()]
        return max(values, default=0.0)

    def passes(self, threshold: float = 5.0) -> bool:
        return self.max_abs_z() <= threshold
