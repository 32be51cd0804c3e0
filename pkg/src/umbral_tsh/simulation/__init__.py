"""Monte-Carlo simulation of concrete Lévy processes."""

from .models import JumpSpec, MartingaleResidual, MomentEstimate, ProcessSpec, SimReport
from .processes import jump_umbra, process_umbra, sample_increment
from .runner import chunk_generators, empirical_moments, martingale_mc

__all__ = [
    "JumpSpec",
    "ProcessSpec",
    "MomentEstimate",
    "MartingaleResidual",
    "SimReport",
    "sample_increment",
    "process_umbra",
    "jump_umbra",
    "chunk_generators",
    "empirical_moments",
    "martingale_mc",
]
