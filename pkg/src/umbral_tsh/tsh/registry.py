"""Registry of the polynomial families, loaded from the packaged YAML file."""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from ..exceptions import UnknownNameError

try:
    import yaml

    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False

logger = logging.getLogger(__name__)

DEFAULT_REGISTRY_PATH = Path(__file__).resolve().parent.parent / "config" / "families.yaml"


class FamilySpec(BaseModel):
    """How a classical family is obtained from TSH polynomials."""

    name: str = Field(..., description="Registry key, e.g. 'poisson-charlier'")
    title: str = Field(..., description="Human-readable family name")
    process: str = Field(..., description="Process umbra α, the process being t·α")
    construction: Literal["tsh", "combination", "stirling"] = Field(
        ..., description="Q_k itself, Σ Q_j B_{k,j}(m), or Σ s(k,j) Q_j"
    )
    parameters: Dict[str, str] = Field(
        default_factory=dict, description="Parameter names with CLI default values"
    )
    normalization: str = Field(..., description="Relation to the classical polynomials")
    classical_egf: str = Field(..., description="Generating function of the oracle")
    orthogonal: bool = Field(False, description="Has a Lévy-Meixner orthogonal system")
    kailath_segall: bool = Field(False, description="Has a Kailath-Segall specialization")


def load_family_registry(registry_path: Optional[Path] = None) -> Dict[str, FamilySpec]:
    """Load the family registry from YAML.

    Args:
        registry_path: Path to the registry file, the packaged one by default

    Returns:
        Family specs keyed by name, in file order

    Raises:
        FileNotFoundError: If the registry file doesn't exist
        yaml.YAMLError: If the registry file is invalid YAML
    """
    if not YAML_AVAILABLE:
        raise ImportError("PyYAML is required to load the family registry")

    registry_file = Path(registry_path) if registry_path else DEFAULT_REGISTRY_PATH
    if not registry_file.exists():
        raise FileNotFoundError(f"Family registry not found: {registry_file}")

    with open(registry_file, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f)

    families = {}
    for name, entry in (config.get("families") or {}).items():
        parameters = {key: str(value) for key, value in (entry.get("parameters") or {}).items()}
        families[name] = FamilySpec(name=name, **{**entry, "parameters": parameters})
    logger.debug(f"Loaded {len(families)} families from {registry_file}")
    return families


@lru_cache(maxsize=1)
def _packaged_registry() -> Dict[str, FamilySpec]:
    return load_family_registry()


def family_names() -> List[str]:
    return list(_packaged_registry())


def get_family(name: str) -> FamilySpec:
    """Family spec by name; underscores are accepted for hyphens."""
    registry = _packaged_registry()
    spec = registry.get(name) or registry.get(name.replace("_", "-"))
    if spec is None:
        raise UnknownNameError(f"Unknown family '{name}'; expected one of {list(registry)}")
    return spec
