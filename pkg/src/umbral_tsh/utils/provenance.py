import subprocess
from importlib import metadata
from typing import Dict, Optional

TRACKED_DISTRIBUTIONS = ("umbral-tsh", "sympy", "numpy", "pydantic")


def get_git_metadata() -> Dict[str, Optional[str]]:
    """Get the current git commit and branch.

    Returns:
        dict: Dictionary with keys 'git_commit' and 'git_branch'.
        Values are strings or None if not available.
    """
    try:
        commit = subprocess.check_output(
            ["git", "rev-parse", "HEAD"], stderr=subprocess.DEVNULL
        ).decode().strip()
        branch = (
            subprocess.check_output(
                ["git", "rev-parse", "--abbrev-ref", "HEAD"], stderr=subprocess.DEVNULL
            )
            .decode()
            .strip()
        )
        return {"git_commit": commit, "git_branch": branch}
    except Exception:
        return {"git_commit": None, "git_branch": None}


def get_library_versions() -> Dict[str, Optional[str]]:
    """Installed versions of the package and the libraries that compute its results."""
    versions = {}
    for name in TRACKED_DISTRIBUTIONS:
        try:
            versions[name] = metadata.version(name)
        except metadata.PackageNotFoundError:
            versions[name] = None
    return versions


def get_provenance() -> Dict[str, Optional[str]]:
    return {**get_git_metadata(), **get_library_versions()}
