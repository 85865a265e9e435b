"""Validator-based energy estimates for proof-of-stake networks."""

from pathlib import Path

from ._posenergy import *  # noqa: F401,F403
from ._posenergy import Error

__version__ = "0.1.0"


def data_dir() -> Path:
    """Directory holding the bundled snapshot, bounds, profile and baseline files."""
    return Path(__file__).resolve().parent / "data"
