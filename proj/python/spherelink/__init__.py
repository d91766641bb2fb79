"""Spherical 3-links of planar graphs."""

from ._core import *  # noqa: F401,F403
from ._core import Arrangement, Graph

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"


def catalog(name: str) -> Graph:
    """Graph of a catalog entry."""
    return catalog_graph(name)  # noqa: F405
