"""Closed-form bounds on the geodetic number."""

from .graph import Graph
from .intervals import DistanceMatrix


def trivial_bound(g: Graph) -> int:
    """The whole vertex set is always geodetic."""
    return g.n


def diameter_bound(dist: DistanceMatrix) -> int:
    """n - diam + 1: a diametral pair covers its path, the rest fill in."""
    return dist.n - dist.diameter() + 1
