"""Common result record returned by every solver."""

from __future__ import annotations

from dataclasses import dataclass

from .bitset import vertices_of


@dataclass(frozen=True)
class GeodeticResult:
    algorithm: str
    vertices: tuple[int, ...]
    value: int            # |vertices|, an upper bound on the geodetic number
    optimal: bool         # True only when the value is a proven minimum
    verified: bool        # set passed the geodetic check before returning
    seconds: float


def make_result(algorithm: str, members: int, optimal: bool, verified: bool,
                seconds: float) -> GeodeticResult:
    vs = tuple(vertices_of(members))
    return GeodeticResult(algorithm=algorithm, vertices=vs, value=len(vs),
                          optimal=optimal, verified=verified, seconds=seconds)
