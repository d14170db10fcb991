"""Vertex sets as plain integer bitmasks: bit k set means vertex k is in the set.

Union, difference and cardinality are then single int operations (|, & ~,
bit_count), which keeps the inner loops of the solvers cheap.
"""

from typing import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    """Members of the mask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1
