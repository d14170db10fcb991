"""Seeded random graph generators and the benchmark grids.

Three families, all with an exact edge count and a connectivity guarantee:

* ER: uniform choice of m distinct edges.
* WS: ring lattice with 2*floor(m/n) nearest neighbors, each lattice edge
  rewired with a small probability, topped up with uniform random edges to
  hit m exactly.  When m < n the lattice is empty and the family degenerates
  to uniform random edges.
* BA: seed clique on d+1 vertices with d = max(1, floor(m/n)), then degree-
  proportional attachment of d edges per new vertex, topped up to m.

A draw that comes out disconnected is retried with a derived sub-seed, up to
a fixed retry budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationError, ValidationError
from .graph import Graph, is_connected
from .rng import SplitMix64, stream_seed

FAMILIES = ("ER", "WS", "BA")
MAX_ATTEMPTS = 100

STANDARD_SIZES = (10, 20, 30, 40, 50, 60, 70, 80, 90, 100)
STANDARD_DENSITIES = (0.2, 0.4, 0.6, 0.8)
LARGE_SIZES = (115, 135, 150)
LARGE_DENSITIES = (0.25, 0.5, 0.75)

SCHEMES = {
    "standard": (STANDARD_SIZES, STANDARD_DENSITIES),
    "large": (LARGE_SIZES, LARGE_DENSITIES),
}


@dataclass(frozen=True)
class GenSpec:
    """Everything needed to reproduce one generated graph."""

    family: str
    n: int
    m_target: int
    seed: int
    ws_rewire_prob: float = 0.05

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValidationError("need at least two vertices")
        max_m = self.n * (self.n - 1) // 2
        if not 0 < self.m_target <= max_m:
            raise ValidationError(
                f"m_target={self.m_target} outside (0, {max_m}] for n={self.n}")
        if self.m_target < self.n - 1:
            raise ValidationError(
                f"m_target={self.m_target} cannot connect {self.n} vertices")
        if not 0.0 <= self.ws_rewire_prob <= 1.0:
            raise ValidationError("ws_rewire_prob must be in [0, 1]")


def edge_count_for_density(n: int, density: float) -> int:
    """Edge target for a density given as a decimal fraction of n(n-1)/2.

    Decimal densities are taken exactly (0.25 of 6555 pairs is 1638.75, so
    1638 edges), which keeps the grid free of binary float rounding.
    """
    frac = Fraction(str(density))
    if not 0 < frac <= 1:
        raise ValidationError(f"density {density} outside (0, 1]")
    return int(frac * (n * (n - 1) // 2))


def _all_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _top_up(edges: set[tuple[int, int]], pairs: list[tuple[int, int]],
            m_target: int, rng: SplitMix64) -> None:
    # uniform random missing edges until the count is exact
    while len(edges) < m_target:
        e = pairs[rng.randrange(len(pairs))]
        edges.add(e)


def _draw_er(n: int, m: int, rng: SplitMix64) -> set[tuple[int, int]]:
    pairs = _all_pairs(n)
    idx = list(range(len(pairs)))
    # partial Fisher-Yates: the first m slots are a uniform m-subset
    for t in range(m):
        j = t + rng.randrange(len(idx) - t)
        idx[t], idx[j] = idx[j], idx[t]
    return {pairs[idx[t]] for t in range(m)}


def _draw_ws(n: int, m: int, rewire_prob: float, rng: SplitMix64) -> set[tuple[int, int]]:
    pairs = _all_pairs(n)
    edges: set[tuple[int, int]] = set()
    k_half = m // n
    for i in range(n):
        for off in range(1, k_half + 1):
            j = (i + off) % n
            edges.add((i, j) if i < j else (j, i))
    # rewire pass over the original lattice edges, deterministic order
    for i in range(n):
        for off in range(1, k_half + 1):
            j = (i + off) % n
            e = (i, j) if i < j else (j, i)
            if e not in edges or rng.uniform() >= rewire_prob:
                continue
            for _ in range(n):
                t = rng.randrange(n)
                cand = (i, t) if i < t else (t, i)
                if t != i and cand not in edges:
                    edges.remove(e)
                    edges.add(cand)
                    break
    _top_up(edges, pairs, m, rng)
    return edges


def _draw_ba(n: int, m: int, rng: SplitMix64) -> set[tuple[int, int]]:
    pairs = _all_pairs(n)
    d = max(1, m // n)
    seed_size = min(d + 1, n)
    edges = {(u, v) for u in range(seed_size) for v in range(u + 1, seed_size)}
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    for v in range(seed_size, n):
        want = min(d, v)
        targets: set[int] = set()
        total = sum(degree[:v])
        while len(targets) < want:
            r = rng.randrange(total)
            acc = 0
            for u in range(v):
                acc += degree[u]
                if r < acc:
                    targets.add(u)
                    break
        for u in targets:
            edges.add((u, v))
            degree[u] += 1
            degree[v] += 1
    _top_up(edges, pairs, m, rng)
    return edges


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by spec; deterministic in all fields."""
    for attempt in range(MAX_ATTEMPTS):
        rng = SplitMix64(stream_seed(spec.seed, attempt))
        if spec.family == "ER":
            edges = _draw_er(spec.n, spec.m_target, rng)
        elif spec.family == "WS":
            edges = _draw_ws(spec.n, spec.m_target, spec.ws_rewire_prob, rng)
        else:
            edges = _draw_ba(spec.n, spec.m_target, rng)
        if len(edges) != spec.m_target:
            continue
        g = Graph(spec.n, edges)
        if is_connected(g):
            return g
    raise GenerationError(
        f"no connected draw for {spec} in {MAX_ATTEMPTS} attempts")


def benchmark_grid(scheme: str, families: tuple[str, ...] = FAMILIES,
                   seed_base: int = 0) -> list[GenSpec]:
    """Full (family, size, density) grid for a named scheme.

    Cells are ordered family-major, then by size, then by density; the cell
    at position i gets seed seed_base + i so every cell is independently
    reproducible.
    """
    if scheme not in SCHEMES:
        raise ValidationError(f"unknown scheme {scheme!r}")
    for family in families:
        if family not in FAMILIES:
            raise ValidationError(f"unknown family {family!r}")
    sizes, densities = SCHEMES[scheme]
    specs = []
    for family in families:
        for n in sizes:
            for density in densities:
                specs.append(GenSpec(
                    family=family, n=n,
                    m_target=edge_count_for_density(n, density),
                    seed=seed_base + len(specs)))
    return specs
