"""Simple undirected graphs and the whitespace edge-list format.

The on-disk format is one "u v" pair per line, 0-based ids, lines starting
with '#' or '%' ignored.  The writer always emits u < v sorted
lexicographically, so serialization is canonical and round-trips exactly.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import EdgeListParseError, ValidationError

COMMENT_CHARS = "#%"


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Duplicate edges collapse; self-loops are rejected.  Connectivity is not
    required here: solver entry points enforce it separately so that parsing
    and inspection still work on arbitrary input.
    """

    __slots__ = ("n", "m", "adj", "adj_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValidationError("graph needs at least one vertex")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"vertex id out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            seen.add((u, v) if u < v else (v, u))
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        self.n = n
        self.m = len(seen)
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(s)) for s in neighbor_sets
        )
        masks = []
        for s in neighbor_sets:
            mask = 0
            for v in s:
                mask |= 1 << v
            masks.append(mask)
        self.adj_masks: tuple[int, ...] = tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_connected(g: Graph) -> bool:
    """True iff a traversal from vertex 0 reaches all n vertices."""
    seen = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            b = 1 << v
            if not seen & b:
                seen |= b
                count += 1
                stack.append(v)
    return count == g.n


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValidationError("graph is disconnected")


def is_simplicial(g: Graph, v: int) -> bool:
    """True iff the neighborhood of v induces a clique.

    Vertices of degree 0 or 1 count as simplicial (the empty and singleton
    neighborhoods are cliques).
    """
    nbr = g.adj_masks[v]
    for u in g.adj[v]:
        # every other neighbor must be adjacent to u
        if nbr & ~g.adj_masks[u] & ~(1 << u):
            return False
    return True


def parse_edge_list(text: str | Iterable[str], one_based: bool = False,
                    strict: bool = False) -> Graph:
    """Parse edge-list text into a Graph.

    Args:
        text: full file contents, or an iterable of lines.
        one_based: subtract 1 from every vertex id before validation.
        strict: additionally require the parsed graph to be connected.

    Non-contiguous vertex ids are compacted to 0..n-1 in order of first
    appearance; already-contiguous ids are kept as written.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    raw_edges: list[tuple[int, int]] = []
    first_seen: dict[int, None] = {}
    for line_no, raw in enumerate(lines, start=1):
        s = raw.strip()
        if not s or s[0] in COMMENT_CHARS:
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListParseError(
                f"line {line_no}: expected two vertex ids, got {s!r}", line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(
                f"line {line_no}: non-integer vertex id in {s!r}", line_no) from None
        if one_based:
            u -= 1
            v -= 1
        if u < 0 or v < 0:
            raise EdgeListParseError(
                f"line {line_no}: negative vertex id in {s!r}", line_no)
        if u == v:
            raise ValidationError(f"line {line_no}: self-loop at vertex {u}")
        first_seen.setdefault(u)
        first_seen.setdefault(v)
        raw_edges.append((u, v))
    if not raw_edges:
        raise EdgeListParseError("no edges found in input", 0)
    ids = list(first_seen)
    top = max(ids)
    if len(ids) == top + 1:
        # contiguous 0..top: keep ids as written
        n = top + 1
        edges = raw_edges
    else:
        remap = {orig: idx for idx, orig in enumerate(ids)}
        n = len(ids)
        edges = [(remap[u], remap[v]) for u, v in raw_edges]
    g = Graph(n, edges)
    if strict:
        require_connected(g)
    return g


def write_edge_list(g: Graph) -> str:
    """Canonical text form: 0-based "u v" lines, u < v, lexicographic order."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())
