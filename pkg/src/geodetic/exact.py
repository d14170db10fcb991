"""Exact geodetic number: plain enumeration and a pruned superset search.

brute_force_geodetic is the reference: subsets in increasing cardinality,
lexicographic within a cardinality, first geodetic subset wins.  It refuses
graphs beyond a small size cap.

exact_geodetic exploits two facts.  Degree-one and simplicial vertices are
never interior to a shortest path, so they belong to every geodetic set and
can be fixed up front.  Completing that forced core is then a search over
candidate subsets in increasing total size, with a conservative potential
bound: a branch is cut only when even the most optimistic completion (sum of
the largest per-candidate gains plus full credit for the biggest residual
pair interval on every future pair) cannot cover the remaining vertices.
Optional wall-clock and node budgets turn the search into an anytime method;
on expiry the best known geodetic set is returned flagged non-optimal.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .bitset import full_mask, vertices_of
from .errors import AlgorithmError, ValidationError
from .graph import Graph, is_simplicial, require_connected
from .intervals import all_pairs_distances, closure, interval_table, is_geodetic
from .result import GeodeticResult, make_result

BRUTE_FORCE_MAX_N = 25


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for exact_geodetic; None means unlimited."""

    time_budget: float | None = None
    node_budget: int | None = None

    def __post_init__(self):
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValidationError("time_budget must be positive")
        if self.node_budget is not None and self.node_budget <= 0:
            raise ValidationError("node_budget must be positive")


class _BudgetExhausted(Exception):
    pass


def forced_vertices(g: Graph) -> int:
    """Vertices no geodetic set can omit: degree <= 1 or simplicial."""
    mask = 0
    for v in range(g.n):
        if g.degree(v) <= 1 or is_simplicial(g, v):
            mask |= 1 << v
    return mask


def brute_force_geodetic(g: Graph) -> GeodeticResult:
    start = time.perf_counter()
    if g.n > BRUTE_FORCE_MAX_N:
        raise ValueError(
            f"brute force capped at n={BRUTE_FORCE_MAX_N}, got n={g.n}")
    require_connected(g)
    table = interval_table(all_pairs_distances(g))
    full = full_mask(g.n)
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            covered = 0
            for pos, a in enumerate(combo):
                row = table.rows[a]
                for b in combo[pos:]:
                    covered |= row[b - a]
            if covered == full:
                members = 0
                for v in combo:
                    members |= 1 << v
                return make_result("brute-force", members, True, True,
                                   time.perf_counter() - start)
    raise AlgorithmError("no geodetic subset found")  # unreachable: V qualifies


def exact_geodetic(g: Graph, limits: SearchLimits | None = None) -> GeodeticResult:
    start = time.perf_counter()
    require_connected(g)
    n = g.n
    table = interval_table(all_pairs_distances(g))
    full = full_mask(n)
    forced = forced_vertices(g)
    base_cover = closure(table, forced)
    if base_cover == full:
        # forced vertices lie in every geodetic set, so this is the minimum
        return make_result("exact", forced, True, True,
                           time.perf_counter() - start)

    deadline = None
    node_cap = None
    if limits is not None:
        if limits.time_budget is not None:
            deadline = start + limits.time_budget
        node_cap = limits.node_budget
    nodes = 0

    candidates = [v for v in range(n) if not (forced >> v) & 1]
    forced_list = vertices_of(forced)
    base_unions = [0] * n
    for i in candidates:
        acc = 0
        for f in forced_list:
            acc |= table.get(i, f)
        base_unions[i] = acc
    # candidate pairs by pristine interval size, biggest first, for the bound
    pair_order = sorted(
        ((table.get(i, j).bit_count(), i, j)
         for pos, i in enumerate(candidates) for j in candidates[pos + 1:]),
        reverse=True)

    def tick() -> None:
        nonlocal nodes
        nodes += 1
        if node_cap is not None and nodes > node_cap:
            raise _BudgetExhausted
        if deadline is not None and time.perf_counter() > deadline:
            raise _BudgetExhausted

    def best_pair_gain(rem_mask: int, uncov_mask: int) -> int:
        """Largest residual pair-interval size among the remaining candidates."""
        best = 0
        for size, i, j in pair_order:
            if size <= best:
                break  # sorted by pristine size: nothing later can beat it
            if (rem_mask >> i) & 1 and (rem_mask >> j) & 1:
                masked = (table.get(i, j) & uncov_mask).bit_count()
                if masked > best:
                    best = masked
        return best

    def search(order: list[int], unions: list[int], cover: int, slots: int) -> int | None:
        """Pick `slots` vertices from `order`; returns their mask or None."""
        tick()
        if cover == full:
            return 0
        if slots == 0 or not order:
            return None
        uncov_mask = full & ~cover
        uncovered = uncov_mask.bit_count()

        if slots == 1:
            for i in order:
                if ((unions[i] | (1 << i)) & uncov_mask) == uncov_mask:
                    return 1 << i
            return None

        scored = sorted(
            (((unions[i] | (1 << i)) & uncov_mask, i) for i in order),
            key=lambda t: (-t[0].bit_count(), t[1]))
        counts = [gain.bit_count() for gain, _ in scored]
        rem_mask = 0
        for i in order:
            rem_mask |= 1 << i

        if slots == 2:
            # closed form for the last two picks: try pairs, best gains first
            pair_best = best_pair_gain(rem_mask, uncov_mask)
            for pos in range(len(scored) - 1):
                gain_i, i = scored[pos]
                if counts[pos] + counts[pos + 1] + pair_best < uncovered:
                    return None  # gains sorted: every later pair is weaker
                tick()
                for later in range(pos + 1, len(scored)):
                    gain_j, j = scored[later]
                    if counts[pos] + counts[later] + pair_best < uncovered:
                        break
                    joint = gain_i | gain_j | (table.get(i, j) & uncov_mask)
                    if joint == uncov_mask:
                        return (1 << i) | (1 << j)
            return None

        if sum(counts[:slots]) < uncovered:
            pair_credit = slots * (slots - 1) // 2 * best_pair_gain(rem_mask, uncov_mask)
            if sum(counts[:slots]) + pair_credit < uncovered:
                return None
        for pos, (gain, i) in enumerate(scored):
            suffix = [t[1] for t in scored[pos + 1:]]
            saved = [(j, unions[j]) for j in suffix]
            for j in suffix:
                unions[j] |= table.get(i, j)
            found = search(suffix, unions, cover | gain, slots - 1)
            for j, old in saved:
                unions[j] = old
            if found is not None:
                return found | (1 << i)
        return None

    # always-valid fallback: forced core plus everything it fails to cover
    incumbent = forced | (full & ~base_cover)
    budget_hit = False
    chosen: int | None = None
    try:
        for total in range(max(forced.bit_count() + 1, 2), n + 1):
            chosen = search(candidates, list(base_unions), base_cover,
                            total - forced.bit_count())
            if chosen is not None:
                break
    except _BudgetExhausted:
        budget_hit = True
    if chosen is not None:
        members = forced | chosen
        if not is_geodetic(table, members):
            raise AlgorithmError("exact search returned a non-geodetic set")
        return make_result("exact", members, True, True,
                           time.perf_counter() - start)
    if not budget_hit:
        raise AlgorithmError("exact search exhausted all sizes")  # unreachable
    if not is_geodetic(table, incumbent):
        raise AlgorithmError("fallback set failed the geodetic check")
    return make_result("exact", incumbent, False, True,
                       time.perf_counter() - start)
