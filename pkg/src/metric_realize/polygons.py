"""Polygon (cycle) recognizers: sequential ordering, the pruned-polygon
criterion, and the general polygonlike check (pruned polygon or closed snake)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .comparison import Number
from .family import (
    DistanceFamily,
    FamilyError,
    check_triangle,
    indecomposable_partners,
    is_indecomposable,
)
from .graph import WeightedGraph, verify_realization
from .realization import InternalInconsistencyError, Realization
from .trees import snake_check


@dataclass
class PolygonOrder:
    """Vertex order produced by the renaming walk along indecomposable pairs.

    ``complete`` is true when all n vertices were absorbed before the walk
    first revisited a seen vertex; consecutive entries (cyclically, when
    complete) are indecomposable pairs of the family.
    """

    order: Tuple[int, ...]
    complete: bool


def _min_pair(family: DistanceFamily) -> Tuple[int, int]:
    """Pair (i, j), i < j, with minimal D; lexicographic tie-break."""
    best = None
    best_val = None
    for i, j in family.pairs():
        v = family.d(i, j)
        if best_val is None or v < best_val:
            best_val = v
            best = (i, j)
    return best


def polygon_order(family: DistanceFamily) -> PolygonOrder:
    """Walk the indecomposable-partner relation starting from a minimal pair.

    Precondition: every vertex has exactly two indecomposable partners (a
    violation raises FamilyError).  The walk starts at the lexicographically
    first minimal pair, whose value must itself be indecomposable, and
    repeatedly appends the unused partner of the last vertex.
    """
    if family.n < 3:
        raise FamilyError("polygon ordering needs n >= 3")
    partners = {}
    for i in range(1, family.n + 1):
        p = indecomposable_partners(family, i)
        if len(p) != 2:
            raise FamilyError(
                f"vertex {i} has {len(p)} indecomposable partners, expected exactly 2"
            )
        partners[i] = p
    u, v = _min_pair(family)
    if v not in partners[u]:
        raise FamilyError(f"minimal pair ({u},{v}) is not indecomposable; malformed family")
    order = [u, v]
    seen = {u, v}
    while True:
        last, prev = order[-1], order[-2]
        a, b = partners[last]
        nxt = b if a == prev else a
        if nxt in seen:
            break
        order.append(nxt)
        seen.add(nxt)
    return PolygonOrder(tuple(order), complete=(len(order) == family.n))


def pruned_polygon_check(family: DistanceFamily) -> Realization:
    """Decide realizability by a pruned positive-weighted polygon.

    Accepts iff (i) every vertex has exactly two indecomposable partners,
    (ii) the ordering walk absorbs all n vertices, and (iii) along the
    resulting cyclic order every 2-weight equals the minimum of its two arc
    sums.  On acceptance the cycle with the consecutive 2-weights as edge
    weights realizes the family.
    """
    if family.n < 3:
        return Realization.rejected("a polygon needs n >= 3")
    tri = check_triangle(family, max_violations=1)
    if not tri.holds:
        return Realization.rejected(f"triangle violation at {tri.violations[0]}")
    try:
        ordering = polygon_order(family)
    except FamilyError as exc:
        return Realization.rejected(str(exc))
    if not ordering.complete:
        return Realization.rejected(
            f"ordering walk closed after {len(ordering.order)} of {family.n} vertices"
        )
    order = ordering.order
    n = family.n
    d = family.d
    cmp = family.cmp

    # prefix[k] = weight of the arc from position 0 to position k along the order
    prefix: List[Number] = [0]
    for k in range(1, n):
        prefix.append(prefix[-1] + d(order[k - 1], order[k]))
    total = prefix[-1] + d(order[-1], order[0])
    for p in range(n):
        for q in range(p + 1, n):
            arc = prefix[q] - prefix[p]
            expected = min(arc, total - arc)
            if not cmp.eq(d(order[p], order[q]), expected):
                return Realization.rejected(
                    f"arc-minimum condition fails for ({order[p]},{order[q]})"
                )
    edges = [(order[k - 1], order[k], d(order[k - 1], order[k])) for k in range(1, n)]
    edges.append((order[-1], order[0], d(order[-1], order[0])))
    graph = WeightedGraph(n, edges)
    if not verify_realization(graph, family):
        raise InternalInconsistencyError("pruned polygon reconstruction failed verification")
    return Realization.ok(graph)


def polygon_check(family: DistanceFamily) -> Realization:
    """Decide polygonlike: pruned polygon, or a snake closed into a cycle.

    The snake branch closes the path with an edge between its endpoints of
    weight exactly D_{endpoints} (the minimal valid closure weight).
    """
    if family.n < 3:
        return Realization.rejected("a polygon needs n >= 3")
    tri = check_triangle(family, max_violations=1)
    if not tri.holds:
        return Realization.rejected(f"triangle violation at {tri.violations[0]}")
    pruned = pruned_polygon_check(family)
    if pruned.accepted:
        return pruned
    snake = snake_check(family)
    if snake.accepted:
        path = snake.graph
        degree = {v: 0 for v in range(1, family.n + 1)}
        for u, v, _w in path.edges:
            degree[u] += 1
            degree[v] += 1
        ends = sorted(v for v, deg in degree.items() if deg == 1)
        edges = list(path.edges)
        edges.append((ends[0], ends[1], family.d(ends[0], ends[1])))
        graph = WeightedGraph(family.n, edges)
        if not verify_realization(graph, family):
            raise InternalInconsistencyError("snake closure failed verification")
        return Realization.ok(graph)
    return Realization.rejected(
        f"neither pruned polygon ({pruned.reason}) nor snake ({snake.reason})"
    )


def canonical_cycle_order(graph: WeightedGraph) -> Tuple[int, ...]:
    """Vertex order of a cycle graph, starting at the smallest label and
    oriented toward its smaller neighbor; for comparisons up to rotation and
    reflection."""
    adj = {v: [] for v in range(1, graph.n + 1)}
    for u, v, _w in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    for v, nb in adj.items():
        if len(nb) != 2:
            raise FamilyError(f"not a cycle: vertex {v} has degree {len(nb)}")
    start = 1
    order = [start, min(adj[start])]
    while len(order) < graph.n:
        a, b = adj[order[-1]]
        order.append(b if a == order[-2] else a)
    return tuple(order)
