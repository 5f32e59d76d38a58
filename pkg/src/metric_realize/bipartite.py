"""Recognizers for pruned complete graphs and (complete) bipartite graphs,
including bipartition recovery through tight chains of indecomposable links."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Tuple

from .family import (
    DistanceFamily,
    check_triangle,
    is_indecomposable,
)
from .graph import WeightedGraph, verify_realization
from .realization import InternalInconsistencyError, Realization


def complete_check(family: DistanceFamily) -> Realization:
    """Decide realizability by a pruned complete graph.

    Accepts iff every entry is indecomposable; the realization is the
    complete graph with w(e(i,j)) = D_{i,j}, which is necessarily pruned.
    """
    tri = check_triangle(family, max_violations=1)
    if not tri.holds:
        return Realization.rejected(f"triangle violation at {tri.violations[0]}")
    for i, j in family.pairs():
        if not is_indecomposable(family, i, j):
            return Realization.rejected(f"entry ({i},{j}) is decomposable")
    edges = [(i, j, family.d(i, j)) for i, j in family.pairs()]
    graph = WeightedGraph(family.n, edges)
    if not verify_realization(graph, family):
        raise InternalInconsistencyError("complete reconstruction failed verification")
    return Realization.ok(graph)


@dataclass
class Bipartition:
    """Recovered sides X and Y with the tight chains that placed each vertex.

    The base pair (x, y) attains the minimal 2-weight.  A vertex lands in
    ``x_side`` via a tight chain with an even number of indecomposable links
    from x (the empty chain for x itself) and in ``y_side`` via an odd one
    (a single indecomposable link for direct partners of x).  Witness chains
    list the intermediate vertices only.  Sides may overlap; overlap is the
    caller's concern, it is reported rather than hidden.
    """

    base_pair: Tuple[int, int]
    x_side: FrozenSet[int]
    y_side: FrozenSet[int]
    x_witnesses: Dict[int, Tuple[int, ...]] = field(default_factory=dict)
    y_witnesses: Dict[int, Tuple[int, ...]] = field(default_factory=dict)


def _min_pair(family: DistanceFamily) -> Tuple[int, int]:
    best = None
    best_val = None
    for i, j in family.pairs():
        v = family.d(i, j)
        if best_val is None or v < best_val:
            best_val = v
            best = (i, j)
    return best


def bipartition(family: DistanceFamily) -> Bipartition:
    """Recover the two sides of a would-be bipartite realization.

    Dynamic programming over vertices in increasing D_{x,.} order on states
    (vertex, parity): (v, p) is reachable iff some u with (u, p^1) reachable
    has (u, v) indecomposable and D_{x,u} + D_{u,v} = D_{x,v}.  This equals
    explicit enumeration of tight chains because the triangle inequalities
    force every prefix of a tight chain to be tight; tightness also makes
    D_{x,.} strictly increase along a chain, so chains are simple.
    """
    x, y = _min_pair(family)
    d = family.d
    cmp = family.cmp
    n = family.n

    order = sorted((v for v in range(1, n + 1) if v != x), key=lambda v: d(x, v))
    # parent[(v, p)] = predecessor vertex on a tight chain of parity p, x-rooted
    parent: Dict[Tuple[int, int], Optional[int]] = {(x, 0): None}
    for v in order:
        for p in (0, 1):
            for u in [x] + order:
                if u == v:
                    continue
                if (u, p ^ 1) not in parent:
                    continue
                if not cmp.eq(d(x, u) + d(u, v), d(x, v)):
                    continue
                if is_indecomposable(family, u, v):
                    parent[(v, p)] = u
                    break

    def chain(v: int, p: int) -> Tuple[int, ...]:
        links: List[int] = []
        cur, cp = v, p
        while True:
            pred = parent[(cur, cp)]
            if pred is None:
                break
            links.append(pred)
            cur, cp = pred, cp ^ 1
        links.reverse()
        return tuple(links[1:])  # drop x, keep intermediates only

    x_side = {x}
    y_side = set()
    x_witnesses: Dict[int, Tuple[int, ...]] = {x: ()}
    y_witnesses: Dict[int, Tuple[int, ...]] = {}
    for v in order:
        if v != y and (v, 0) in parent:
            x_side.add(v)
            x_witnesses[v] = chain(v, 0)
        if (v, 1) in parent:
            y_side.add(v)
            y_witnesses[v] = chain(v, 1)
    return Bipartition((x, y), frozenset(x_side), frozenset(y_side), x_witnesses, y_witnesses)


def _bigraph(family: DistanceFamily) -> Tuple[Realization, Optional[Bipartition]]:
    tri = check_triangle(family, max_violations=1)
    if not tri.holds:
        return Realization.rejected(f"triangle violation at {tri.violations[0]}"), None
    bp = bipartition(family)
    overlap = bp.x_side & bp.y_side
    if overlap:
        return Realization.rejected(f"sides overlap at {sorted(overlap)}"), bp
    gap = set(range(1, family.n + 1)) - (bp.x_side | bp.y_side)
    if gap:
        return Realization.rejected(f"cover gap: {sorted(gap)} in neither side"), bp
    if bp.base_pair[1] not in bp.y_side:
        return Realization.rejected(
            f"base partner {bp.base_pair[1]} did not land in the Y side"
        ), bp
    d = family.d
    cmp = family.cmp
    for side, other in ((bp.x_side, bp.y_side), (bp.y_side, bp.x_side)):
        for a, b in itertools.combinations(sorted(side), 2):
            if not any(cmp.eq(d(a, b), d(a, z) + d(z, b)) for z in other):
                return Realization.rejected(
                    f"same-side pair ({a},{b}) has no splitting vertex on the other side"
                ), bp
    edges = [
        (a, b, d(a, b))
        for a in sorted(bp.x_side)
        for b in sorted(bp.y_side)
    ]
    graph = WeightedGraph(family.n, edges)
    if not verify_realization(graph, family):
        return Realization.rejected(
            "bipartite conditions hold but the reconstruction failed verification"
        ), bp
    return Realization.ok(graph), bp


def bigraph_check(family: DistanceFamily) -> Realization:
    """Decide bipartite realizability; the witness realization is the complete
    bipartite graph on the recovered sides with the cross 2-weights as weights."""
    result, _bp = _bigraph(family)
    return result


def cobigraph_check(family: DistanceFamily) -> Realization:
    """Decide realizability by a *pruned* complete bipartite graph: bipartite
    realizability plus indecomposability of every cross pair."""
    result, bp = _bigraph(family)
    if not result.accepted:
        return result
    for a in sorted(bp.x_side):
        for b in sorted(bp.y_side):
            if not is_indecomposable(family, a, b):
                return Realization.rejected(f"cross entry ({a},{b}) is decomposable")
    return result
