"""Recognizers and reconstructors for snakes, caterpillars, and labeled trees.

A snake is a tree with exactly two leaves (a path); a caterpillar is a tree
whose degree->=2 vertices form a path (the spine).  All recognizers return a
:class:`Realization` and verify any reconstruction they produce.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .comparison import Number
from .family import (
    DistanceFamily,
    FamilyError,
    check_four_point,
    check_median,
)
from .graph import WeightedGraph, support_graph, verify_realization
from .realization import InternalInconsistencyError, Realization


@dataclass
class CaterpillarStats:
    """Pendant offsets t_x per vertex and the pair maximizing D_{a,b} - t_a - t_b.

    ``offsets[i - 1]`` is t_i.  For a family realized by a caterpillar, t_x is
    the pendant-edge weight when x is a leaf and 0 when x is on the spine.
    """

    offsets: Tuple[Number, ...]
    extremal_pair: Tuple[int, int]

    def t(self, x: int) -> Number:
        return self.offsets[x - 1]


def _max_pair(family: DistanceFamily) -> Tuple[int, int]:
    """Pair (i, j), i < j, with maximal D; lexicographic tie-break."""
    best = None
    best_val = None
    for i, j in family.pairs():
        v = family.d(i, j)
        if best_val is None or v > best_val:
            best_val = v
            best = (i, j)
    return best


def snake_check(family: DistanceFamily) -> Realization:
    """Decide whether the family is realizable by a positive-weighted path.

    With (x, y) a pair of maximal D, the family is snakelike iff
    D_{i,j} = |D_{i,x} - D_{j,x}| for all distinct i, j != x.  On acceptance
    the path is rebuilt by sorting vertices by distance from x.
    """
    if family.n == 2:
        return Realization.ok(WeightedGraph(2, [(1, 2, family.d(1, 2))]))
    cmp = family.cmp
    d = family.d
    x, _y = _max_pair(family)
    rest = [v for v in range(1, family.n + 1) if v != x]
    for i, j in itertools.combinations(rest, 2):
        if not cmp.eq(d(i, j), abs(d(i, x) - d(j, x))):
            return Realization.rejected(
                f"snake condition fails at ({i},{j}): D={d(i, j)} != |D_{{{i},{x}}}-D_{{{j},{x}}}|"
            )
    rest.sort(key=lambda v: d(v, x))
    order = [x] + rest
    edges = []
    prev_dist: Number = 0
    for k in range(1, len(order)):
        w = d(order[k], x) - prev_dist
        if not w > 0:
            return Realization.rejected(
                f"snake construction fails: vertices {order[k - 1]} and {order[k]} coincide"
            )
        edges.append((order[k - 1], order[k], w))
        prev_dist = d(order[k], x)
    graph = WeightedGraph(family.n, edges)
    if not verify_realization(graph, family):
        raise InternalInconsistencyError("snake reconstruction failed verification")
    return Realization.ok(graph)


def pendant_offsets(family: DistanceFamily) -> CaterpillarStats:
    """Compute t_x = 1/2 min over distinct y,z != x of (D_{x,y}+D_{x,z}-D_{y,z})
    and the extremal pair maximizing D_{a,b} - t_a - t_b (lexicographic ties).

    Requires n >= 3 and the triangle inequalities (caller responsibility);
    under them every t_x is nonnegative.
    """
    if family.n < 3:
        raise FamilyError("pendant offsets need n >= 3")
    d = family.d
    offsets: List[Number] = []
    for x in range(1, family.n + 1):
        others = [v for v in range(1, family.n + 1) if v != x]
        m = min(d(x, y) + d(x, z) - d(y, z) for y, z in itertools.combinations(others, 2))
        offsets.append(m / 2 if isinstance(m, float) else _half(m))
    best = None
    best_val = None
    for a, b in family.pairs():
        v = d(a, b) - offsets[a - 1] - offsets[b - 1]
        if best_val is None or v > best_val:
            best_val = v
            best = (a, b)
    return CaterpillarStats(tuple(offsets), best)


def _half(value) -> Number:
    from fractions import Fraction

    if isinstance(value, int) and value % 2 == 0:
        return value // 2
    return Fraction(value, 2) if isinstance(value, int) else value / 2


def caterpillar_check(family: DistanceFamily) -> Realization:
    """Decide caterpillar realizability and rebuild the caterpillar.

    Accepts iff the four-point condition holds, the family is median, and for
    the extremal pair (a, b): D_{a,b} + D_{i,j} >= max{D_{a,i}+D_{b,j},
    D_{a,j}+D_{b,i}} for all distinct i, j outside {a, b}.  The reconstruction
    places spine vertices at distance D_{a,i} from a and hangs each t_i > 0
    vertex by a pendant edge from the spine vertex at distance D_{a,i} - t_i;
    it is always verified, and acceptance is withdrawn if verification fails.
    """
    if family.n == 2:
        return snake_check(family)
    cmp = family.cmp
    d = family.d

    fp = check_four_point(family, max_violations=1)
    if not fp.holds:
        return Realization.rejected(f"four-point condition fails at {fp.violations[0]}")
    med = check_median(family, max_violations=1)
    if not med.holds:
        a, b, c, count = med.violations[0]
        return Realization.rejected(f"median condition fails at ({a},{b},{c}): {count} medians")

    stats = pendant_offsets(family)
    a, b = stats.extremal_pair
    for i, j in itertools.combinations([v for v in range(1, family.n + 1) if v not in (a, b)], 2):
        lhs = d(a, b) + d(i, j)
        rhs = max(d(a, i) + d(b, j), d(a, j) + d(b, i))
        if not cmp.le(rhs, lhs):
            return Realization.rejected(
                f"caterpillar inequality fails for extremal pair ({a},{b}) at ({i},{j})"
            )

    graph = _build_caterpillar(family, stats)
    if isinstance(graph, str):
        return Realization.rejected(graph)
    if not verify_realization(graph, family):
        return Realization.rejected(
            "caterpillar conditions hold but the reconstruction failed verification"
        )
    return Realization.ok(graph)


def _build_caterpillar(family: DistanceFamily, stats: CaterpillarStats):
    """Build the caterpillar for an accepted family; returns a diagnostic
    string when an attachment point is not among the placed spine vertices."""
    cmp = family.cmp
    d = family.d
    a, b = stats.extremal_pair

    # Path vertices with positions measured from a; a and b are the path
    # endpoints even when they carry a positive pendant offset.
    placed: List[Tuple[Number, int]] = [(0, a), (d(a, b), b)]
    pendants: List[int] = []
    for i in range(1, family.n + 1):
        if i in (a, b):
            continue
        t_i = stats.t(i)
        if cmp.eq(t_i, 0):
            placed.append((d(a, i), i))
        else:
            pendants.append(i)

    placed.sort(key=lambda p: p[0])
    for (p1, v1), (p2, v2) in zip(placed, placed[1:]):
        if cmp.eq(p1, p2):
            return f"vertices {v1} and {v2} would coincide on the spine"

    edges: List[Tuple[int, int, Number]] = []
    for (p1, v1), (p2, v2) in zip(placed, placed[1:]):
        edges.append((v1, v2, p2 - p1))

    for i in pendants:
        t_i = stats.t(i)
        target = d(a, i) - t_i
        attach: Optional[int] = None
        for pos, v in placed:
            if cmp.eq(pos, target):
                attach = v
                break
        if attach is None:
            return (
                f"no spine vertex at distance {target} from {a} to attach vertex {i}"
            )
        edges.append((attach, i, t_i))

    return WeightedGraph(family.n, edges)


def tree_check(family: DistanceFamily) -> Realization:
    """Decide labeled-tree realizability: four-point condition plus median.

    On a positive verdict the tree is recovered as the support graph, which
    must be connected with exactly n - 1 edges and verify against the family;
    a failure there is an internal inconsistency (the two conditions
    characterize tree realizability).
    """
    if family.n == 2:
        return Realization.ok(WeightedGraph(2, [(1, 2, family.d(1, 2))]))
    fp = check_four_point(family, max_violations=1)
    if not fp.holds:
        return Realization.rejected(f"four-point condition fails at {fp.violations[0]}")
    med = check_median(family, max_violations=1)
    if not med.holds:
        a, b, c, count = med.violations[0]
        return Realization.rejected(f"median condition fails at ({a},{b},{c}): {count} medians")
    try:
        graph = support_graph(family)
    except FamilyError as exc:
        return Realization.rejected(str(exc))
    if len(graph.edges) != family.n - 1 or not graph.is_connected():
        raise InternalInconsistencyError(
            "four-point and median hold but the support graph is not a spanning tree"
        )
    if not verify_realization(graph, family):
        raise InternalInconsistencyError("tree reconstruction failed verification")
    return Realization.ok(graph)
