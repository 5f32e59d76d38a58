"""Seeded random instance generators for every graph class and small-n
brute-force realizability oracles backing the test and acceptance suites.

Generators are deterministic in the full GenSpec.  Oracles enumerate
candidate topologies (Prufer sequences for trees, cyclic orders for
polygons, side assignments for bipartitions) with edge weights forced to the
family values of adjacent pairs, and decide by checking all path sums.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Set, Tuple

import networkx as nx

from .comparison import Number
from .family import DistanceFamily, check_triangle
from .graph import WeightedGraph, shortest_path_matrix, support_graph, verify_realization
from .planar import subdivision_witness_search

ORACLE_SIZE_LIMIT = 7

CLASS_MIN_N = {
    "snake": 2,
    "caterpillar": 2,
    "tree": 2,
    "polygon": 3,
    "complete": 2,
    "complete_bipartite": 2,
    "planar": 2,
    "arbitrary_connected": 2,
}


class GenerationError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Deterministic instance description: class, size, seed, weight model.

    ``weight_kind`` is "int" (uniform integers in [lo, hi]) or "decimal"
    (multiples of 0.1 in [lo, hi], kept exact as Fractions).
    """

    class_id: str
    n: int
    seed: int
    weight_kind: str = "int"
    lo: int = 1
    hi: int = 20

    def __post_init__(self):
        if self.class_id not in CLASS_MIN_N:
            raise GenerationError(f"unknown class {self.class_id!r}")
        if self.n < CLASS_MIN_N[self.class_id]:
            raise GenerationError(
                f"class {self.class_id} needs n >= {CLASS_MIN_N[self.class_id]}, got {self.n}"
            )
        if self.weight_kind not in ("int", "decimal"):
            raise GenerationError(f"unknown weight model {self.weight_kind!r}")
        if self.lo < 1 or self.lo > self.hi:
            raise GenerationError(f"bad weight range [{self.lo},{self.hi}]")

    def rng(self) -> random.Random:
        return random.Random(
            f"{self.class_id}|{self.n}|{self.seed}|{self.weight_kind}|{self.lo}|{self.hi}"
        )


def _weight_sampler(spec: GenSpec, lo_tenths: int = None, hi_tenths: int = None):
    """Weight draw on the model's grid, optionally narrowed (in tenths)."""
    if spec.weight_kind == "int":
        lo, hi = spec.lo, spec.hi
        if lo_tenths is not None:
            lo = max(lo, -(-lo_tenths // 10))
            hi = min(hi, hi_tenths // 10)
        return lambda rng: rng.randint(lo, hi)
    lo_t = spec.lo * 10 if lo_tenths is None else max(spec.lo * 10, lo_tenths)
    hi_t = spec.hi * 10 if hi_tenths is None else min(spec.hi * 10, hi_tenths)

    def draw(rng: random.Random) -> Number:
        k = rng.randint(lo_t, hi_t)
        return k // 10 if k % 10 == 0 else Fraction(k, 10)

    return draw


def _metric_range_tenths(spec: GenSpec, factor: int) -> Tuple[int, int]:
    """Sub-range [m, hi] (in tenths) with factor * m > hi, so that every
    edge is strictly shorter than any path of ``factor`` edges."""
    hi_t = spec.hi * 10
    m = max(spec.lo * 10, hi_t // factor + 1)
    if m > hi_t:
        raise GenerationError(
            f"weight range [{spec.lo},{spec.hi}] cannot support the {spec.class_id} class"
        )
    return m, hi_t


def random_prufer_tree(n: int, rng: random.Random) -> List[Tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(1, 2)]
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    return tree_from_prufer(seq, n)


def tree_from_prufer(seq: Sequence[int], n: int) -> List[Tuple[int, int]]:
    """Labeled tree on [n] from a Prufer sequence of length n - 2."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def prufer_sequences(n: int) -> Iterator[Sequence[int]]:
    if n == 2:
        yield ()
        return
    yield from itertools.product(range(1, n + 1), repeat=n - 2)


def _degrees(n: int, edges: Sequence[Tuple[int, int]]) -> List[int]:
    deg = [0] * (n + 1)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def is_caterpillar_edges(n: int, edges: Sequence[Tuple[int, int]]) -> bool:
    """Tree test: the degree->=2 vertices must induce a path."""
    deg = _degrees(n, edges)
    inner = {v for v in range(1, n + 1) if deg[v] >= 2}
    inner_deg = {v: 0 for v in inner}
    for u, v in edges:
        if u in inner and v in inner:
            inner_deg[u] += 1
            inner_deg[v] += 1
    return all(d <= 2 for d in inner_deg.values())


def is_snake_edges(n: int, edges: Sequence[Tuple[int, int]]) -> bool:
    deg = _degrees(n, edges)
    if n == 2:
        return len(edges) == 1
    return len(edges) == n - 1 and sum(1 for v in range(1, n + 1) if deg[v] == 1) == 2 and max(deg[1:]) <= 2


def generate(spec: GenSpec) -> WeightedGraph:
    """Deterministic random instance of the requested class.

    The output is structurally checked against the class definition; for the
    complete and complete-bipartite classes the weights are drawn from a
    narrowed range making every edge strictly shortest, so the instance is
    pruned and its family round-trips through the class recognizer.
    """
    rng = spec.rng()
    n = spec.n
    draw = _weight_sampler(spec)

    if spec.class_id == "snake":
        perm = rng.sample(range(1, n + 1), n)
        edges = [(perm[k], perm[k + 1], draw(rng)) for k in range(n - 1)]
        graph = WeightedGraph(n, edges)
        if not is_snake_edges(n, [(u, v) for u, v, _ in graph.edges]):
            raise GenerationError("generated snake is not a path")
        return graph

    if spec.class_id == "caterpillar":
        if n == 2:
            return WeightedGraph(2, [(1, 2, draw(rng))])
        labels = rng.sample(range(1, n + 1), n)
        spine_len = rng.randint(1, n - 1)
        spine, leaves = labels[:spine_len], labels[spine_len:]
        edges = [(spine[k], spine[k + 1], draw(rng)) for k in range(spine_len - 1)]
        edges += [(leaf, rng.choice(spine), draw(rng)) for leaf in leaves]
        graph = WeightedGraph(n, edges)
        if not is_caterpillar_edges(n, [(u, v) for u, v, _ in graph.edges]):
            raise GenerationError("generated caterpillar lacks a spine path")
        return graph

    if spec.class_id == "tree":
        edges = random_prufer_tree(n, rng)
        return WeightedGraph(n, [(u, v, draw(rng)) for u, v in edges])

    if spec.class_id == "polygon":
        perm = rng.sample(range(1, n + 1), n)
        edges = [(perm[k], perm[(k + 1) % n], draw(rng)) for k in range(n)]
        return WeightedGraph(n, edges)

    if spec.class_id == "complete":
        narrow = _weight_sampler(spec, *_metric_range_tenths(spec, 2))
        edges = [(i, j, narrow(rng)) for i, j in itertools.combinations(range(1, n + 1), 2)]
        return WeightedGraph(n, edges)

    if spec.class_id == "complete_bipartite":
        narrow = _weight_sampler(spec, *_metric_range_tenths(spec, 3))
        labels = rng.sample(range(1, n + 1), n)
        a = rng.randint(1, n - 1)
        x_side, y_side = labels[:a], labels[a:]
        edges = [(u, v, narrow(rng)) for u in x_side for v in y_side]
        return WeightedGraph(n, edges)

    if spec.class_id == "planar":
        edges = random_prufer_tree(n, rng)
        g = nx.Graph(edges)
        g.add_nodes_from(range(1, n + 1))
        candidates = [
            (i, j)
            for i, j in itertools.combinations(range(1, n + 1), 2)
            if not g.has_edge(i, j)
        ]
        rng.shuffle(candidates)
        budget = rng.randint(0, 2 * n)
        for i, j in candidates:
            if budget == 0:
                break
            g.add_edge(i, j)
            if nx.check_planarity(g)[0]:
                budget -= 1
            else:
                g.remove_edge(i, j)
        graph = WeightedGraph(n, [(u, v, draw(rng)) for u, v in g.edges()])
        if not nx.check_planarity(nx.Graph(list(graph.edge_pairs())))[0]:
            raise GenerationError("generated graph is not planar")
        return graph

    if spec.class_id == "arbitrary_connected":
        edges = set(tuple(sorted(e)) for e in random_prufer_tree(n, rng))
        extra = rng.randint(0, n)
        candidates = [
            e for e in itertools.combinations(range(1, n + 1), 2) if e not in edges
        ]
        rng.shuffle(candidates)
        edges.update(candidates[:extra])
        return WeightedGraph(n, [(u, v, draw(rng)) for u, v in sorted(edges)])

    raise GenerationError(f"unknown class {spec.class_id!r}")


# ---------------------------------------------------------------------------
# Brute-force oracles
# ---------------------------------------------------------------------------


def _forced_tree_realizes(n: int, edges: Sequence[Tuple[int, int]], family: DistanceFamily) -> bool:
    """Does the tree with forced weights w(u,v) = D_{u,v} realize the family?

    Checks every path sum by DFS from each root, exiting on the first
    mismatch; independent of the shortest-path machinery.
    """
    cmp = family.cmp
    d = family.d
    adj: Dict[int, List[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    for root in range(1, n):
        stack = [(root, 0, 0)]
        while stack:
            v, parent, acc = stack.pop()
            for w in adj[v]:
                if w == parent:
                    continue
                dist = acc + d(v, w)
                if not cmp.eq(dist, d(root, w)):
                    return False
                stack.append((w, v, dist))
    return True


def _snakelike_brute(family: DistanceFamily) -> bool:
    n = family.n
    if n == 2:
        return True
    cmp = family.cmp
    d = family.d
    for perm in itertools.permutations(range(1, n + 1)):
        if perm[0] > perm[-1]:
            continue
        acc = 0
        prefix = [0]
        ok = True
        for k in range(1, n):
            acc = acc + d(perm[k - 1], perm[k])
            prefix.append(acc)
            if not cmp.eq(acc, d(perm[0], perm[k])):
                ok = False
                break
        if not ok:
            continue
        if all(
            cmp.eq(prefix[j] - prefix[i], d(perm[i], perm[j]))
            for i in range(1, n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def _treelike_brute(family: DistanceFamily, caterpillar_only: bool = False) -> bool:
    n = family.n
    if n == 2:
        return True
    for seq in prufer_sequences(n):
        edges = tree_from_prufer(seq, n)
        if caterpillar_only and not is_caterpillar_edges(n, edges):
            continue
        if _forced_tree_realizes(n, edges, family):
            return True
    return False


def _pruned_polygonlike_brute(family: DistanceFamily) -> bool:
    n = family.n
    if n < 3:
        return False
    cmp = family.cmp
    d = family.d
    for rest in itertools.permutations(range(2, n + 1)):
        if rest[0] > rest[-1]:
            continue  # reflections are the same cycle
        order = (1, *rest)
        prefix = [0]
        for k in range(1, n):
            prefix.append(prefix[-1] + d(order[k - 1], order[k]))
        total = prefix[-1] + d(order[-1], order[0])
        if not all(
            cmp.eq(d(order[p], order[q]), min(prefix[q] - prefix[p], total - (prefix[q] - prefix[p])))
            for p in range(n)
            for q in range(p + 1, n)
        ):
            continue
        # the cycle realizes the family; it is pruned only when no edge ties
        # with its complementary arc (a tied edge is useless)
        edges = [
            (order[k], order[(k + 1) % n], d(order[k], order[(k + 1) % n]))
            for k in range(n)
        ]
        if _all_edges_needed(WeightedGraph(n, edges)):
            return True
    return False


def _matrix_matches(matrix, family: DistanceFamily) -> bool:
    cmp = family.cmp
    for i, j in family.pairs():
        if not cmp.eq(matrix[i - 1][j - 1], family.d(i, j)):
            return False
    return True


def _all_edges_needed(graph: WeightedGraph) -> bool:
    """Every edge's deletion changes some 2-weight (or disconnects): pruned."""
    base = shortest_path_matrix(graph)
    for u, v, _w in graph.edges:
        reduced = graph.without_edge(u, v, require_connected=False)
        if not reduced.is_connected():
            continue
        alt = shortest_path_matrix(reduced)
        if alt == base:
            return False
    return True


def _cographlike_brute(family: DistanceFamily) -> bool:
    if not check_triangle(family, max_violations=1).holds:
        return False
    graph = WeightedGraph(
        family.n, [(i, j, family.d(i, j)) for i, j in family.pairs()]
    )
    return _matrix_matches(shortest_path_matrix(graph), family) and _all_edges_needed(graph)


def _bigraphlike_brute(family: DistanceFamily, pruned: bool = False) -> bool:
    n = family.n
    others = list(range(2, n + 1))
    for r in range(0, n - 1):
        for extra in itertools.combinations(others, r):
            x_side = {1, *extra}
            y_side = [v for v in range(1, n + 1) if v not in x_side]
            if not y_side:
                continue
            edges = [(a, b, family.d(a, b)) for a in sorted(x_side) for b in y_side]
            graph = WeightedGraph(n, edges, require_connected=False)
            if not graph.is_connected():
                continue
            if not _matrix_matches(shortest_path_matrix(graph), family):
                continue
            if pruned and not _all_edges_needed(graph):
                continue
            return True
    return False


def _planarlike_brute(family: DistanceFamily) -> bool:
    if not check_triangle(family, max_violations=1).holds:
        return False
    return subdivision_witness_search(support_graph(family)) is None


def brute_force_class_check(family: DistanceFamily, class_id: str) -> bool:
    """Independent small-n oracle: does some graph of the class realize the family?

    Enumeration strategies: permutations for snakes, Prufer sequences for
    trees and caterpillars, cyclic orders for pruned polygons (plus the snake
    branch for general polygons), side assignments for bipartite classes,
    edge-deletion tests for prunedness, and the exhaustive subdivision search
    for planarity.  Guarded at n <= 7.
    """
    if family.n > ORACLE_SIZE_LIMIT:
        raise ValueError(f"brute-force oracle refused for n={family.n} > {ORACLE_SIZE_LIMIT}")
    if class_id == "snake":
        return _snakelike_brute(family)
    if class_id == "caterpillar":
        return _treelike_brute(family, caterpillar_only=True)
    if class_id == "tree":
        return _treelike_brute(family)
    if class_id == "polygon":
        return _pruned_polygonlike_brute(family) or _snakelike_brute(family)
    if class_id == "pruned_polygon":
        return _pruned_polygonlike_brute(family)
    if class_id == "complete":
        return _cographlike_brute(family)
    if class_id == "complete_bipartite":
        return _bigraphlike_brute(family)
    if class_id == "pruned_complete_bipartite":
        return _bigraphlike_brute(family, pruned=True)
    if class_id == "planar":
        return _planarlike_brute(family)
    raise ValueError(f"no oracle for class {class_id!r}")
