"""Planar realizability via the support graph, with Kuratowski-subdivision
witnesses (a K5 hub set or disjoint K33 hub triples joined by vertex-disjoint
chains of indecomposable links)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from .family import DistanceFamily, FamilyError, check_triangle, is_indecomposable
from .graph import WeightedGraph, support_graph, verify_realization
from .realization import InternalInconsistencyError, Realization

SEARCH_SIZE_LIMIT = 10


class SizeGuardError(ValueError):
    """The brute-force witness search was refused for being too large."""


@dataclass
class PlanarWitness:
    """Certificate that the support graph contains a Kuratowski subdivision.

    ``kind`` is "K5" (hubs = a 5-set) or "K33" (hubs = two disjoint 3-sets).
    ``chains`` maps each hub pair to the tuple of interior vertices of its
    connecting path; the empty tuple means the pair is directly
    indecomposable.  Chains avoid all hubs and are pairwise disjoint.
    """

    kind: str
    hubs: tuple
    chains: Dict[FrozenSet[int], Tuple[int, ...]]

    def hub_set(self) -> Set[int]:
        if self.kind == "K5":
            return set(self.hubs)
        return set(self.hubs[0]) | set(self.hubs[1])

    def hub_pairs(self) -> List[Tuple[int, int]]:
        if self.kind == "K5":
            return list(itertools.combinations(self.hubs, 2))
        return [(a, b) for a in self.hubs[0] for b in self.hubs[1]]

    def validate(self, family: DistanceFamily) -> None:
        """Check the witness's structural invariants against a family."""
        hubs = self.hub_set()
        expected = 5 if self.kind == "K5" else 6
        if len(hubs) != expected:
            raise FamilyError(f"{self.kind} witness needs {expected} distinct hubs")
        used: Set[int] = set()
        for a, b in self.hub_pairs():
            chain = self.chains[frozenset((a, b))]
            for v in chain:
                if v in hubs:
                    raise FamilyError(f"chain for ({a},{b}) passes through hub {v}")
                if v in used:
                    raise FamilyError(f"chains are not disjoint: vertex {v} reused")
                used.add(v)
            walk = (a, *chain, b)
            for u, v in zip(walk, walk[1:]):
                if not is_indecomposable(family, u, v):
                    raise FamilyError(f"link ({u},{v}) in witness is decomposable")


def _adjacency(graph: WeightedGraph) -> Dict[int, Set[int]]:
    adj: Dict[int, Set[int]] = {v: set() for v in range(1, graph.n + 1)}
    for u, v, _w in graph.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _interior_paths(
    adj: Dict[int, Set[int]], a: int, b: int, banned: Set[int]
) -> Iterator[Tuple[int, ...]]:
    """Simple paths a -> b with at least one interior vertex, interiors
    avoiding ``banned``; yields the tuple of interiors."""

    def extend(v: int, interiors: List[int]) -> Iterator[Tuple[int, ...]]:
        for w in sorted(adj[v]):
            if w == b:
                if interiors:
                    yield tuple(interiors)
            elif w not in banned and w != a and w not in interiors:
                interiors.append(w)
                yield from extend(w, interiors)
                interiors.pop()

    yield from extend(a, [])


def _connect_hubs(
    adj: Dict[int, Set[int]], pairs: Sequence[Tuple[int, int]], hubs: Set[int]
) -> Optional[Dict[FrozenSet[int], Tuple[int, ...]]]:
    """Backtracking search for pairwise-disjoint connecting chains; direct
    edges use the empty chain and consume no interior vertices."""
    used: Set[int] = set()
    chains: Dict[FrozenSet[int], Tuple[int, ...]] = {}

    def solve(k: int) -> bool:
        if k == len(pairs):
            return True
        a, b = pairs[k]
        if b in adj[a]:
            chains[frozenset((a, b))] = ()
            if solve(k + 1):
                return True
            del chains[frozenset((a, b))]
            return False
        for interiors in _interior_paths(adj, a, b, hubs | used):
            used.update(interiors)
            chains[frozenset((a, b))] = interiors
            if solve(k + 1):
                return True
            del chains[frozenset((a, b))]
            used.difference_update(interiors)
        return False

    return chains if solve(0) else None


def subdivision_witness_search(
    graph: WeightedGraph, size_limit: int = SEARCH_SIZE_LIMIT
) -> Optional[PlanarWitness]:
    """Exhaustive search for a K5 or K33 subdivision with hubs among [n].

    Intended for small graphs (the search is exponential); beyond
    ``size_limit`` vertices it refuses explicitly rather than degrade.
    """
    if graph.n > size_limit:
        raise SizeGuardError(
            f"witness search refused for n={graph.n} > {size_limit}; use the general planarity test"
        )
    adj = _adjacency(graph)
    vertices = range(1, graph.n + 1)
    for q in itertools.combinations(vertices, 5):
        chains = _connect_hubs(adj, list(itertools.combinations(q, 2)), set(q))
        if chains is not None:
            return PlanarWitness("K5", tuple(q), chains)
    for a_set in itertools.combinations(vertices, 3):
        rest = [v for v in vertices if v not in a_set]
        for b_set in itertools.combinations(rest, 3):
            if min(b_set) < min(a_set):
                continue  # unordered {A, B}: avoid the mirror duplicate
            pairs = [(a, b) for a in a_set for b in b_set]
            chains = _connect_hubs(adj, pairs, set(a_set) | set(b_set))
            if chains is not None:
                return PlanarWitness("K33", (tuple(a_set), tuple(b_set)), chains)
    return None


def _witness_from_kuratowski(sub: "nx.Graph") -> PlanarWitness:
    """Convert a Kuratowski subgraph (a K5/K33 subdivision) into a witness."""
    degrees = dict(sub.degree())
    four = sorted(v for v, d in degrees.items() if d == 4)
    if len(four) == 5:
        kind = "K5"
        hubs = set(four)
    else:
        kind = "K33"
        hubs = {v for v, d in degrees.items() if d == 3}

    chains: Dict[FrozenSet[int], Tuple[int, ...]] = {}
    hub_adj: Dict[int, Set[int]] = {h: set() for h in hubs}
    for h in hubs:
        for start in sub.neighbors(h):
            interiors: List[int] = []
            prev, cur = h, start
            while cur not in hubs:
                interiors.append(cur)
                nxt = [w for w in sub.neighbors(cur) if w != prev]
                prev, cur = cur, nxt[0]
            chains[frozenset((h, cur))] = tuple(interiors)
            hub_adj[h].add(cur)

    if kind == "K5":
        return PlanarWitness(kind, tuple(sorted(hubs)), chains)
    # 2-color the hub adjacency (it is K33) to recover the two triples
    start = min(hubs)
    side_a, side_b = {start}, set(hub_adj[start])
    for h in hubs:
        if h not in side_a and h not in side_b:
            side_a.add(h)
    a_set, b_set = sorted(side_a), sorted(side_b)
    if min(b_set) < min(a_set):
        a_set, b_set = b_set, a_set
    return PlanarWitness(kind, (tuple(a_set), tuple(b_set)), chains)


def planar_check(family: DistanceFamily) -> Realization:
    """Decide planargraphlike: triangle inequalities plus planarity of the
    support graph (the pruned realization forced by the indecomposable pairs).

    On rejection for non-planarity the result carries a PlanarWitness.
    """
    tri = check_triangle(family, max_violations=1)
    if not tri.holds:
        return Realization.rejected(f"triangle violation at {tri.violations[0]}")
    graph = support_graph(family)
    if not graph.is_connected():
        raise InternalInconsistencyError(
            "support graph of a triangle-satisfying family must be connected"
        )
    g = nx.Graph()
    g.add_nodes_from(range(1, graph.n + 1))
    g.add_edges_from((u, v) for u, v, _w in graph.edges)
    is_planar, certificate = nx.check_planarity(g, counterexample=True)
    if is_planar:
        if not verify_realization(graph, family):
            raise InternalInconsistencyError("support graph failed verification")
        return Realization.ok(graph)
    witness = _witness_from_kuratowski(certificate)
    return Realization.rejected(
        f"support graph contains a {witness.kind} subdivision", witness=witness
    )
