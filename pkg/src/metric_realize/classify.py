"""Run every recognizer on a family and assemble a consistent report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Optional

from .bipartite import Bipartition, _bigraph, cobigraph_check, complete_check
from .family import DistanceFamily, check_four_point, check_median, check_triangle
from .planar import PlanarWitness, planar_check
from .polygons import polygon_check, pruned_polygon_check
from .realization import InternalInconsistencyError, Realization
from .trees import caterpillar_check, snake_check, tree_check

CLASS_ORDER = (
    "snake",
    "caterpillar",
    "tree",
    "pruned_polygon",
    "polygon",
    "complete",
    "bipartite",
    "pruned_bipartite",
    "planar",
)

# Acceptance of the first class implies acceptance of the second.
CONTAINMENTS = (
    ("snake", "caterpillar"),
    ("caterpillar", "tree"),
    ("tree", "planar"),
    ("pruned_polygon", "polygon"),
    ("polygon", "planar"),
    ("pruned_bipartite", "bipartite"),
)


@dataclass
class ClassificationReport:
    """Per-class verdicts with reconstructions, plus recovered side sets and
    any planarity witness."""

    verdicts: Dict[str, Realization]
    condition_summary: Dict[str, bool]
    bipartition: Optional[Bipartition] = None
    planar_witness: Optional[PlanarWitness] = None

    def accepted_classes(self):
        return [c for c in CLASS_ORDER if self.verdicts[c].accepted]

    def lattice_violations(self):
        """Containment pairs (sub, super) where sub accepted but super rejected."""
        return [
            (sub, sup)
            for sub, sup in CONTAINMENTS
            if self.verdicts[sub].accepted and not self.verdicts[sup].accepted
        ]

    def to_dict(self) -> dict:
        from .serialize import graph_to_dict

        out: dict = {"classes": {}, "conditions": self.condition_summary}
        for name, r in self.verdicts.items():
            entry: dict = {"accepted": r.accepted}
            if r.reason:
                entry["reason"] = r.reason
            if r.graph is not None:
                entry["realization"] = graph_to_dict(r.graph)
            out["classes"][name] = entry
        if self.bipartition is not None:
            out["bipartition"] = {
                "x_side": sorted(self.bipartition.x_side),
                "y_side": sorted(self.bipartition.y_side),
            }
        if self.planar_witness is not None:
            w = self.planar_witness
            out["planar_witness"] = {
                "kind": w.kind,
                "hubs": list(w.hubs) if w.kind == "K5" else [list(w.hubs[0]), list(w.hubs[1])],
                "chains": {
                    f"{min(p)},{max(p)}": list(c) for p, c in w.chains.items()
                },
            }
        return out


def _run(check: Callable[[DistanceFamily], Realization], family: DistanceFamily) -> Realization:
    try:
        return check(family)
    except InternalInconsistencyError as exc:
        return Realization.rejected(f"internal inconsistency: {exc}")


def classify(family: DistanceFamily) -> ClassificationReport:
    """Run the condition checks and every recognizer; individual recognizer
    errors become per-class diagnostics rather than failures."""
    conditions = {
        "triangle": check_triangle(family, max_violations=1).holds,
        "four_point": check_four_point(family, max_violations=1).holds,
        "median": check_median(family, max_violations=1).holds,
    }
    verdicts: Dict[str, Realization] = {
        "snake": _run(snake_check, family),
        "caterpillar": _run(caterpillar_check, family),
        "tree": _run(tree_check, family),
        "pruned_polygon": _run(pruned_polygon_check, family),
        "polygon": _run(polygon_check, family),
        "complete": _run(complete_check, family),
        "pruned_bipartite": _run(cobigraph_check, family),
        "planar": _run(planar_check, family),
    }
    bp: Optional[Bipartition] = None
    if conditions["triangle"]:
        try:
            bigraph_result, bp = _bigraph(family)
        except InternalInconsistencyError as exc:
            bigraph_result = Realization.rejected(f"internal inconsistency: {exc}")
    else:
        bigraph_result = Realization.rejected("triangle inequalities fail")
    verdicts["bipartite"] = bigraph_result

    planar_witness = verdicts["planar"].witness
    return ClassificationReport(verdicts, conditions, bp, planar_witness)
