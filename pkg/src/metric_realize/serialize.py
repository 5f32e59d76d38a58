"""File formats: distance-matrix CSV, graph JSON, and DOT export.

Weights travel as strings ("7", "4.5", or "7/3") so exact rationals survive
round trips; binary floats never hit the wire in exact mode.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List

from .comparison import Cmp, EXACT, Number, as_exact_number
from .family import DistanceFamily, FamilyError
from .graph import GraphError, WeightedGraph


class ParseError(ValueError):
    pass


def parse_number(token: str, cmp: Cmp = EXACT) -> Number:
    """Parse "7", "4.5", or "7/3"; exact mode yields int/Fraction, tolerance
    mode yields float."""
    token = token.strip()
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed number {token!r}") from exc
    if cmp.exact:
        return as_exact_number(value)
    return float(value)


def format_number(value: Number) -> str:
    """Decimal string when exact (finite expansion or float), else "p/q"."""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    frac = Fraction(value)
    if frac < 0:
        return "-" + format_number(-frac)
    if frac.denominator == 1:
        return str(frac.numerator)
    den = frac.denominator
    twos = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    fives = 0
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den == 1:
        digits = max(twos, fives)
        scaled = frac.numerator * 10**digits // frac.denominator
        text = f"{scaled:0{digits + 1}d}"
        return f"{text[:-digits]}.{text[-digits:]}"
    return f"{frac.numerator}/{frac.denominator}"


def parse_family_csv(text: str, cmp: Cmp = EXACT) -> DistanceFamily:
    """Parse an n x n matrix document: n comma-separated lines, zero diagonal,
    symmetric positive off-diagonals.  Errors name the offending cell."""
    rows = [line for line in (l.strip() for l in text.splitlines()) if line]
    n = len(rows)
    if n < 2:
        raise ParseError(f"matrix needs at least 2 rows, got {n}")
    matrix: List[List[Number]] = []
    for i, row in enumerate(rows, start=1):
        cells = [c for c in row.split(",")]
        if len(cells) != n:
            raise ParseError(f"row {i} has {len(cells)} cells, expected {n}")
        matrix.append([parse_number(c, cmp) for c in cells])
    values: Dict[tuple, Number] = {}
    for i in range(1, n + 1):
        if not cmp.eq(matrix[i - 1][i - 1], 0):
            raise ParseError(f"nonzero diagonal at ({i},{i})")
        for j in range(i + 1, n + 1):
            a, b = matrix[i - 1][j - 1], matrix[j - 1][i - 1]
            if not cmp.eq(a, b):
                raise ParseError(f"asymmetric at ({i},{j})")
            if not a > 0:
                raise ParseError(f"nonpositive 2-weight at ({i},{j})")
            values[(i, j)] = a
    try:
        return DistanceFamily(n, values, cmp)
    except FamilyError as exc:
        raise ParseError(str(exc)) from exc


def family_to_csv(family: DistanceFamily) -> str:
    lines = []
    for i in range(1, family.n + 1):
        lines.append(",".join(format_number(family.d(i, j)) for j in range(1, family.n + 1)))
    return "\n".join(lines) + "\n"


def graph_to_dict(graph: WeightedGraph) -> dict:
    return {
        "n": graph.n,
        "edges": [{"u": u, "v": v, "w": format_number(w)} for u, v, w in graph.edges],
    }


def graph_to_json(graph: WeightedGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2) + "\n"


def graph_from_json(text: str, cmp: Cmp = EXACT) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        n = int(doc["n"])
        edges = [
            (int(e["u"]), int(e["v"]), parse_number(str(e["w"]), cmp))
            for e in doc["edges"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph document: {exc}") from exc
    try:
        return WeightedGraph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def graph_to_dot(graph: WeightedGraph) -> str:
    lines = ["graph realization {"]
    for v in range(1, graph.n + 1):
        lines.append(f"  {v};")
    for u, v, w in graph.edges:
        lines.append(f'  {u} -- {v} [label="{format_number(w)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
