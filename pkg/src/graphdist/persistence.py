"""Extended persistence of geodesic distance functions, dimension 1.

The filtration subdivides every edge at its interior maximum so the function
is monotone per edge, runs the ascending lower-star pass, then cones the
complex and adds the descending upper-star pass. Full boundary-matrix
reduction over the two-element field extracts the pairs; the 1-dimensional
extended pairs are the ones born at an ascending edge and killed by a cone
triangle. Each output point is normalized to (low, high) and carries the
input edge that holds its local maximum.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .geodesics import dijkstra, geodesic_distance, geodesic_field
from .metric_graph import GraphPoint, MetricGraph, subdivide


@dataclass(frozen=True, order=True)
class DiagramPoint:
    birth: float
    death: float
    edge: Optional[str] = None
    paired_vertex: Optional[str] = None

    @property
    def persistence(self) -> float:
        return self.death - self.birth

    def pair(self) -> Tuple[float, float]:
        return (self.birth, self.death)


@dataclass(frozen=True)
class Diagram:
    """Multiset of 1-dimensional persistence points with provenance."""

    points: Tuple[DiagramPoint, ...]

    @staticmethod
    def of(points: Sequence[DiagramPoint]) -> "Diagram":
        return Diagram(
            tuple(
                sorted(
                    points,
                    key=lambda p: (p.birth, p.death, p.edge or "", p.paired_vertex or ""),
                )
            )
        )

    def __len__(self) -> int:
        return len(self.points)

    def pairs(self) -> Tuple[Tuple[float, float], ...]:
        return tuple(p.pair() for p in self.points)

    def persistences(self) -> Tuple[float, ...]:
        return tuple(p.persistence for p in self.points)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["birth", "death", "edge_id"])
        for p in self.points:
            writer.writerow([f"{p.birth:.12g}", f"{p.death:.12g}", p.edge or ""])
        return buf.getvalue()

    def to_json_list(self) -> list:
        return [
            {
                "birth": p.birth,
                "death": p.death,
                "edge_id": p.edge,
                "paired_vertex": p.paired_vertex,
            }
            for p in self.points
        ]


@dataclass(frozen=True)
class FilteredComplex:
    """Ascending + coned descending filtration of a promoted, subdivided graph.

    Simplices are ('v', vertex_id) / ('e', edge_id) in the ascending block and
    ('cone_v', ''), ('cone_e', vertex_id), ('cone_t', edge_id) in the
    descending block. Both blocks are totally ordered with faces first and
    ties broken by id.
    """

    graph: MetricGraph
    base_vertex: str
    values: Dict[str, float]
    edge_parent: Dict[str, str]
    ascending: Tuple[Tuple[str, str], ...]
    descending: Tuple[Tuple[str, str], ...]

    def simplex_value(self, simplex: Tuple[str, str]) -> float:
        kind, ref = simplex
        if kind == "v" or kind == "cone_e":
            return self.values[ref]
        if kind == "e":
            e = self.graph.edge_by_id[ref]
            return max(self.values[e.u], self.values[e.v])
        if kind == "cone_t":
            e = self.graph.edge_by_id[ref]
            return min(self.values[e.u], self.values[e.v])
        return 0.0  # cone vertex


def build_filtration(g: MetricGraph, base: GraphPoint) -> FilteredComplex:
    """Promote the base, subdivide at interior maxima, order the simplices."""
    field = geodesic_field(g, base)
    gp = field.graph
    cuts = [
        GraphPoint.on_edge(eid, m[0])
        for eid, m in field.interior_maxima.items()
        if m is not None
    ]
    g2, _pmap, parent1 = subdivide(gp, cuts)
    edge_parent = {eid: field.edge_parent[parent1[eid]] for eid in parent1}
    values = dijkstra(g2, field.base_vertex)

    ascending: List[Tuple[str, str]] = [("v", v) for v in g2.vertices]
    ascending += [("e", e.id) for e in g2.edges]
    asc_key = lambda s: (
        (values[s[1]], 0, s[1])
        if s[0] == "v"
        else (
            max(values[g2.edge_by_id[s[1]].u], values[g2.edge_by_id[s[1]].v]),
            1,
            s[1],
        )
    )
    ascending.sort(key=asc_key)

    descending: List[Tuple[str, str]] = [("cone_e", v) for v in g2.vertices]
    descending += [("cone_t", e.id) for e in g2.edges]
    desc_key = lambda s: (
        (-values[s[1]], 1, s[1])
        if s[0] == "cone_e"
        else (
            -min(values[g2.edge_by_id[s[1]].u], values[g2.edge_by_id[s[1]].v]),
            2,
            s[1],
        )
    )
    descending.sort(key=desc_key)

    return FilteredComplex(
        graph=g2,
        base_vertex=field.base_vertex,
        values=values,
        edge_parent=edge_parent,
        ascending=tuple(ascending),
        descending=tuple(descending),
    )


def _reduce_columns(columns: List[int]) -> Dict[int, int]:
    """Left-to-right column reduction over GF(2); returns {birth: death}."""
    lows: Dict[int, int] = {}
    pairs: Dict[int, int] = {}
    for j in range(len(columns)):
        col = columns[j]
        while col:
            low = col.bit_length() - 1
            k = lows.get(low)
            if k is None:
                break
            col ^= columns[k]
        columns[j] = col
        if col:
            low = col.bit_length() - 1
            lows[low] = j
            pairs[low] = j
    return pairs


def extended_persistence_1d(g: MetricGraph, base: GraphPoint) -> Diagram:
    """1-dimensional extended persistence diagram of the distance-from-base map."""
    fc = build_filtration(g, base)
    g2 = fc.graph
    order: List[Tuple[str, str]] = list(fc.ascending)
    order.append(("cone_v", ""))
    order.extend(fc.descending)
    index = {s: i for i, s in enumerate(order)}

    columns: List[int] = []
    for s in order:
        kind, ref = s
        if kind in ("v", "cone_v"):
            columns.append(0)
        elif kind == "e":
            e = g2.edge_by_id[ref]
            columns.append((1 << index[("v", e.u)]) | (1 << index[("v", e.v)]))
        elif kind == "cone_e":
            columns.append((1 << index[("cone_v", "")]) | (1 << index[("v", ref)]))
        else:  # cone triangle over an edge
            e = g2.edge_by_id[ref]
            columns.append(
                (1 << index[("e", ref)])
                | (1 << index[("cone_e", e.u)])
                | (1 << index[("cone_e", e.v)])
            )

    pairs = _reduce_columns(columns)

    points: List[DiagramPoint] = []
    for i, j in pairs.items():
        birth_s, death_s = order[i], order[j]
        if birth_s[0] != "e" or death_s[0] != "cone_t":
            continue
        asc_value = fc.simplex_value(birth_s)
        desc_value = fc.simplex_value(death_s)
        lo, hi = min(asc_value, desc_value), max(asc_value, desc_value)
        e_death = g2.edge_by_id[death_s[1]]
        if fc.values[e_death.u] <= fc.values[e_death.v]:
            paired = e_death.u
        else:
            paired = e_death.v
        points.append(
            DiagramPoint(
                birth=lo,
                death=hi,
                edge=fc.edge_parent[birth_s[1]],
                paired_vertex=paired,
            )
        )
    return Diagram.of(points)


def tree_of_loops_diagram(spec, base: GraphPoint) -> Diagram:
    """Closed-form diagram for a tree of loops: one point (p_i, p_i + t_i) per loop.

    p_i is the geodesic distance from the base to the loop (zero on the loop
    itself), t_i half the loop length. Oracle counterpart of
    extended_persistence_1d on this family.
    """
    from .generators import tree_of_loops_parts  # deferred; generators has no deps on us

    g, loops = tree_of_loops_parts(spec)
    b = base.normalized(g)
    points = []
    for edge_id, junction, length in loops:
        t = length / 2.0
        if not b.is_vertex and b.edge == edge_id:
            p = 0.0
        else:
            p = geodesic_distance(g, b, GraphPoint.at_vertex(junction))
        points.append(DiagramPoint(birth=p, death=p + t, edge=edge_id))
    return Diagram.of(points)
