"""Shortest system of loops: a minimum-weight homology basis of the graph.

Candidates are Horton cycles (fundamental cycles of every vertex's shortest
path tree, which automatically includes every self-loop); a greedy pass over
the two-element field keeps the independent ones, yielding the
lexicographically smallest length-sequence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Tuple

from .errors import NotAClosedWalk
from .geodesics import GeodesicField, shortest_path_tree
from .metric_graph import GraphPoint, MetricGraph

Loop = Tuple[Tuple[str, int], ...]  # (edge id, +1 for u->v, -1 for v->u)


@dataclass(frozen=True)
class LoopSystem:
    """Ordered loops with nondecreasing lengths 2s_1 <= ... <= 2s_n."""

    loops: Tuple[Loop, ...]
    lengths: Tuple[float, ...]

    def __len__(self) -> int:
        return len(self.loops)

    @property
    def half_lengths(self) -> Tuple[float, ...]:
        return tuple(l / 2.0 for l in self.lengths)

    def edge_sets(self) -> Tuple[FrozenSet[str], ...]:
        return tuple(frozenset(eid for eid, _ in loop) for loop in self.loops)

    def to_json_list(self) -> list:
        return [
            {
                "edges": [{"id": eid, "dir": d} for eid, d in loop],
                "length": length,
            }
            for loop, length in zip(self.loops, self.lengths)
        ]


def first_betti(g: MetricGraph) -> int:
    """Rank of the first homology of a connected graph: |E| - |V| + 1."""
    return len(g.edges) - len(g.vertices) + 1


def _walk_of_cycle(g: MetricGraph, edge_ids: FrozenSet[str]) -> Loop:
    """Orient a simple cycle (given as an edge set) into a closed walk.

    Starts at the lexicographically smallest edge id for determinism.
    """
    start = g.edge_by_id[min(edge_ids)]
    if start.is_self_loop:
        rest = edge_ids - {start.id}
        walk = [(start.id, 1)]
        # a simple cycle containing a self-loop is that loop alone
        if rest:
            raise NotAClosedWalk(f"edge set {sorted(edge_ids)} is not a simple cycle")
        return tuple(walk)
    walk = [(start.id, 1)]
    first, current = start.u, start.v
    unused = set(edge_ids) - {start.id}
    while current != first:
        nxt = None
        for e in g.adjacency[current]:
            if e.id in unused:
                nxt = e
                break
        if nxt is None:
            raise NotAClosedWalk(f"edge set {sorted(edge_ids)} is not a simple cycle")
        unused.discard(nxt.id)
        walk.append((nxt.id, 1 if nxt.u == current else -1))
        current = nxt.other(current)
    if unused:
        raise NotAClosedWalk(f"edge set {sorted(edge_ids)} is not a simple cycle")
    return tuple(walk)


def shortest_loop_system(g: MetricGraph) -> LoopSystem:
    """Compute the minimum-weight cycle basis; trees give the empty system."""
    n = first_betti(g)
    if n <= 0:
        return LoopSystem((), ())

    candidates: Dict[FrozenSet[str], float] = {}
    for root in g.vertices:
        spt = shortest_path_tree(g, GraphPoint.at_vertex(root))
        path_edges: Dict[str, FrozenSet[str]] = {spt.root_vertex: frozenset()}

        def path_of(x: str) -> FrozenSet[str]:
            if x in path_edges:
                return path_edges[x]
            chain = []
            y = x
            while y not in path_edges:
                chain.append(y)
                eid = spt.parent_edge[y]
                y = g.edge_by_id[eid].other(y)
            acc = set(path_edges[y])
            for z in reversed(chain):
                eid = spt.parent_edge[z]
                acc.symmetric_difference_update((eid,))
                path_edges[z] = frozenset(acc)
            return path_edges[x]

        for e in g.edges:
            cyc = path_of(e.u) ^ path_of(e.v) ^ {e.id}
            if not cyc:
                continue
            if cyc not in candidates:
                candidates[cyc] = math.fsum(g.edge_by_id[i].length for i in cyc)

    edge_index = {e.id: i for i, e in enumerate(g.edges)}
    ordered = sorted(
        candidates.items(), key=lambda kv: (kv[1], tuple(sorted(kv[0])))
    )
    pivots: Dict[int, int] = {}
    loops: List[Loop] = []
    lengths: List[float] = []
    for cyc, length in ordered:
        mask = 0
        for eid in cyc:
            mask |= 1 << edge_index[eid]
        r = mask
        while r:
            b = r.bit_length() - 1
            if b in pivots:
                r ^= pivots[b]
            else:
                break
        if r == 0:
            continue
        pivots[r.bit_length() - 1] = r
        loops.append(_walk_of_cycle(g, cyc))
        lengths.append(length)
        if len(loops) == n:
            break
    return LoopSystem(tuple(loops), tuple(lengths))


def _cycle_edge_ids(cycle) -> List[str]:
    ids = []
    for item in cycle:
        if isinstance(item, str):
            ids.append(item)
        else:
            ids.append(item[0])
    return ids


def cycle_metrics(
    g: MetricGraph, cycle: Sequence, field: GeodesicField
) -> Tuple[float, float, float, float]:
    """(length, highest value, lowest value, height) of `field` on a closed walk.

    `cycle` is a sequence of edge ids of `g` (orientations optional); the
    field may live on a promoted/subdivided copy of `g`, mapped back through
    its `edge_parent` table. Interior maxima count toward the highest value.
    """
    ids = _cycle_edge_ids(cycle)
    _check_closed_walk(g, ids)
    id_set = set(ids)
    children = [
        e.id for e in field.graph.edges if field.edge_parent[e.id] in id_set
    ]
    length = math.fsum(g.edge_by_id[i].length for i in ids)
    highest = max(field.edge_max(c) for c in children)
    lowest = min(field.edge_min(c) for c in children)
    return length, highest, lowest, highest - lowest


def _check_closed_walk(g: MetricGraph, edge_ids: Sequence[str]) -> None:
    if not edge_ids:
        raise NotAClosedWalk("empty edge sequence")
    degree: Dict[str, int] = {}
    for eid in edge_ids:
        e = g.edge_by_id.get(eid)
        if e is None:
            raise NotAClosedWalk(f"unknown edge {eid!r}")
        if e.is_self_loop:
            degree[e.u] = degree.get(e.u, 0) + 2
        else:
            degree[e.u] = degree.get(e.u, 0) + 1
            degree[e.v] = degree.get(e.v, 0) + 1
    if any(d % 2 for d in degree.values()):
        raise NotAClosedWalk("odd vertex degree; not a closed walk")
    # connectivity of the traversed subgraph
    used = set(edge_ids)
    start = next(iter(degree))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for e in g.adjacency[x]:
            if e.id in used:
                y = e.other(x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    if seen != set(degree):
        raise NotAClosedWalk("edge set is not connected; not a closed walk")
