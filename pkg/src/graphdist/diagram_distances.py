"""Exact bottleneck distances between persistence diagrams.

The ground metric is the l1 plane distance by default (matching the distance
definitions used throughout this library); the sup metric is available for
stability checks. The optimum is found by searching the finite set of
candidate thresholds (all point-to-point and point-to-diagonal costs) with a
bipartite-matching feasibility test, so values are exact, never approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

import numpy as np

from .errors import EmptySet, NegativeValue

Point = Tuple[float, float]


class _Diagonal:
    def __repr__(self) -> str:
        return "DIAGONAL"


#: Sentinel marking the diagonal side of a matched pair.
DIAGONAL = _Diagonal()


class Ground:
    """Point-to-point cost plus the cost of retiring a point to the diagonal."""

    name = "custom"

    def dist(self, x: Point, y: Point) -> float:
        raise NotImplementedError

    def to_diagonal(self, x: Point) -> float:
        raise NotImplementedError


class L1Ground(Ground):
    name = "l1"

    def dist(self, x: Point, y: Point) -> float:
        return abs(x[0] - y[0]) + abs(x[1] - y[1])

    def to_diagonal(self, x: Point) -> float:
        return x[1] - x[0]


class LinfGround(Ground):
    name = "linf"

    def dist(self, x: Point, y: Point) -> float:
        return max(abs(x[0] - y[0]), abs(x[1] - y[1]))

    def to_diagonal(self, x: Point) -> float:
        return (x[1] - x[0]) / 2.0


_GROUNDS = {"l1": L1Ground(), "linf": LinfGround()}


def resolve_ground(ground: Union[str, Ground]) -> Ground:
    if isinstance(ground, Ground):
        return ground
    try:
        return _GROUNDS[ground.lower()]
    except KeyError:
        raise ValueError(f"unknown ground metric {ground!r}") from None


@dataclass(frozen=True)
class Matching:
    """Optimal bottleneck matching; diagonal-to-diagonal pairs are omitted."""

    pairs: Tuple[Tuple[object, object], ...]
    cost: float

    def to_json_list(self) -> list:
        out = []
        for left, right in self.pairs:
            out.append(
                {
                    "left": None if left is DIAGONAL else list(left),
                    "right": None if right is DIAGONAL else list(right),
                }
            )
        return out


def _as_pairs(diagram) -> List[Point]:
    if hasattr(diagram, "pairs"):
        return [tuple(p) for p in diagram.pairs()]
    return [(float(b), float(d)) for b, d in diagram]


def _kuhn_matching(
    n_left: int, n_right: int, adj: List[List[int]]
) -> Tuple[int, List[int], List[int]]:
    """Maximum bipartite matching via augmenting paths.

    Returns (size, match_of_left, match_of_right) with -1 for unmatched.
    """
    match_l = [-1] * n_left
    match_r = [-1] * n_right

    def augment(u: int, seen: List[bool]) -> bool:
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                if match_r[w] == -1 or augment(match_r[w], seen):
                    match_l[u] = w
                    match_r[w] = u
                    return True
        return False

    size = 0
    for u in range(n_left):
        if augment(u, [False] * n_right):
            size += 1
    return size, match_l, match_r


def _feasible(
    pts1: List[Point],
    pts2: List[Point],
    gr: Ground,
    lam: float,
    want_matching: bool,
):
    """Perfect matching test at threshold lam on the doubled bipartite graph.

    Left side: pts1 then a diagonal copy per point of pts2; right side: pts2
    then a diagonal copy per point of pts1. A point may retire to its own
    diagonal copy when its diagonal cost is within lam; diagonal copies pair
    with each other for free.
    """
    n1, n2 = len(pts1), len(pts2)
    total = n1 + n2
    adj: List[List[int]] = [[] for _ in range(total)]
    for i, x in enumerate(pts1):
        row = adj[i]
        for j, y in enumerate(pts2):
            if gr.dist(x, y) <= lam:
                row.append(j)
        if gr.to_diagonal(x) <= lam:
            row.append(n2 + i)
    for j, y in enumerate(pts2):
        row = adj[n1 + j]
        if gr.to_diagonal(y) <= lam:
            row.append(j)
        row.extend(range(n2, n2 + n1))
    size, match_l, _ = _kuhn_matching(total, total, adj)
    ok = size == total
    if not want_matching or not ok:
        return ok, None
    pairs: List[Tuple[object, object]] = []
    for i, x in enumerate(pts1):
        w = match_l[i]
        pairs.append((x, pts2[w]) if w < n2 else (x, DIAGONAL))
    for j, y in enumerate(pts2):
        w = match_l[n1 + j]
        if w < n2:
            pairs.append((DIAGONAL, y))
    return ok, pairs


def _bottleneck_value(
    pts1: List[Point], pts2: List[Point], gr: Ground
) -> Tuple[float, List[float]]:
    candidates = {0.0}
    for x in pts1:
        candidates.add(gr.to_diagonal(x))
        for y in pts2:
            candidates.add(gr.dist(x, y))
    for y in pts2:
        candidates.add(gr.to_diagonal(y))
    ordered = sorted(candidates)
    lo, hi = 0, len(ordered) - 1
    # ordered[hi] is always feasible: everything to the diagonal
    while lo < hi:
        mid = (lo + hi) // 2
        ok, _ = _feasible(pts1, pts2, gr, ordered[mid], False)
        if ok:
            hi = mid
        else:
            lo = mid + 1
    return ordered[lo], ordered


def bottleneck(
    d1, d2, ground: Union[str, Ground] = "l1"
) -> Tuple[float, Matching]:
    """Exact bottleneck distance and an optimal matching between two diagrams."""
    gr = resolve_ground(ground)
    pts1, pts2 = _as_pairs(d1), _as_pairs(d2)
    value, _ = _bottleneck_value(pts1, pts2, gr)
    _, pairs = _feasible(pts1, pts2, gr, value, True)
    return value, Matching(tuple(pairs), value)


def bottleneck_value(d1, d2, ground: Union[str, Ground] = "l1") -> float:
    gr = resolve_ground(ground)
    value, _ = _bottleneck_value(_as_pairs(d1), _as_pairs(d2), gr)
    return value


def yaxis_bottleneck(a: Sequence[float], b: Sequence[float]) -> float:
    """Closed-form bottleneck between y-axis diagrams {(0, a_i)} and {(0, b_i)}.

    The shorter multiset is padded with zeros, both are sorted, and the answer
    is the largest aligned gap.
    """
    av, bv = [float(x) for x in a], [float(x) for x in b]
    for v in av + bv:
        if v < 0.0:
            raise NegativeValue(f"negative value {v!r}")
    n = max(len(av), len(bv))
    av += [0.0] * (n - len(av))
    bv += [0.0] * (n - len(bv))
    av.sort()
    bv.sort()
    return max((abs(x - y) for x, y in zip(av, bv)), default=0.0)


def _diag_profile(pts: List[Point], gr: Ground, width: int) -> List[float]:
    prof = sorted((gr.to_diagonal(p) for p in pts), reverse=True)
    prof += [0.0] * (width - len(prof))
    return prof


def _directed_hausdorff(
    from_diags: List[List[Point]],
    to_diags: List[List[Point]],
    gr: Ground,
    prunable: bool,
) -> float:
    """sup over from_diags of inf over to_diags of the bottleneck distance.

    When the ground is one of the plane metrics, aligned diagonal-cost
    profiles give a lower bound on every pairwise bottleneck (the y-axis
    closed form applied to the 1-Lipschitz diagonal-cost functional), which
    prunes most exact evaluations without changing the value.
    """
    if not prunable:
        best_overall = 0.0
        for da in from_diags:
            m = min(_bottleneck_value(da, db, gr)[0] for db in to_diags)
            best_overall = max(best_overall, m)
        return best_overall

    width = max(
        max((len(d) for d in from_diags), default=0),
        max((len(d) for d in to_diags), default=0),
    )
    width = max(width, 1)
    pa = np.array([_diag_profile(d, gr, width) for d in from_diags])
    pb = np.array([_diag_profile(d, gr, width) for d in to_diags])
    lb = np.abs(pa[:, None, :] - pb[None, :, :]).max(axis=2)
    scan_order = np.argsort(lb, axis=1)
    row_order = np.argsort(-lb.min(axis=1), kind="stable")

    answer = 0.0
    for i in row_order:
        da = from_diags[i]
        best = math.inf
        for j in scan_order[i]:
            if best <= answer or lb[i, j] >= best:
                break
            value, _ = _bottleneck_value(da, to_diags[j], gr)
            if value < best:
                best = value
        if math.isfinite(best) and best > answer:
            answer = best
    return answer


def hausdorff_bottleneck(
    s1: Sequence, s2: Sequence, ground: Union[str, Ground] = "l1"
) -> float:
    """Hausdorff distance between two finite sets of diagrams under bottleneck."""
    if not s1 or not s2:
        raise EmptySet("hausdorff_bottleneck needs nonempty diagram sets")
    gr = resolve_ground(ground)
    a = [_as_pairs(d) for d in s1]
    b = [_as_pairs(d) for d in s2]
    prunable = isinstance(gr, (L1Ground, LinfGround))
    return max(
        _directed_hausdorff(a, b, gr, prunable),
        _directed_hausdorff(b, a, gr, prunable),
    )


def bottleneck_monotonicity_check(
    p, q, ground_lo: Union[str, Ground], ground_hi: Union[str, Ground]
) -> bool:
    """True iff the bottleneck under a pointwise-smaller ground stays smaller.

    Callers guarantee ground_lo <= ground_hi on every point pair; the check
    realizes the matching-exchange argument computationally.
    """
    lo = bottleneck_value(p, q, ground_lo)
    hi = bottleneck_value(p, q, ground_hi)
    return lo <= hi + 1e-12
