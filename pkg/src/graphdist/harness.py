"""Seeded instance generation and the inequality verification loop."""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from .cycles import shortest_loop_system
from .errors import GraphError
from .feasibility import (
    compare_arbitrary,
    corrupted,
    verify_bouquet_inequality,
    verify_tree_of_loops_inequality,
    with_identity,
    Report,
)
from .generators import TreeOfLoopsSpec, bouquet, random_metric_graph, tree_of_loops
from .geodesics import shortest_path_tree
from .metric_graph import GraphPoint, MetricGraph

FAMILIES = ("bouquet", "tree-of-loops", "trees", "arbitrary")


def _instance_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def random_bouquet(rng: random.Random) -> MetricGraph:
    k = rng.randint(1, 3)
    return bouquet([rng.uniform(1.5, 3.5) for _ in range(k)])


def random_tree_of_loops_spec(rng: random.Random) -> TreeOfLoopsSpec:
    n_nodes = rng.randint(1, 3)
    tree_edges = tuple(
        (rng.randrange(i), i, rng.uniform(0.8, 1.5)) for i in range(1, n_nodes)
    )
    loops = [
        tuple(rng.uniform(1.5, 3.5) for _ in range(rng.randint(0, 2)))
        for _ in range(n_nodes)
    ]
    if not any(loops):
        loops[0] = (rng.uniform(1.5, 3.5),)
    return TreeOfLoopsSpec(loops_per_node=tuple(loops), tree_edges=tree_edges)


def random_arbitrary_graph(
    rng: random.Random, min_extra: int = 1, max_extra: int = 2
) -> MetricGraph:
    n = rng.randint(3, 5)
    extra = rng.randint(min_extra, max_extra)
    return random_metric_graph(
        n, n - 1 + extra, (1.0, 2.0), seed=rng.randrange(2**32), generic_epsilon=1e-3
    )


def random_base_point(rng: random.Random, g: MetricGraph) -> GraphPoint:
    choices = len(g.vertices) + len(g.edges)
    pick = rng.randrange(choices)
    if pick < len(g.vertices):
        return GraphPoint.at_vertex(g.vertices[pick])
    e = g.edges[pick - len(g.vertices)]
    return GraphPoint.on_edge(e.id, rng.uniform(0.05, 0.95) * e.length)


def random_generic_instance(
    seed: int, min_extra: int = 1, max_extra: int = 3
) -> Tuple[MetricGraph, GraphPoint]:
    """A connected generic (graph, base) pair; reseeds until ties disappear."""
    for attempt in range(64):
        rng = random.Random(_instance_seed(seed, attempt * 7919))
        g = random_arbitrary_graph(rng, min_extra, max_extra)
        base = random_base_point(rng, g)
        if shortest_path_tree(g, base).generic:
            return g, base
    raise GraphError(f"no generic instance found for seed {seed}")


def pick_delta(graphs: Tuple[MetricGraph, ...], fraction: float = 0.05) -> float:
    """fraction times the smallest half loop length, over every graph with loops."""
    half_lengths = [
        h for g in graphs for h in shortest_loop_system(g).half_lengths
    ]
    if half_lengths:
        return fraction * min(half_lengths)
    return fraction * min(e.length for g in graphs for e in g.edges)


def _run_one(
    family: str, seed: int, index: int, delta: Optional[float], corrupt_dic: float
) -> Report:
    iseed = _instance_seed(seed, index)
    rng = random.Random(iseed)
    if family == "bouquet":
        g1 = random_bouquet(rng)
        g2 = random_arbitrary_graph(rng)
        d = delta if delta is not None else pick_delta((g1, g2))
        report = verify_bouquet_inequality(g1, g2, d)
    elif family == "tree-of-loops":
        g1 = tree_of_loops(random_tree_of_loops_spec(rng))
        g2 = tree_of_loops(random_tree_of_loops_spec(rng))
        d = delta if delta is not None else pick_delta((g1, g2))
        report = verify_tree_of_loops_inequality(g1, g2, d)
    elif family == "trees":
        # metric trees are trees of loops without loops; their Cech distance
        # is always 0
        n1, n2 = rng.randint(3, 6), rng.randint(3, 6)
        g1 = random_metric_graph(n1, n1 - 1, (0.5, 2.0), seed=rng.randrange(2**32))
        g2 = random_metric_graph(n2, n2 - 1, (0.5, 2.0), seed=rng.randrange(2**32))
        d = delta if delta is not None else pick_delta((g1, g2))
        report = verify_tree_of_loops_inequality(g1, g2, d)
    elif family == "arbitrary":
        g1 = random_arbitrary_graph(rng, min_extra=0)
        g2 = random_arbitrary_graph(rng, min_extra=0)
        d = delta if delta is not None else pick_delta((g1, g2))
        report = compare_arbitrary(g1, g2, d)
    else:
        raise GraphError(f"unknown family {family!r}; expected one of {FAMILIES}")
    report = with_identity(report, family, iseed)
    if corrupt_dic:
        report = corrupted(report, corrupt_dic)
    return report


def run_verification(
    family: str,
    n_instances: int,
    seed: int,
    delta: Optional[float] = None,
    jobs: int = 1,
    corrupt_dic: float = 0.0,
) -> List[Report]:
    """Run seeded instances; reports come back ordered by instance regardless
    of scheduling."""
    if family == "bouquet-vs-arbitrary":
        family = "bouquet"
    indices = range(n_instances)
    if jobs <= 1:
        return [_run_one(family, seed, i, delta, corrupt_dic) for i in indices]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(
            pool.map(lambda i: _run_one(family, seed, i, delta, corrupt_dic), indices)
        )
