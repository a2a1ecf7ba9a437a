"""The two graph distances: intrinsic Cech (closed form) and persistence
distortion (base-point sampling with a certified error bound)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from .cycles import shortest_loop_system
from .diagram_distances import Ground, hausdorff_bottleneck
from .errors import GraphFormatError
from .metric_graph import GraphPoint, MetricGraph
from .persistence import Diagram, DiagramPoint, extended_persistence_1d


def intrinsic_cech_diagram(g: MetricGraph) -> Diagram:
    """{(0, s_i / 2)} where 2s_1 <= ... <= 2s_n are the shortest-loop lengths."""
    system = shortest_loop_system(g)
    return Diagram.of(
        [DiagramPoint(0.0, s / 2.0) for s in system.half_lengths]
    )


def intrinsic_cech_distance(g1: MetricGraph, g2: MetricGraph) -> float:
    """max_i |s_i - t_i| / 2 over the zero-padded, sorted half-length sequences.

    Equals the l1 bottleneck between the two intrinsic Cech diagrams; in
    particular it is 0 for any two trees.
    """
    s = list(shortest_loop_system(g1).half_lengths)
    t = list(shortest_loop_system(g2).half_lengths)
    n = max(len(s), len(t))
    s = [0.0] * (n - len(s)) + s
    t = [0.0] * (n - len(t)) + t
    return max((abs(a - b) / 2.0 for a, b in zip(s, t)), default=0.0)


@dataclass(frozen=True)
class SampledPhi:
    """Diagrams of the distance function from a delta-net of base points.

    Every vertex is a sample and consecutive samples along an edge are at
    most delta apart.
    """

    samples: Tuple[Tuple[GraphPoint, Diagram], ...]
    delta: float

    def diagrams(self) -> List[Diagram]:
        return [d for _, d in self.samples]


def sample_base_points(g: MetricGraph, delta: float) -> List[GraphPoint]:
    if not (delta > 0):
        raise GraphFormatError(f"delta must be positive, got {delta!r}")
    points = [GraphPoint.at_vertex(v) for v in g.vertices]
    for e in g.edges:
        k = 1
        while True:
            off = k * delta
            if off >= e.length - 1e-9 * e.length:
                break
            points.append(GraphPoint.on_edge(e.id, off))
            k += 1
    return points


def sample_phi(g: MetricGraph, delta: float) -> SampledPhi:
    samples = tuple(
        (p, extended_persistence_1d(g, p)) for p in sample_base_points(g, delta)
    )
    return SampledPhi(samples=samples, delta=float(delta))


def persistence_distortion_from_samples(
    phi1: SampledPhi, phi2: SampledPhi, ground: Union[str, Ground] = "l1"
) -> Tuple[float, float]:
    estimate = hausdorff_bottleneck(phi1.diagrams(), phi2.diagrams(), ground)
    return estimate, 2.0 * max(phi1.delta, phi2.delta)


def persistence_distortion(
    g1: MetricGraph,
    g2: MetricGraph,
    delta: float,
    ground: Union[str, Ground] = "l1",
) -> Tuple[float, float]:
    """(estimate, error bound) for the persistence distortion distance.

    The estimate is the Hausdorff-of-bottlenecks over sampled base points;
    the true value lies within 2*delta of it (the diagram map is 1-Lipschitz
    in the sup metric and l1 <= 2*sup, and no realization point is farther
    than delta from a sample).
    """
    return persistence_distortion_from_samples(
        sample_phi(g1, delta), sample_phi(g2, delta), ground
    )
