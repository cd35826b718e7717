"""Overlap thresholds, the order-n adjacency graph, and the set verdict.

The threshold sequence d_n = n/(n+2) separates ray pairs that can be
forbidden from joint value 1 with 2n auxiliary bases (overlap <= d_n)
from pairs that cannot at that order.  A ray set is a fundamental KS ray
set (FKRS) at order n when the clique number M of its above-threshold
graph stays strictly below the smallest eigenvalue of its projector sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .constants import RAY_EQ_EPS, SPECTRAL_GAP_EPS, TIE_EPS
from .errors import DuplicateRayError, RangeError
from .rays import Ray, gram, projector_sum_spectrum


def delta(n: int) -> Fraction:
    """Exact overlap threshold n/(n+2) for order n >= 0.

    Satisfies the recursion delta(n+1) == (1 + delta(n)) / (3 - delta(n)).
    """
    if n < 0:
        raise RangeError(f"order must be non-negative, got {n}")
    return Fraction(n, n + 2)


def order_of(c) -> int:
    """Smallest order m whose threshold admits overlap c.

    Accepts a float (compared with TIE_EPS slack, boundary values joining
    the lower order) or an exact Fraction.

    Raises:
        RangeError: c outside [0, 1).
    """
    if isinstance(c, Fraction):
        if c < 0 or c >= 1:
            raise RangeError(f"overlap must lie in [0, 1), got {c}")
        return math.ceil(2 * c / (1 - c))
    c = float(c)
    if not math.isfinite(c) or c < 0.0 or c >= 1.0:
        raise RangeError(f"overlap must lie in [0, 1), got {c!r}")
    if c <= TIE_EPS:
        return 0
    m = math.ceil(2.0 * c / (1.0 - c))
    while m > 0 and c <= float(delta(m - 1)) + TIE_EPS:
        m -= 1
    while c > float(delta(m)) + TIE_EPS:
        m += 1
    return m


@dataclass(frozen=True)
class ThresholdGraph:
    """Adjacency over a ray set: edge iff the Gram modulus exceeds delta(n)."""

    order: int
    adjacency: np.ndarray
    rays: tuple[Ray, ...]

    def __post_init__(self):
        adj = np.asarray(self.adjacency, dtype=np.int8)
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "rays", tuple(self.rays))

    @property
    def vertex_count(self) -> int:
        return len(self.rays)

    def edge_set(self) -> set[tuple[int, int]]:
        n = self.vertex_count
        return {
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if self.adjacency[i, j]
        }


def build_threshold_graph(rays, n: int) -> ThresholdGraph:
    """Graph with an edge wherever |<r_i|r_j>| > delta(n) + TIE_EPS.

    Ties within TIE_EPS of the threshold count as below it (closed upper
    interval).  Deterministic in the input order.

    Raises:
        RangeError: fewer than two rays or negative order.
        DuplicateRayError: two rays are projectively equal (the clique
            number would be ill-defined).
    """
    rays = tuple(rays)
    if len(rays) < 2:
        raise RangeError("need at least two rays to build a graph")
    moduli = gram(rays)
    threshold = float(delta(n)) + TIE_EPS
    size = len(rays)
    adjacency = np.zeros((size, size), dtype=np.int8)
    for i in range(size):
        for j in range(i + 1, size):
            if moduli[i, j] >= 1.0 - RAY_EQ_EPS:
                raise DuplicateRayError(
                    f"rays {rays[i].label!r} and {rays[j].label!r} coincide projectively"
                )
            if moduli[i, j] > threshold:
                adjacency[i, j] = adjacency[j, i] = 1
    return ThresholdGraph(order=n, adjacency=adjacency, rays=rays)


def max_clique(graph: ThresholdGraph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique size and one witness clique.

    Branch and bound with greedy-coloring upper bounds; exact for the
    desk-scale graphs (<~ 50 vertices) this package targets.  The size is
    deterministic; the witness is whichever optimal clique the fixed
    search order reaches first.
    """
    n = graph.vertex_count
    if n == 0:
        return 0, ()
    adjacency = graph.adjacency
    neighbors = [frozenset(int(j) for j in np.nonzero(adjacency[i])[0]) for i in range(n)]
    best: list[int] = [0]

    def color_order(candidates: list[int]) -> tuple[list[int], dict[int, int]]:
        colors: dict[int, int] = {}
        order: list[int] = []
        remaining = list(candidates)
        color = 0
        while remaining:
            color += 1
            available = list(remaining)
            while available:
                v = available[0]
                colors[v] = color
                order.append(v)
                available = [u for u in available[1:] if u not in neighbors[v]]
            remaining = [u for u in remaining if u not in colors]
        return order, colors

    def expand(current: list[int], candidates: list[int]) -> None:
        if not candidates:
            if len(current) > len(best):
                best[:] = current
            return
        order, colors = color_order(candidates)
        pool = list(order)
        for v in reversed(order):
            if len(current) + colors[v] <= len(best):
                return
            pool.remove(v)
            expand(current + [v], [u for u in pool if u in neighbors[v]])

    # Any single vertex is a clique, so seed with vertex 0.
    expand([], sorted(range(n), key=lambda v: -len(neighbors[v])))
    return len(best), tuple(sorted(best))


@dataclass(frozen=True)
class FkrsVerdict:
    """Outcome of the order-n verdict for a ray set.

    is_fkrs holds iff M < lambda_min - SPECTRAL_GAP_EPS; a near-tie sets
    boundary_warning and reports a negative verdict.
    """

    M: int
    lambda_min: float
    n: int
    is_fkrs: bool
    witness_clique: tuple[int, ...]
    boundary_warning: bool = False


def fkrs_check(rays, n="auto") -> FkrsVerdict:
    """Decide whether a ray set is an order-n fundamental KS ray set.

    Args:
        rays: at least two pairwise projectively distinct rays.
        n: explicit order, or "auto" for the smallest order whose threshold
            admits the largest pairwise Gram modulus.

    Raises:
        DuplicateRayError: projectively coincident input rays.
        RangeError: invalid order or fewer than two rays.
    """
    rays = tuple(rays)
    if n == "auto":
        n = auto_order(rays)
    graph = build_threshold_graph(rays, int(n))
    clique_size, witness = max_clique(graph)
    spectrum = projector_sum_spectrum(rays)
    margin = spectrum.lambda_min - clique_size
    return FkrsVerdict(
        M=clique_size,
        lambda_min=spectrum.lambda_min,
        n=int(n),
        is_fkrs=margin > SPECTRAL_GAP_EPS,
        witness_clique=witness,
        boundary_warning=abs(margin) <= SPECTRAL_GAP_EPS,
    )


def auto_order(rays) -> int:
    """Smallest order covering every pairwise overlap of the set."""
    rays = tuple(rays)
    if len(rays) < 2:
        raise RangeError("need at least two rays")
    moduli = gram(rays)
    size = len(rays)
    largest = 0.0
    for i in range(size):
        for j in range(i + 1, size):
            if moduli[i, j] >= 1.0 - RAY_EQ_EPS:
                raise DuplicateRayError(
                    f"rays {rays[i].label!r} and {rays[j].label!r} coincide projectively"
                )
            largest = max(largest, float(moduli[i, j]))
    return order_of(largest)
