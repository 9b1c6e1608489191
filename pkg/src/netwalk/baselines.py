"""Comparison feature extractors: structural measures and the deterministic tourist walk."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.sparse import csgraph

from .graph import Graph, largest_connected_component

STRUCTURAL_NAMES = ("avg_degree", "hier_degree_l1", "hier_degree_l2",
                    "clustering", "avg_shortest_path", "assortativity")


class StructuralFeatures(NamedTuple):
    avg_degree: float
    hier_degree_l1: float
    hier_degree_l2: float
    clustering: float
    avg_shortest_path: float
    assortativity: float


def _distances(g):
    d = csgraph.shortest_path(g.to_scipy(), method="D", directed=False, unweighted=True)
    return d


def transitivity(g: Graph) -> float:
    a = g.to_scipy().astype(np.int64)
    deg = np.asarray(a.sum(axis=1)).ravel()
    triples = float(np.sum(deg * (deg - 1)))  # ordered 2-paths, 2x the connected triples
    if triples == 0:
        return 0.0
    closed = float((a @ a).multiply(a).sum())  # 6 x triangles
    return closed / triples


def degree_assortativity(g: Graph) -> float:
    deg = g.out_degrees().astype(float)
    src = np.repeat(np.arange(g.n), g.out_degrees())
    x, y = deg[src], deg[g.indices]
    if x.size == 0:
        return 0.0
    sx, sy = x.std(), y.std()
    if sx == 0 or sy == 0:
        return 0.0
    return float(np.mean((x - x.mean()) * (y - y.mean())) / (sx * sy))


def structural_features(g: Graph) -> StructuralFeatures:
    """Six classic measures, computed on the undirected version of ``g``.

    Hierarchical degree at level d is the mean number of nodes at distance
    exactly d. The average shortest path is taken over ordered pairs of
    distinct nodes in the largest connected component.
    """
    g = g.to_undirected()
    dist = _distances(g)
    l1 = float(np.mean(np.sum(dist == 1, axis=1)))
    l2 = float(np.mean(np.sum(dist == 2, axis=1)))

    core = largest_connected_component(g)
    if core.n > 1:
        dc = dist if core.n == g.n else _distances(core)
        avg_path = float(dc.sum() / (core.n * (core.n - 1)))
    else:
        avg_path = 0.0
    return StructuralFeatures(2.0 * g.edge_count / g.n, l1, l2, transitivity(g),
                              avg_path, degree_assortativity(g))


# -- deterministic tourist walk ----------------------------------------------

@dataclass(frozen=True)
class DtwSpec:
    memories: tuple = (1, 2)
    rules: tuple = ("min", "max")
    width: int = 5

    def __post_init__(self):
        if any(mu < 1 for mu in self.memories):
            raise ValueError("tourist memory must be >= 1")
        if self.width < 1:
            raise ValueError("histogram width must be >= 1")
        if not set(self.rules) <= {"min", "max"}:
            raise ValueError(f"unknown rule in {self.rules}")

    def column_names(self):
        return [f"dtw_{r}{mu}_l{mu + j}" for r in self.rules for mu in self.memories
                for j in range(1, self.width + 1)]

    @property
    def length(self):
        return len(self.rules) * len(self.memories) * self.width


class Attractor(NamedTuple):
    transient: int
    period: int

    @property
    def length(self):
        return self.transient + self.period


def dtw_walk(g: Graph, start: int, mu: int, rule: str = "min"):
    """Run one tourist walk; returns an :class:`Attractor` or ``None`` if blocked.

    The tourist may not step onto any of its last ``mu`` positions (the
    current node included) and picks the neighbor minimizing or maximizing
    the absolute degree difference, ties going to the smallest node id.
    """
    if rule not in ("min", "max"):
        raise ValueError(f"rule must be 'min' or 'max', got {rule!r}")
    deg = g.out_degrees()
    sign = 1 if rule == "min" else -1
    window = (int(start),)
    seen = {window: 0}
    step = 0
    while True:
        cur = window[-1]
        best = None
        best_key = None
        for v in g.neighbors(cur).tolist():
            if v in window:
                continue
            key = sign * abs(int(deg[cur]) - int(deg[v]))
            if best is None or key < best_key:
                best, best_key = v, key
        if best is None:
            return None
        window = (window + (best,))[-mu:]
        step += 1
        first = seen.get(window)
        if first is not None:
            return Attractor(first, step - first)
        seen[window] = step


def dtw_histogram(g: Graph, mu: int, rule: str, width: int = 5):
    """Histogram of attractor lengths mu+1..mu+width from every start, divided by N.

    Returns ``(phi, n_blocked)``.
    """
    counts = np.zeros(width)
    blocked = 0
    for s in range(g.n):
        a = dtw_walk(g, s, mu, rule)
        if a is None:
            blocked += 1
            continue
        k = a.length - mu - 1
        if 0 <= k < width:
            counts[k] += 1
    return counts / g.n, blocked


def dtw_signature(g: Graph, spec: DtwSpec = DtwSpec()) -> np.ndarray:
    """Concatenated histograms ordered rule-major: [min mu1, min mu2, max mu1, max mu2]."""
    parts = [dtw_histogram(g, mu, rule, spec.width)[0]
             for rule in spec.rules for mu in spec.memories]
    return np.concatenate(parts)
