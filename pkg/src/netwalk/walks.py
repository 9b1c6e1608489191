"""Traditional, self-avoiding and limited-memory random walks.

``W`` walkers start from every node. Arrivals are counted at every step
(the starting placement is not a visit) and normalized by ``N * W``.
Each walker draws from its own counter-based stream keyed by
``(master seed, walk type, memory, start node, walker index)``, so results
do not depend on how work is scheduled.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from . import rng
from .graph import Graph, is_connected


@dataclass(frozen=True)
class WalkConfig:
    walkers: int = 10
    max_steps: int | None = None  # None -> N, re-evaluated per graph
    memories: tuple = tuple(range(1, 11))
    seed: int = 0
    # if False the memory window holds the m nodes visited before the current one
    window_includes_current: bool = True

    def __post_init__(self):
        if self.walkers < 1:
            raise ValueError("walkers must be >= 1")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if any(m < 1 for m in self.memories):
            raise ValueError("memory sizes must be >= 1")
        object.__setattr__(self, "memories", tuple(sorted(set(int(m) for m in self.memories))))

    def steps_for(self, g: Graph) -> int:
        return g.n if self.max_steps is None else self.max_steps


@dataclass
class VisitProfile:
    walk_type: str
    visits: np.ndarray
    arrivals: np.ndarray = field(repr=False)
    total_steps: int = 0
    memory: int | None = None

    @property
    def label(self):
        return self.walk_type if self.memory is None else f"{self.walk_type}({self.memory})"


@njit(cache=True, nogil=True)
def _rw_kernel(indptr, indices, n, walkers, max_steps, base, arrivals):
    total = 0
    for start in range(n):
        for w in range(walkers):
            key = rng.walker_key(base, start, w)
            cur = start
            for step in range(max_steps):
                lo = indptr[cur]
                deg = indptr[cur + 1] - lo
                if deg == 0:
                    break
                cur = indices[lo + int(rng.uniform(key, step) * deg)]
                arrivals[cur] += 1
                total += 1
    return total


@njit(cache=True, nogil=True)
def _avoiding_kernel(indptr, indices, n, walkers, window, max_steps, base,
                     arrivals, lengths):
    # The last `window` trajectory entries are forbidden. Entries inside the
    # window are always distinct, so a flag array plus a ring buffer suffices.
    size = min(window, n) + 1
    ring = np.empty(size, dtype=np.int64)
    blocked = np.zeros(n, dtype=np.bool_)
    total = 0
    for start in range(n):
        for w in range(walkers):
            key = rng.walker_key(base, start, w)
            cur = start
            head = 0
            filled = 1
            ring[0] = start
            blocked[start] = True
            steps = 0
            while steps < max_steps:
                lo = indptr[cur]
                hi = indptr[cur + 1]
                allowed = 0
                for k in range(lo, hi):
                    if not blocked[indices[k]]:
                        allowed += 1
                if allowed == 0:
                    break
                pick = int(rng.uniform(key, steps) * allowed)
                for k in range(lo, hi):
                    if not blocked[indices[k]]:
                        if pick == 0:
                            cur = indices[k]
                            break
                        pick -= 1
                arrivals[cur] += 1
                steps += 1
                head = (head + 1) % size
                ring[head] = cur
                blocked[cur] = True
                if filled == window:
                    old = (head - window + size) % size
                    blocked[ring[old]] = False
                else:
                    filled += 1
            lengths[start, w] = steps
            total += steps
            for j in range(filled):
                blocked[ring[(head - j + size) % size]] = False
    return total


def _stream(cfg, label):
    walk_type, memory = label
    return rng.stream_base(cfg.seed, walk_type, memory)


def _profile(g, cfg, walk_type, arrivals, total, memory=None):
    visits = arrivals / float(g.n * cfg.walkers)
    return VisitProfile(walk_type, visits, arrivals, int(total), memory)


def run_rw(g: Graph, cfg: WalkConfig, stream=None) -> VisitProfile:
    """Traditional random walk capped at ``max_steps`` steps."""
    arrivals = np.zeros(g.n, dtype=np.int64)
    base = _stream(cfg, stream or (rng.RW, 0))
    total = _rw_kernel(g.indptr, g.indices, g.n, cfg.walkers, cfg.steps_for(g),
                       np.uint64(base), arrivals)
    return _profile(g, cfg, "RW", arrivals, total)


def run_saw(g: Graph, cfg: WalkConfig, stream=None):
    """Self-avoiding walk run until it gets stuck.

    Returns ``(profile, lengths)`` where ``lengths[i, w]`` is the number of
    steps taken by walker ``w`` started at node ``i``.
    """
    arrivals = np.zeros(g.n, dtype=np.int64)
    lengths = np.zeros((g.n, cfg.walkers), dtype=np.int64)
    base = _stream(cfg, stream or (rng.SAW, 0))
    # a self-avoiding walk has at most N - 1 steps; window N covers all of it
    total = _avoiding_kernel(g.indptr, g.indices, g.n, cfg.walkers, g.n, g.n,
                             np.uint64(base), arrivals, lengths)
    return _profile(g, cfg, "SAW", arrivals, total), lengths


def run_lmw(g: Graph, m: int, cfg: WalkConfig, stream=None) -> VisitProfile:
    """Self-avoiding walk that only remembers the ``m`` most recent nodes."""
    if m < 1:
        raise ValueError("memory must be >= 1")
    window = m if cfg.window_includes_current else m + 1
    arrivals = np.zeros(g.n, dtype=np.int64)
    lengths = np.zeros((g.n, cfg.walkers), dtype=np.int64)
    base = _stream(cfg, stream or (rng.LMW, m))
    total = _avoiding_kernel(g.indptr, g.indices, g.n, cfg.walkers, window,
                             cfg.steps_for(g), np.uint64(base), arrivals, lengths)
    return _profile(g, cfg, "LMW", arrivals, total, memory=m)


def expected_rw_frequencies(g: Graph, steps: int) -> np.ndarray:
    """Exact expected normalized RW visits after ``steps`` steps.

    Propagates the uniform start distribution through the transition
    matrix and sums the occupation probabilities of steps 1..steps.
    """
    if g.directed:
        raise ValueError("expected_rw_frequencies needs an undirected graph")
    if not is_connected(g):
        raise ValueError("expected_rw_frequencies needs a connected graph")
    deg = g.out_degrees().astype(float)
    if g.n > 1 and (deg == 0).any():
        raise ValueError("graph has isolated nodes")
    a = g.to_scipy().astype(float)
    p = np.full(g.n, 1.0 / g.n)
    out = np.zeros(g.n)
    if g.n == 1:
        return out
    for _ in range(steps):
        p = a.T @ (p / deg)
        out += p
    return out


def write_profiles(path, profiles):
    """Dump per-node visit profiles as CSV ``node,t,s,r_1,...``."""
    cols = []
    for p in profiles:
        name = {"RW": "t", "SAW": "s"}.get(p.walk_type, f"r_{p.memory}")
        cols.append((name, p.visits))
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["node"] + [c for c, _ in cols])
        for i in range(len(cols[0][1])):
            w.writerow([i] + [repr(float(v[i])) for _, v in cols])
