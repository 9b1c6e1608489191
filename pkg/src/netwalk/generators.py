"""Synthetic graph models and Link Change noise."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq
from scipy.spatial.distance import pdist

from .graph import Graph, from_edges

MODELS = ("BA", "ER", "WS", "Waxman")
WAXMAN_ALPHA = 0.1
WS_REWIRE = 0.1


@dataclass(frozen=True)
class ModelSpec:
    model: str
    n: int
    k_avg: float
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.k_avg < 0:
            raise ValueError("k_avg must be >= 0")


def derive_seed(*labels) -> int:
    """64-bit seed hashed from integer/string labels (order matters)."""
    ints = []
    for x in labels:
        if isinstance(x, str):
            ints.extend(x.encode())
            ints.append(0x1F)
        else:
            ints.append(int(x) & 0xFFFFFFFFFFFFFFFF)
    ss = np.random.SeedSequence(ints)
    return int(ss.generate_state(1, np.uint64)[0])


def _rng(spec):
    return np.random.default_rng(spec.seed & 0xFFFFFFFFFFFFFFFF)


def gen_er(spec: ModelSpec) -> Graph:
    """Erdos-Renyi G(n, p) with p = k_avg / (n - 1)."""
    n = spec.n
    if n == 1:
        return from_edges(1, [])
    p = min(1.0, spec.k_avg / (n - 1))
    gen = _rng(spec)
    edges = []
    for i in range(n - 1):
        hits = np.flatnonzero(gen.random(n - i - 1) < p) + i + 1
        edges.append(np.column_stack([np.full(len(hits), i), hits]))
    return from_edges(n, np.vstack(edges))


def gen_ba(spec: ModelSpec) -> Graph:
    """Barabasi-Albert preferential attachment grown from an m-clique, m = k_avg / 2."""
    if spec.k_avg % 2:
        raise ValueError(f"BA needs an even k_avg, got {spec.k_avg}")
    m = int(spec.k_avg // 2)
    n = spec.n
    if m < 1:
        raise ValueError("BA needs k_avg >= 2")
    if m >= n:
        raise ValueError(f"BA needs m = k_avg/2 < n (m={m}, n={n})")
    gen = _rng(spec)
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    # every edge endpoint once: sampling from this list is degree-proportional
    ends = [x for e in edges for x in e]
    for new in range(m, n):
        if not ends:  # m == 1: the seed is a lone node
            targets = list(range(m))
        else:
            targets = set()
            while len(targets) < m:
                targets.add(ends[gen.integers(len(ends))])
            targets = sorted(targets)
        for t in targets:
            edges.append((t, new))
            ends.extend((t, new))
    return from_edges(n, edges)


def gen_ws(spec: ModelSpec, rewire_prob: float = WS_REWIRE) -> Graph:
    """Watts-Strogatz ring lattice with k_avg neighbors, edges rewired with ``rewire_prob``."""
    k = int(spec.k_avg)
    n = spec.n
    if k != spec.k_avg or k % 2:
        raise ValueError(f"WS needs an even integer k_avg, got {spec.k_avg}")
    if k >= n:
        raise ValueError(f"WS needs k_avg < n (k_avg={k}, n={n})")
    gen = _rng(spec)
    adj = [set() for _ in range(n)]
    for u in range(n):
        for j in range(1, k // 2 + 1):
            v = (u + j) % n
            adj[u].add(v)
            adj[v].add(u)
    for j in range(1, k // 2 + 1):
        for u in range(n):
            v = (u + j) % n
            if v not in adj[u] or gen.random() >= rewire_prob:
                continue
            if len(adj[u]) >= n - 1:
                continue
            w = int(gen.integers(n))
            while w == u or w in adj[u]:
                w = int(gen.integers(n))
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return from_edges(n, edges)


def waxman_beta(dist, target, alpha=WAXMAN_ALPHA):
    """Solve for beta so that sum(min(1, beta * exp(-d / (alpha * sqrt 2)))) = target."""
    base = np.exp(-dist / (alpha * np.sqrt(2.0)))
    if target > len(dist):
        raise ValueError(f"Waxman target of {target:g} edges exceeds the {len(dist)} "
                         "possible pairs")
    if target <= 0:
        return 0.0
    hi = 1.0 / base.min()  # every probability clamped to 1

    def excess(beta):
        return np.minimum(1.0, beta * base).sum() - target

    if excess(hi) <= 0:
        return hi
    return brentq(excess, 0.0, hi, xtol=1e-12, rtol=1e-12)


def gen_waxman(spec: ModelSpec, alpha: float = WAXMAN_ALPHA) -> Graph:
    """Waxman graph in the unit square with beta calibrated to the target mean degree."""
    n = spec.n
    gen = _rng(spec)
    pos = gen.random((n, 2))
    if n == 1:
        return from_edges(1, [])
    dist = pdist(pos)
    beta = waxman_beta(dist, n * spec.k_avg / 2.0, alpha)
    prob = np.minimum(1.0, beta * np.exp(-dist / (alpha * np.sqrt(2.0))))
    hit = gen.random(len(dist)) < prob
    iu, ju = np.triu_indices(n, k=1)  # same pair order as pdist
    return from_edges(n, np.column_stack([iu[hit], ju[hit]]))


def generate(spec: ModelSpec, **kw) -> Graph:
    return {"BA": gen_ba, "ER": gen_er, "WS": gen_ws, "Waxman": gen_waxman}[spec.model](spec, **kw)


def apply_link_change(g: Graph, p: float, seed: int = 0) -> Graph:
    """Remove floor(p/200 * M) random edges and add as many random new ones.

    The edge count is preserved. A removed pair may be re-added by chance.
    """
    if g.directed:
        raise ValueError("link change noise applies to undirected graphs only")
    if not 0 <= p <= 100:
        raise ValueError(f"noise rate must be within [0, 100], got {p}")
    edges = g.edges()
    m = len(edges)
    r = int(p * m // 200)
    if r == 0:
        return g
    n = g.n
    if n * (n - 1) // 2 - (m - r) < r:
        raise ValueError(f"graph too dense to add {r} new edges")
    gen = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)
    drop = gen.choice(m, size=r, replace=False)
    keep = np.delete(edges, drop, axis=0)
    present = set(map(tuple, keep.tolist()))
    added = []
    while len(added) < r:
        u, v = gen.integers(n, size=2).tolist()
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e in present:
            continue
        present.add(e)
        added.append(e)
    return from_edges(n, np.vstack([keep, np.array(added)]))


PAPER_SIZES = (500, 1000, 1500, 2000)
PAPER_DEGREES = (4, 6, 8, 10, 12, 14, 16)
NOISE_LEVELS = tuple(range(10, 101, 10))


def _model_params(model, rewire_prob):
    if model == "WS":
        return f"rewire_prob={rewire_prob}"
    if model == "Waxman":
        return f"alpha={WAXMAN_ALPHA}"
    if model == "BA":
        return "seed_graph=clique"
    return ""


def build_synthetic_dataset(sizes=PAPER_SIZES, degrees=PAPER_DEGREES, per_cell=10,
                            seed=0, models=MODELS, rewire_prob=WS_REWIRE):
    """One class per model; ``per_cell`` graphs for every (size, degree) pair.

    Each graph's seed is hashed from (seed, model, n, k_avg, replicate), so
    any single graph can be regenerated on its own.
    """
    from .datasets import Entry, LabeledDataset

    for k in degrees:
        if k % 2 and ("WS" in models or "BA" in models):
            raise ValueError(f"BA and WS need even average degrees, got {k}")
    entries = []
    for model in models:
        for n in sizes:
            for k in degrees:
                for rep in range(per_cell):
                    s = derive_seed(seed, model, n, k, rep)
                    spec = ModelSpec(model, n, k, s)
                    kw = {"rewire_prob": rewire_prob} if model == "WS" else {}
                    g = generate(spec, **kw)
                    entries.append(Entry(g, model, {
                        "model": model, "n": n, "k_avg": k, "seed": s, "p": 0,
                        "params": _model_params(model, rewire_prob)}))
    return LabeledDataset(entries, name="synthetic", provenance={
        "source": "synthetic", "seed": seed, "sizes": list(sizes),
        "degrees": list(degrees), "per_cell": per_cell, "rewire_prob": rewire_prob,
        "waxman_alpha": WAXMAN_ALPHA})


def build_noisy_dataset(base, levels=NOISE_LEVELS, seed=0):
    """Map each noise level to a perturbed copy of ``base`` with labels kept."""
    from .datasets import Entry, LabeledDataset

    out = {}
    for p in levels:
        if not 0 <= p <= 100:
            raise ValueError(f"noise rate must be within [0, 100], got {p}")
        entries = []
        for i, e in enumerate(base.entries):
            s = derive_seed(seed, "link-change", p, i)
            g = apply_link_change(e.graph, p, s) if p else e.graph
            meta = dict(e.meta)
            meta["p"] = p
            meta["noise_seed"] = s
            entries.append(Entry(g, e.label, meta))
        out[p] = LabeledDataset(entries, name=f"{base.name}_p{p}",
                                provenance={**base.provenance, "noise_rate": p,
                                            "noise_seed": seed})
    return out
