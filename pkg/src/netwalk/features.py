"""Distribution statistics and random-walk feature vectors."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .graph import Graph
from .walks import WalkConfig, VisitProfile, run_lmw, run_rw, run_saw

STAT_NAMES = ("mean", "std", "q25", "q50", "q75", "skew", "kurt", "entropy")
ENTROPY_BINS = 20


class DistributionStats(NamedTuple):
    mean: float
    std: float
    q25: float
    q50: float
    q75: float
    skew: float
    kurt: float
    entropy: float


def stats_of(values) -> DistributionStats:
    """Eight-number summary of a sample.

    std uses the n-1 denominator; skewness and excess kurtosis use
    population central moments; quartiles interpolate linearly; entropy is
    the Shannon entropy (nats) of a 20-bin equal-width histogram over
    [min, max]. A zero-variance sample gives 0 for std, skew, kurt and
    entropy.
    """
    # sorted so that summation order, and thus every bit of the result,
    # is independent of input order
    v = np.sort(np.asarray(values, dtype=float).ravel())
    if v.size == 0:
        raise ValueError("stats_of needs at least one value")
    mean = v.mean()
    q25, q50, q75 = np.quantile(v, [0.25, 0.5, 0.75])
    lo, hi = v.min(), v.max()
    if lo == hi:
        return DistributionStats(float(mean), 0.0, float(q25), float(q50), float(q75),
                                 0.0, 0.0, 0.0)
    d = v - mean
    m2 = np.mean(d ** 2)
    std = np.sqrt(np.sum(d ** 2) / (v.size - 1))
    if m2 > 0:
        z = d / np.sqrt(m2)  # standardized first: m2**2 underflows for tiny spreads
        skew, kurt = np.mean(z ** 3), np.mean(z ** 4) - 3.0
    else:
        skew = kurt = 0.0
    counts, _ = np.histogram(v, bins=ENTROPY_BINS, range=(lo, hi))
    p = counts[counts > 0] / v.size
    entropy = -np.sum(p * np.log(p))
    return DistributionStats(float(mean), float(std), float(q25), float(q50), float(q75),
                             float(skew), float(kurt), float(entropy))


def visit_diff(profile: VisitProfile, baseline: VisitProfile) -> np.ndarray:
    """Per-node ``profile - baseline`` (baseline is the traditional walk)."""
    if len(profile.visits) != len(baseline.visits):
        raise ValueError(f"profile length {len(profile.visits)} != "
                         f"baseline length {len(baseline.visits)}")
    return profile.visits - baseline.visits


@dataclass(frozen=True)
class FeatureSetSpec:
    include_saw_lengths: bool = True
    include_saw_visits: bool = True
    lmw_memories: tuple = ()
    normalize_lengths_by_n: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lmw_memories", tuple(sorted(set(self.lmw_memories))))
        if not (self.include_saw_lengths or self.include_saw_visits or self.lmw_memories):
            raise ValueError("feature set has no blocks enabled")

    @classmethod
    def full(cls, memories=range(1, 11)):
        return cls(True, True, tuple(memories))

    def blocks(self):
        out = []
        if self.include_saw_lengths:
            out.append("saw_len")
        if self.include_saw_visits:
            out.append("saw_vis")
        out.extend(f"lmw{m}" for m in self.lmw_memories)
        return out

    def column_names(self):
        return [f"{b}_{s}" for b in self.blocks() for s in STAT_NAMES]

    @property
    def width(self):
        return len(STAT_NAMES) * len(self.blocks())


def extract_features(g: Graph, cfg: WalkConfig, spec: FeatureSetSpec) -> np.ndarray:
    """Feature vector laid out as [SAW lengths] [SAW visits - RW] [LMW(m) - RW per m]."""
    blocks = []
    need_rw = spec.include_saw_visits or bool(spec.lmw_memories)
    rw = run_rw(g, cfg) if need_rw else None
    if spec.include_saw_lengths or spec.include_saw_visits:
        saw, lengths = run_saw(g, cfg)
        if spec.include_saw_lengths:
            lens = lengths.ravel().astype(float)
            if spec.normalize_lengths_by_n:
                lens /= g.n
            blocks.append(stats_of(lens))
        if spec.include_saw_visits:
            blocks.append(stats_of(visit_diff(saw, rw)))
    for m in spec.lmw_memories:
        blocks.append(stats_of(visit_diff(run_lmw(g, m, cfg), rw)))
    return np.array([x for b in blocks for x in b], dtype=float)
