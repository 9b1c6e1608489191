"""
Accuracy against walker memory
==============================

Scores limited-memory walk features one memory size at a time and as
cumulative blocks 1..m.
"""
import numpy as np

from netwalk import FeatureSetSpec, WalkConfig, build_synthetic_dataset
from netwalk.pipeline import feature_matrix, memory_sweep

ds = build_synthetic_dataset(sizes=(150,), degrees=(4, 8), per_cell=10, seed=5)
cfg = WalkConfig(memories=tuple(range(1, 11)))
X, names = feature_matrix(ds.graphs, "randomwalk", cfg, FeatureSetSpec.full(cfg.memories))

rows = memory_sweep(X, names, np.array(ds.labels), cfg.memories, dataset="synthetic")
for mode in ("individual", "cumulative"):
    curve = [float(r["mean_acc"]) for r in rows if r["mode"] == mode]
    print(f"{mode:10s}", " ".join(f"{a:5.1f}" for a in curve))
