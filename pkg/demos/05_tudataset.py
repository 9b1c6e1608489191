"""
Benchmark graphs from TUDataset
===============================

Point NETWALK_TUDATASET_DIR at a directory holding an unpacked bundle such as
IMDB-MULTI (files IMDB-MULTI_A.txt, IMDB-MULTI_graph_indicator.txt,
IMDB-MULTI_graph_labels.txt). Without it, a small bundle is written and read
back to show the format.
"""
import sys
import tempfile

import numpy as np

from netwalk import FeatureSetSpec, WalkConfig, build_synthetic_dataset, cross_validate, \
    load_tudataset
from netwalk.datasets import find_tudataset, write_tudataset
from netwalk.pipeline import feature_matrix

name = sys.argv[1] if len(sys.argv) > 1 else "IMDB-MULTI"
where = find_tudataset(name)
if where is None:
    print(f"{name} not found; using a generated stand-in")
    where = tempfile.mkdtemp()
    name = "DEMO"
    write_tudataset(build_synthetic_dataset(sizes=(40,), degrees=(4,), per_cell=10), where, name)

ds = load_tudataset(where, name)
print(len(ds), "graphs", ds.class_counts())
print("mean nodes %.1f" % np.mean([g.n for g in ds.graphs]))

# %%
X, _ = feature_matrix(ds.graphs, "randomwalk", WalkConfig(), FeatureSetSpec())
rep = cross_validate(X, np.array(ds.labels), k=10, seed=0)
print(f"SAW length + visits: {rep.mean:.1f} ({rep.std:.1f})")
