"""Network classification from traditional, self-avoiding and limited-memory random walks."""
from .baselines import DtwSpec, dtw_signature, dtw_walk, structural_features
from .classify import CvReport, LdaModel, cross_validate, lda_fit, lda_predict
from .datasets import Entry, LabeledDataset, load_edge_list_dir, load_tudataset, save_dataset
from .features import DistributionStats, FeatureSetSpec, extract_features, stats_of, visit_diff
from .generators import (ModelSpec, apply_link_change, build_noisy_dataset,
                         build_synthetic_dataset, gen_ba, gen_er, gen_waxman, gen_ws)
from .graph import Graph, build_graph, from_edges, largest_connected_component, out_degree
from . import published
from .walks import VisitProfile, WalkConfig, expected_rw_frequencies, run_lmw, run_rw, run_saw

__version__ = "0.1.0"
