import numpy as np
import pytest

from netwalk.features import FeatureSetSpec
from netwalk.generators import build_synthetic_dataset
from netwalk.pipeline import (average_drop, block_columns, feature_matrix, feature_set_table,
                              read_feature_csv, write_feature_csv)
from netwalk.walks import WalkConfig


@pytest.fixture(scope="module")
def ds():
    return build_synthetic_dataset(sizes=(40,), degrees=(4,), per_cell=3, seed=1)


@pytest.mark.parametrize("method", ["randomwalk", "structural", "dtw"])
def test_threads_do_not_change_results(ds, method):
    cfg = WalkConfig(walkers=3, memories=(1, 2))
    spec = FeatureSetSpec.full((1, 2))
    a, names = feature_matrix(ds.graphs, method, cfg, spec, threads=1)
    b, _ = feature_matrix(ds.graphs, method, cfg, spec, threads=4)
    assert np.array_equal(a, b)
    assert a.shape == (12, len(names))


def test_memories_must_be_configured(ds):
    with pytest.raises(ValueError, match="not in the walk config"):
        feature_matrix(ds.graphs, "randomwalk", WalkConfig(memories=(1,)),
                       FeatureSetSpec(True, True, (5,)))


def test_feature_csv_round_trip(tmp_path, ds):
    X, names = feature_matrix(ds.graphs, "structural", threads=1)
    write_feature_csv(tmp_path / "f.csv", X, names, ds.labels)
    X2, names2, y = read_feature_csv(tmp_path / "f.csv")
    assert np.array_equal(X, X2) and names2 == names and y.tolist() == ds.labels


def test_feature_set_table_blocks():
    table = feature_set_table(range(1, 11))
    assert len(table) == 2 + 10 + 1 + 9
    assert table[-1][0] == "SAW length + visits + LMW m=1..10"
    names = FeatureSetSpec.full(range(1, 11)).column_names()
    assert len(block_columns(names, table[-1][1])) == 96


def test_average_drop():
    rows = [{"method": "a", "p": 0, "mean_acc": "100"}, {"method": "a", "p": 10, "mean_acc": "80"},
            {"method": "a", "p": 20, "mean_acc": "60"}]
    assert average_drop(rows, "a") == pytest.approx(30.0)
