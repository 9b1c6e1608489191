import numpy as np
import pytest

from netwalk.classify import (cross_validate, lda_fit, lda_predict, make_folds, shrink,
                              within_scatter)


def test_one_dimensional_boundary():
    model = lda_fit([[0], [1], [10], [11]], ["A", "A", "B", "B"])
    assert lda_predict(model, [[0.4]]).tolist() == ["A"]
    assert lda_predict(model, [[7]]).tolist() == ["B"]
    assert lda_predict(model, [[5.4999], [5.5001]]).tolist() == ["A", "B"]


def test_point_at_class_mean():
    rng = np.random.default_rng(0)
    X = np.vstack([rng.normal(0, 1, (20, 3)), rng.normal(3, 1, (20, 3))])
    y = np.repeat(["a", "b"], 20)
    model = lda_fit(X, y)
    assert lda_predict(model, X[:20].mean(axis=0)).tolist() == ["a"]
    assert lda_predict(model, X[20:].mean(axis=0)).tolist() == ["b"]


def test_tie_goes_to_first_class():
    model = lda_fit([[-1], [-2], [1], [2]], ["x", "x", "y", "y"])
    assert lda_predict(model, [[0.0]]).tolist() == ["x"]


def test_duplicate_and_constant_columns():
    rng = np.random.default_rng(1)
    X = rng.normal(size=(40, 2))
    X[20:] += 4
    y = np.repeat([0, 1], 20)
    Xd = np.column_stack([X, X[:, 0], np.full(40, 7.0)])
    model = lda_fit(Xd, y)
    assert np.mean(lda_predict(model, Xd) == y) > 0.9


def test_separated_blobs_training_accuracy():
    rng = np.random.default_rng(2)
    X = np.vstack([rng.normal(0, 1, (500, 2)), rng.normal(0, 1, (500, 2)) + [10, 0]])
    y = np.repeat([0, 1], 500)
    assert np.all(lda_predict(lda_fit(X, y), X) == y)


def test_affine_rescaling_invariance():
    rng = np.random.default_rng(3)
    X = rng.normal(size=(90, 4))
    y = rng.integers(0, 3, 90)
    X[y == 1] += 0.8
    scale = np.array([3.0, 0.01, 250.0, 1.0])
    shift = np.array([5.0, -2.0, 0.0, 100.0])
    test = rng.normal(size=(200, 4))
    a = lda_predict(lda_fit(X, y), test)
    b = lda_predict(lda_fit(X * scale + shift, y), test * scale + shift)
    assert np.array_equal(a, b)
    c = lda_predict(lda_fit(X * 1e3, y), test * 1e3)
    assert np.array_equal(a, c)


def test_fisher_direction():
    rng = np.random.default_rng(4)
    cov = np.array([[2.0, 0.6, 0.1], [0.6, 1.0, 0.3], [0.1, 0.3, 0.5]])
    X = np.vstack([rng.multivariate_normal([0, 0, 0], cov, 60),
                   rng.multivariate_normal([1, 2, -1], cov, 80)])
    y = np.repeat([0, 1], [60, 80])
    model = lda_fit(X, y)
    w = model.raw_directions()[:, 0]
    sigma = shrink(within_scatter(X, y) / (len(X) - 2))
    ref = np.linalg.solve(sigma, X[y == 0].mean(0) - X[y == 1].mean(0))
    cos = abs(w @ ref) / (np.linalg.norm(w) * np.linalg.norm(ref))
    assert 1 - cos < 1e-8


def test_fit_errors():
    with pytest.raises(ValueError, match="two classes"):
        lda_fit([[0], [1]], [1, 1])
    with pytest.raises(ValueError, match="fewer than two"):
        lda_fit([[0], [1], [2]], [1, 1, 2])
    model = lda_fit([[0, 0], [1, 1], [5, 5], [6, 7]], [0, 0, 1, 1])
    with pytest.raises(ValueError, match="expected 2 features"):
        lda_predict(model, [[1, 2, 3]])


def test_transform_dimension():
    rng = np.random.default_rng(5)
    X = rng.normal(size=(60, 5))
    y = np.repeat([0, 1, 2], 20)
    assert lda_fit(X, y).transform(X).shape == (60, 2)


def test_fold_partition_sizes():
    y = np.repeat(np.arange(4), 25)
    folds = make_folds(y, 10, seed=0)
    assert np.bincount(folds).tolist() == [10] * 10
    for f in range(10):
        assert np.bincount(y[folds == f], minlength=4).max() <= 3


@pytest.mark.parametrize("stratified", [True, False])
def test_folds_partition_and_determinism(stratified):
    y = np.random.default_rng(0).integers(0, 3, 53)
    a = make_folds(y, 10, 7, stratified)
    assert np.array_equal(a, make_folds(y, 10, 7, stratified))
    assert set(a.tolist()) == set(range(10))
    assert not np.array_equal(a, make_folds(y, 10, 8, stratified))


def test_too_few_samples():
    with pytest.raises(ValueError, match="folds"):
        make_folds([0, 1, 0], 10)


def test_cv_separable():
    rng = np.random.default_rng(6)
    X = np.vstack([rng.normal(0, 1, (50, 2)), rng.normal(0, 1, (50, 2)) + 20])
    y = np.repeat(["a", "b"], 50)
    rep = cross_validate(X, y, 10, seed=1)
    assert rep.mean == 100.0 and rep.std == 0.0
    assert rep.confusion.sum() == 100 and np.trace(rep.confusion) == 100
    assert rep.mean == np.mean(rep.fold_accuracies)


def test_cv_chance_level():
    rng = np.random.default_rng(7)
    X = rng.normal(size=(400, 6))
    y = rng.permutation(np.repeat(np.arange(4), 100))
    assert abs(cross_validate(X, y, 10, seed=2).mean - 25) < 10


def test_cv_deterministic():
    rng = np.random.default_rng(8)
    X = rng.normal(size=(80, 3))
    y = rng.integers(0, 2, 80)
    a = cross_validate(X, y, 10, seed=3)
    b = cross_validate(X, y, 10, seed=3)
    assert np.array_equal(a.fold_accuracies, b.fold_accuracies)
    assert np.array_equal(a.folds, b.folds)


def test_cv_single_class():
    with pytest.raises(ValueError):
        cross_validate(np.zeros((20, 2)), np.zeros(20), 10)
