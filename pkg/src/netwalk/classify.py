"""Linear discriminant analysis and stratified k-fold cross-validation."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg

SHRINKAGE = 1e-4


@dataclass
class LdaModel:
    classes: np.ndarray
    means: np.ndarray          # (K, d) class means in standardized space
    covariance: np.ndarray     # shrunk pooled within-class covariance
    priors: np.ndarray
    center: np.ndarray         # standardization, raw-space
    scale: np.ndarray
    keep: np.ndarray           # mask of non-constant raw columns
    scalings: np.ndarray       # discriminant directions (standardized space)
    n_features: int

    def _prep(self, X):
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[None, :]
        if X.shape[1] != self.n_features:
            raise ValueError(f"expected {self.n_features} features, got {X.shape[1]}")
        return (X[:, self.keep] - self.center) / self.scale

    def decision_function(self, X):
        Z = self._prep(X)
        w = linalg.solve(self.covariance, self.means.T, assume_a="pos")
        bias = -0.5 * np.sum(self.means.T * w, axis=0) + np.log(self.priors)
        return Z @ w + bias

    def predict(self, X):
        # argmax returns the first maximum, i.e. the first class in sorted order
        return self.classes[np.argmax(self.decision_function(X), axis=1)]

    def transform(self, X):
        return self._prep(X) @ self.scalings

    def raw_directions(self):
        """Discriminant directions expressed on the raw (unstandardized) features."""
        out = np.zeros((self.n_features, self.scalings.shape[1]))
        out[self.keep] = self.scalings / self.scale[:, None]
        return out


def within_scatter(X, y):
    classes = np.unique(y)
    d = X.shape[1]
    sw = np.zeros((d, d))
    for c in classes:
        xc = X[y == c] - X[y == c].mean(axis=0)
        sw += xc.T @ xc
    return sw


def between_scatter(X, y):
    mu = X.mean(axis=0)
    sb = np.zeros((X.shape[1], X.shape[1]))
    for c in np.unique(y):
        xc = X[y == c]
        diff = (xc.mean(axis=0) - mu)[:, None]
        sb += len(xc) * diff @ diff.T
    return sb


def shrink(cov, lam=SHRINKAGE):
    return (1.0 - lam) * cov + lam * np.diag(np.diag(cov))


def lda_fit(X, y, shrinkage=SHRINKAGE, standardize=True) -> LdaModel:
    """Fit a shared-covariance LDA.

    Features are z-scored with the training statistics; constant columns
    are dropped since they carry no information and make the scatter
    singular. The pooled covariance is shrunk toward its diagonal.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    if X.ndim != 2 or len(X) != len(y):
        raise ValueError("X must be 2-D with one row per label")
    classes, counts = np.unique(y, return_counts=True)
    if len(classes) < 2:
        raise ValueError("LDA needs at least two classes")
    if counts.min() < 2:
        bad = classes[np.argmin(counts)]
        raise ValueError(f"class {bad!r} has fewer than two samples")

    sd = X.std(axis=0)
    keep = sd > 1e-12 * np.maximum(1.0, np.abs(X).max(axis=0))
    if not keep.any():
        keep[:] = True
        sd = np.ones_like(sd)
    Xk = X[:, keep]
    center = Xk.mean(axis=0) if standardize else np.zeros(Xk.shape[1])
    scale = sd[keep] if standardize else np.ones(Xk.shape[1])
    Z = (Xk - center) / scale

    means = np.array([Z[y == c].mean(axis=0) for c in classes])
    dof = max(len(Z) - len(classes), 1)
    cov = shrink(within_scatter(Z, y) / dof, shrinkage)
    if not np.all(np.diag(cov) > 0):
        cov = cov + np.eye(len(cov)) * max(shrinkage, 1e-12)

    n_disc = min(len(classes) - 1, Z.shape[1])
    evals, evecs = linalg.eigh(between_scatter(Z, y), cov * dof)
    order = np.argsort(evals)[::-1][:n_disc]
    return LdaModel(classes, means, cov, counts / counts.sum(), center, scale, keep,
                    evecs[:, order], X.shape[1])


def lda_predict(model: LdaModel, X):
    return model.predict(X)


# -- cross-validation -----------------------------------------------------------

@dataclass
class CvReport:
    fold_accuracies: np.ndarray  # percent
    confusion: np.ndarray
    classes: np.ndarray
    folds: np.ndarray            # fold id per sample

    @property
    def mean(self):
        return float(np.mean(self.fold_accuracies))

    @property
    def std(self):
        return float(np.std(self.fold_accuracies))


def make_folds(y, k=10, seed=0, stratified=True):
    """Fold id per sample. Stratified assignment deals each shuffled class round-robin."""
    y = np.asarray(y)
    n = len(y)
    if n < k:
        raise ValueError(f"{n} samples cannot fill {k} folds")
    gen = np.random.default_rng(seed & 0xFFFFFFFFFFFFFFFF)
    folds = np.empty(n, dtype=np.int64)
    if not stratified:
        folds[gen.permutation(n)] = np.arange(n) % k
        return folds
    offset = 0
    for c in np.unique(y):
        idx = np.flatnonzero(y == c)
        idx = idx[gen.permutation(len(idx))]
        folds[idx] = (offset + np.arange(len(idx))) % k
        offset += len(idx)
    return folds


def cross_validate(X, y, k=10, seed=0, stratified=True, shrinkage=SHRINKAGE,
                   executor=None) -> CvReport:
    """k-fold LDA accuracy. Every sample is tested exactly once."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y)
    classes = np.unique(y)
    if len(classes) < 2:
        raise ValueError("cross-validation needs at least two classes")
    folds = make_folds(y, k, seed, stratified)

    def run(f):
        test = folds == f
        model = lda_fit(X[~test], y[~test], shrinkage)
        return test, model.predict(X[test])

    results = list(executor.map(run, range(k))) if executor else [run(f) for f in range(k)]
    acc = np.zeros(k)
    conf = np.zeros((len(classes), len(classes)), dtype=np.int64)
    pos = {c: i for i, c in enumerate(classes)}
    for f, (test, pred) in enumerate(results):
        truth = y[test]
        acc[f] = 100.0 * np.mean(pred == truth)
        for t, p in zip(truth, pred):
            conf[pos[t], pos[p]] += 1
    return CvReport(acc, conf, classes, folds)
