"""Dataset-level feature extraction, CSV formats and benchmark sweeps."""
from __future__ import annotations

import csv
import os
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

import numpy as np

from .baselines import STRUCTURAL_NAMES, DtwSpec, dtw_signature, structural_features
from .classify import cross_validate
from .features import STAT_NAMES, FeatureSetSpec, extract_features
from .generators import build_noisy_dataset, derive_seed
from .walks import WalkConfig

METHODS = ("randomwalk", "structural", "dtw")
THREADS_ENV = "NETWALK_THREADS"


def default_threads():
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@contextmanager
def pool(threads):
    if threads is None:
        threads = default_threads()
    if threads <= 1:
        yield None
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            yield ex


def _map(fn, items, threads):
    # Executor.map yields in input order, whatever the completion order
    with pool(threads) as ex:
        return list(ex.map(fn, items)) if ex else [fn(x) for x in items]


def feature_matrix(graphs, method="randomwalk", cfg=None, spec=None, dtw=None,
                   threads=None):
    """Stack per-graph feature vectors; returns ``(X, column_names)``."""
    if method == "randomwalk":
        cfg = cfg or WalkConfig()
        spec = spec or FeatureSetSpec()
        missing = set(spec.lmw_memories) - set(cfg.memories)
        if missing:
            raise ValueError(f"memories {sorted(missing)} are not in the walk config")
        fn = lambda g: extract_features(g, cfg, spec)  # noqa: E731
        names = spec.column_names()
    elif method == "structural":
        fn = lambda g: np.array(structural_features(g), dtype=float)  # noqa: E731
        names = list(STRUCTURAL_NAMES)
    elif method == "dtw":
        dtw = dtw or DtwSpec()
        fn = lambda g: dtw_signature(g, dtw)  # noqa: E731
        names = dtw.column_names()
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    rows = _map(fn, list(graphs), threads)
    return np.vstack(rows) if rows else np.zeros((0, len(names))), names


def write_feature_csv(path, X, names, labels):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(list(names) + ["label"])
        for row, lab in zip(X, labels):
            w.writerow([repr(float(v)) for v in row] + [lab])


def read_feature_csv(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[-1] != "label":
            raise ValueError(f"{path}: last header column must be 'label'")
        X, y = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} fields")
            try:
                X.append([float(v) for v in row[:-1]])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-numeric feature value") from None
            y.append(row[-1])
    if not X:
        raise ValueError(f"{path}: no feature rows")
    return np.array(X), header[:-1], np.array(y)


def _fmt(x):
    return repr(round(float(x), 4))


def report_row(report, **keys):
    row = dict(keys)
    row["mean_acc"] = _fmt(report.mean)
    row["std_acc"] = _fmt(report.std)
    for i, a in enumerate(report.fold_accuracies, start=1):
        row[f"fold_{i}"] = _fmt(a)
    return row


def write_rows(path, rows):
    fields = []
    for r in rows:
        fields.extend(k for k in r if k not in fields)
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)


def write_confusion(path, report):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["true\\pred"] + [str(c) for c in report.classes])
        for c, row in zip(report.classes, report.confusion):
            w.writerow([str(c)] + [int(v) for v in row])


def cv_seed(seed):
    return derive_seed(seed, "folds")


# -- benchmark sweeps -----------------------------------------------------------

def block_columns(names, blocks):
    want = {f"{b}_{s}" for b in blocks for s in STAT_NAMES}
    return [i for i, n in enumerate(names) if n in want]


def feature_set_table(memories):
    """(row label, blocks) pairs in the order of the published feature-set tables."""
    memories = sorted(memories)
    rows = [("SAW length", ["saw_len"]), ("SAW visits", ["saw_vis"])]
    rows += [(f"LMW m={m}", [f"lmw{m}"]) for m in memories]
    rows.append(("SAW length + visits", ["saw_len", "saw_vis"]))
    for j in range(2, len(memories) + 1):
        sub = memories[:j]
        tag = ",".join(map(str, sub)) if j == 2 else f"{sub[0]}..{sub[-1]}"
        rows.append((f"SAW length + visits + LMW m={tag}",
                     ["saw_len", "saw_vis"] + [f"lmw{m}" for m in sub]))
    return rows


def feature_set_sweep(X, names, y, memories, dataset="dataset", k=10, seed=0,
                      threads=None):
    rows = []
    with pool(threads) as ex:
        for label, blocks in feature_set_table(memories):
            cols = block_columns(names, blocks)
            rep = cross_validate(X[:, cols], y, k, cv_seed(seed), executor=ex)
            rows.append(report_row(rep, feature_set=label, dataset=dataset))
    return rows


def memory_sweep(X, names, y, memories, dataset="dataset", k=10, seed=0, threads=None):
    """LMW accuracy per memory on its own and for cumulative memories 1..m."""
    memories = sorted(memories)
    rows = []
    with pool(threads) as ex:
        for mode in ("individual", "cumulative"):
            for j, m in enumerate(memories):
                sub = [m] if mode == "individual" else memories[:j + 1]
                cols = block_columns(names, [f"lmw{x}" for x in sub])
                rep = cross_validate(X[:, cols], y, k, cv_seed(seed), executor=ex)
                rows.append(report_row(rep, mode=mode, memory=m, dataset=dataset))
    return rows


def noise_sweep(base, levels, methods=METHODS, cfg=None, spec=None, dtw=None,
                k=10, seed=0, threads=None):
    """Accuracy per (method, noise level) on Link-Change perturbed copies of ``base``."""
    noisy = build_noisy_dataset(base, levels, seed=derive_seed(seed, "noise"))
    y = np.array(base.labels)
    rows = []
    for p in levels:
        graphs = noisy[p].graphs
        for method in methods:
            X, _ = feature_matrix(graphs, method, cfg, spec, dtw, threads)
            with pool(threads) as ex:
                rep = cross_validate(X, y, k, cv_seed(seed), executor=ex)
            rows.append(report_row(rep, method=method, p=p, dataset=base.name))
    return rows


def average_drop(rows, method):
    """Relative accuracy loss (percent) averaged over noisy levels, against p = 0."""
    acc = {int(r["p"]): float(r["mean_acc"]) for r in rows if r["method"] == method}
    if 0 not in acc or acc[0] == 0:
        raise ValueError("average_drop needs a p = 0 row with non-zero accuracy")
    drops = [100.0 * (acc[0] - a) / acc[0] for p, a in acc.items() if p > 0]
    return float(np.mean(drops))
