"""Labeled graph collections: manifests, edge-list directories and TUDataset bundles."""
from __future__ import annotations

import csv
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError, build_graph, read_edge_list, write_edge_list


class DatasetError(Exception):
    """Missing or inconsistent dataset files."""


@dataclass
class Entry:
    graph: Graph
    label: str
    meta: dict = field(default_factory=dict)


@dataclass
class LabeledDataset:
    entries: list
    name: str = "dataset"
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.entries:
            raise DatasetError(f"dataset {self.name!r} is empty")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def graphs(self):
        return [e.graph for e in self.entries]

    @property
    def labels(self):
        return [e.label for e in self.entries]

    def class_counts(self):
        out = {}
        for e in self.entries:
            out[e.label] = out.get(e.label, 0) + 1
        return out


def load_edge_list_dir(manifest_path) -> LabeledDataset:
    """Load a dataset from a manifest CSV with at least ``path`` and ``label`` columns.

    Paths are resolved relative to the manifest. Extra columns become entry
    metadata.
    """
    manifest_path = Path(manifest_path)
    if manifest_path.is_dir():
        manifest_path = manifest_path / "manifest.csv"
    if not manifest_path.exists():
        raise DatasetError(f"manifest not found: {manifest_path}")
    root = manifest_path.parent
    entries = []
    with open(manifest_path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"path", "label"} <= set(reader.fieldnames):
            raise DatasetError(f"{manifest_path}: header must contain 'path' and 'label'")
        for row in reader:
            rel = row.pop("path")
            label = row.pop("label")
            path = root / rel
            try:
                g = read_edge_list(path)
            except OSError as exc:
                raise DatasetError(f"cannot read graph file {path}: {exc.strerror}") from None
            except GraphError as exc:
                raise DatasetError(str(exc)) from None
            entries.append(Entry(g, label, {k: v for k, v in row.items() if v != ""}))
    if not entries:
        raise DatasetError(f"manifest {manifest_path} lists no graphs")
    return LabeledDataset(entries, name=root.name, provenance={"manifest": str(manifest_path)})


def save_dataset(ds: LabeledDataset, directory, force=False) -> Path:
    """Write one edge-list file per graph plus ``manifest.csv``; returns the manifest path."""
    directory = Path(directory)
    manifest = directory / "manifest.csv"
    if manifest.exists() and not force:
        raise DatasetError(f"{manifest} already exists (pass force=True to overwrite)")
    (directory / "graphs").mkdir(parents=True, exist_ok=True)
    keys = []
    for e in ds.entries:
        for k in e.meta:
            if k not in keys and k not in ("path", "label"):
                keys.append(k)
    width = max(4, len(str(len(ds) - 1)))
    with open(manifest, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["path", "label"] + keys)
        for i, e in enumerate(ds.entries):
            rel = f"graphs/g{i:0{width}d}.txt"
            write_edge_list(e.graph, directory / rel)
            w.writerow([rel, e.label] + [e.meta.get(k, "") for k in keys])
    return manifest


# -- TUDataset ----------------------------------------------------------------

_SPLIT = re.compile(r"[,\s]+")


def _read_ints(path):
    rows = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append([int(x) for x in _SPLIT.split(line) if x])
            except ValueError:
                raise DatasetError(f"{path}:{lineno}: malformed line {line!r}") from None
    return rows


def load_tudataset(directory, name, directed=False) -> LabeledDataset:
    """Read ``<name>_A.txt``, ``<name>_graph_indicator.txt`` and ``<name>_graph_labels.txt``.

    Global 1-based node ids are remapped to dense 0-based ids per graph.
    Node and edge attributes are ignored.
    """
    directory = Path(directory)
    files = {k: directory / f"{name}_{k}.txt" for k in ("A", "graph_indicator", "graph_labels")}
    for k, p in files.items():
        if not p.exists():
            raise DatasetError(f"missing TUDataset file {p}")
    indicator = np.array([r[0] for r in _read_ints(files["graph_indicator"])], dtype=np.int64)
    with open(files["graph_labels"]) as fh:
        labels = [line.strip() for line in fh if line.strip()]
    n_graphs = len(labels)
    if indicator.size == 0:
        raise DatasetError(f"{files['graph_indicator']} is empty")
    if indicator.min() < 1 or indicator.max() > n_graphs:
        raise DatasetError(f"graph indicator references graphs outside 1..{n_graphs}")
    if np.any(np.diff(indicator) < 0):
        raise DatasetError("graph indicator must be sorted by graph id")
    pairs = np.array(_read_ints(files["A"]), dtype=np.int64).reshape(-1, 2) - 1
    n_nodes = len(indicator)
    if pairs.size and (pairs.min() < 0 or pairs.max() >= n_nodes):
        bad = pairs[(pairs < 0).any(axis=1) | (pairs >= n_nodes).any(axis=1)][0] + 1
        raise DatasetError(f"edge ({bad[0]}, {bad[1]}) references a node absent from "
                           f"the graph indicator ({n_nodes} nodes)")

    gid = indicator - 1
    first = np.searchsorted(gid, np.arange(n_graphs))
    sizes = np.bincount(gid, minlength=n_graphs)
    eg = gid[pairs[:, 0]] if pairs.size else np.zeros(0, dtype=np.int64)
    if pairs.size and np.any(eg != gid[pairs[:, 1]]):
        raise DatasetError("edge connects nodes of different graphs")
    order = np.argsort(eg, kind="stable")
    pairs, eg = pairs[order], eg[order]
    bounds = np.searchsorted(eg, np.arange(n_graphs + 1))
    entries = []
    for k in range(n_graphs):
        if sizes[k] == 0:
            raise DatasetError(f"graph {k + 1} has no nodes in the indicator file")
        local = pairs[bounds[k]:bounds[k + 1]] - first[k]
        g, _ = build_graph(int(sizes[k]), local, directed=directed)
        entries.append(Entry(g, labels[k], {"tu_index": k + 1}))
    return LabeledDataset(entries, name=name,
                          provenance={"source": "TUDataset", "directory": str(directory),
                                      "directed": directed})


def write_tudataset(ds: LabeledDataset, directory, name):
    """Encode ``ds`` in the TUDataset plain-text layout (both edge directions listed)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    offset = 0
    with open(directory / f"{name}_A.txt", "w") as fa, \
            open(directory / f"{name}_graph_indicator.txt", "w") as fi, \
            open(directory / f"{name}_graph_labels.txt", "w") as fl:
        for k, e in enumerate(ds.entries, start=1):
            g = e.graph
            src = np.repeat(np.arange(g.n), g.out_degrees())
            for u, v in zip(src.tolist(), g.indices.tolist()):
                fa.write(f"{u + offset + 1}, {v + offset + 1}\n")
            fi.write(f"{k}\n" * g.n)
            fl.write(f"{e.label}\n")
            offset += g.n


def find_tudataset(name, search=None):
    """Locate a TUDataset bundle directory, or return ``None``.

    Looks in ``search`` and in ``$NETWALK_TUDATASET_DIR`` (both the directory
    itself and ``<dir>/<name>``).
    """
    roots = [search, os.environ.get("NETWALK_TUDATASET_DIR")]
    for root in filter(None, roots):
        for d in (Path(root), Path(root) / name, Path(root) / name / "raw"):
            if (d / f"{name}_A.txt").exists():
                return d
    return None
