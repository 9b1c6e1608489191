"""Immutable simple graphs stored as sorted CSR adjacency."""
from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

Dropped = namedtuple("Dropped", ["self_loops", "duplicates"])


class GraphError(ValueError):
    """Raised for invalid graph input (bad node ids, malformed edge lists)."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph, directed or undirected, with dense 0-based node ids.

    ``indptr``/``indices`` hold the out-adjacency in CSR form with every
    neighbor list sorted ascending. Undirected edges appear in both lists.
    """

    n: int
    indptr: np.ndarray
    indices: np.ndarray
    directed: bool = False
    _edge_count: int = field(default=0, repr=False)

    def __post_init__(self):
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def node_count(self) -> int:
        return self.n

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def out_degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def out_degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def edges(self) -> np.ndarray:
        """Edge array of shape (M, 2); undirected edges listed once with u < v."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.out_degrees())
        e = np.column_stack([src, self.indices])
        if not self.directed:
            e = e[e[:, 0] < e[:, 1]]
        return e

    def edge_set(self) -> set:
        return set(map(tuple, self.edges().tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        k = np.searchsorted(nb, v)
        return bool(k < len(nb) and nb[k] == v)

    def to_scipy(self) -> sparse.csr_matrix:
        data = np.ones(len(self.indices), dtype=np.int8)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def to_undirected(self) -> "Graph":
        if not self.directed:
            return self
        return build_graph(self.n, self.edges(), directed=False)[0]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.directed == other.directed
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices))

    def __hash__(self):
        return hash((self.n, self.directed, self.indices.tobytes()))

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph(n={self.n}, m={self.edge_count}, {kind})"


def build_graph(n, edges, directed=False):
    """Build a simple graph from an edge list.

    Self-loops are dropped and duplicate edges collapsed (for undirected
    graphs ``(u, v)`` and ``(v, u)`` are the same edge). Returns
    ``(graph, Dropped(self_loops, duplicates))``.
    """
    n = int(n)
    if n < 1:
        raise GraphError(f"node count must be >= 1, got {n}")
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    bad = (e < 0) | (e >= n)
    if bad.any():
        k = int(np.flatnonzero(bad.any(axis=1))[0])
        u, v = e[k].tolist()
        raise GraphError(f"edge #{k} ({u}, {v}) has a node id outside [0, {n})")

    loops = e[:, 0] == e[:, 1]
    n_loops = int(loops.sum())
    e = e[~loops]
    if not directed:
        e = np.sort(e, axis=1)
    e = np.unique(e, axis=0) if len(e) else e
    n_dup = len(loops) - n_loops - len(e)
    m = len(e)
    if not directed:
        e = np.vstack([e, e[:, ::-1]])
    order = np.lexsort((e[:, 1], e[:, 0]))
    e = e[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(e[:, 0], minlength=n), out=indptr[1:])
    g = Graph(n, indptr, np.ascontiguousarray(e[:, 1]), bool(directed), m)
    return g, Dropped(n_loops, n_dup)


def from_edges(n, edges, directed=False) -> Graph:
    """Like :func:`build_graph` but returns only the graph."""
    return build_graph(n, edges, directed)[0]


def out_degree(g: Graph, i: int) -> int:
    return g.out_degree(i)


def induced_subgraph(g: Graph, nodes) -> Graph:
    """Subgraph induced by ``nodes`` re-indexed in ascending original order."""
    nodes = np.sort(np.asarray(nodes, dtype=np.int64))
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[nodes] = np.arange(len(nodes))
    e = g.edges()
    keep = (remap[e[:, 0]] >= 0) & (remap[e[:, 1]] >= 0)
    return build_graph(len(nodes), remap[e[keep]], g.directed)[0]


def largest_connected_component(g: Graph) -> Graph:
    """Induced subgraph on the largest weakly connected component.

    Ties go to the component holding the smallest original node id.
    """
    _, labels = csgraph.connected_components(g.to_scipy(), directed=g.directed,
                                             connection="weak")
    sizes = np.bincount(labels)
    # labels are numbered in order of first appearance, so argmax breaks ties
    # toward the component containing the lowest node id
    best = int(np.argmax(sizes))
    if sizes[best] == g.n:
        return g
    return induced_subgraph(g, np.flatnonzero(labels == best))


def is_connected(g: Graph) -> bool:
    ncomp, _ = csgraph.connected_components(g.to_scipy(), directed=g.directed,
                                            connection="weak")
    return ncomp == 1


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(lines, source="<edge list>") -> Graph:
    """Parse the whitespace edge-list format.

    Lines starting with ``#`` are comments. An optional first non-comment
    line ``N <n> <directed|undirected>`` fixes the node count and
    direction; otherwise ``n = max id + 1`` and the graph is undirected.
    """
    n = None
    directed = False
    edges = []
    seen_content = False
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if not seen_content and parts[0] == "N":
            seen_content = True
            if len(parts) != 3 or parts[2] not in ("directed", "undirected"):
                raise GraphError(f"{source}:{lineno}: malformed header {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphError(f"{source}:{lineno}: malformed header {line!r}") from None
            directed = parts[2] == "directed"
            continue
        seen_content = True
        if len(parts) != 2:
            raise GraphError(f"{source}:{lineno}: expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"{source}:{lineno}: non-integer node id in {line!r}") from None
    if n is None:
        n = max((max(u, v) for u, v in edges), default=0) + 1
    try:
        return build_graph(n, edges, directed)[0]
    except GraphError as exc:
        raise GraphError(f"{source}: {exc}") from None


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh, source=str(path))


def format_edge_list(g: Graph) -> str:
    kind = "directed" if g.directed else "undirected"
    body = "".join(f"{u} {v}\n" for u, v in g.edges().tolist())
    return f"N {g.n} {kind}\n{body}"


def write_edge_list(g: Graph, path):
    with open(path, "w") as fh:
        fh.write(format_edge_list(g))
