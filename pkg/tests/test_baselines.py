import networkx as nx
import numpy as np
import pytest

from netwalk.baselines import (Attractor, DtwSpec, dtw_histogram, dtw_signature, dtw_walk,
                               structural_features)
from netwalk.generators import ModelSpec, generate
from netwalk.graph import from_edges, largest_connected_component

from conftest import random_simple_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges().tolist())
    return h


def test_k3(k3):
    s = structural_features(k3)
    assert tuple(s) == (2.0, 2.0, 0.0, 1.0, 1.0, 0.0)


def test_path(path3):
    s = structural_features(path3)
    assert s.avg_degree == pytest.approx(4 / 3)
    assert s.clustering == 0.0
    assert s.avg_shortest_path == pytest.approx(4 / 3)
    assert s.hier_degree_l2 == pytest.approx(2 / 3)


def test_star_assortativity(star5):
    assert structural_features(star5).assortativity == pytest.approx(-1.0)


def test_regular_assortativity_zero():
    ring = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert structural_features(ring).assortativity == 0.0


def brute_force_rings(h):
    d = dict(nx.all_pairs_shortest_path_length(h))
    n = h.number_of_nodes()
    l1 = sum(sum(1 for v in d[u].values() if v == 1) for u in h) / n
    l2 = sum(sum(1 for v in d[u].values() if v == 2) for u in h) / n
    return l1, l2


def brute_force_triangles(h):
    nodes = list(h)
    tri = sum(1 for i in nodes for j in nodes for k in nodes
              if i < j < k and h.has_edge(i, j) and h.has_edge(j, k) and h.has_edge(i, k))
    triples = sum(d * (d - 1) / 2 for _, d in h.degree())
    return 3 * tri / triples if triples else 0.0


def test_structural_against_oracles():
    rng = np.random.default_rng(12)
    for k in range(25):
        n = int(rng.integers(5, 51))
        g = random_simple_graph(rng, n, rng.uniform(0.03, 0.3))
        h = to_nx(g)
        s = structural_features(g)
        l1, l2 = brute_force_rings(h)
        assert s.hier_degree_l1 == pytest.approx(l1, abs=1e-12)
        assert s.hier_degree_l2 == pytest.approx(l2, abs=1e-12)
        assert s.avg_degree == pytest.approx(2 * h.number_of_edges() / n)
        assert s.clustering == pytest.approx(brute_force_triangles(h), abs=1e-12)
        assert s.clustering == pytest.approx(nx.transitivity(h), abs=1e-12)
        core = h.subgraph(max(nx.connected_components(h), key=lambda c: (len(c), -min(c))))
        want = nx.average_shortest_path_length(core) if len(core) > 1 else 0.0
        assert s.avg_shortest_path == pytest.approx(want, abs=1e-12)
        if h.number_of_edges() and len({d for _, d in h.degree() if d}) > 1:
            want = nx.degree_pearson_correlation_coefficient(h)
            assert s.assortativity == pytest.approx(want, abs=1e-9)
        assert 0 <= s.clustering <= 1 and -1 - 1e-12 <= s.assortativity <= 1 + 1e-12


def test_structural_disconnected_uses_lcc():
    g = from_edges(7, [(0, 1), (1, 2), (2, 3), (4, 5)])
    s = structural_features(g)
    core = largest_connected_component(g)
    assert s.avg_shortest_path == pytest.approx(nx.average_shortest_path_length(to_nx(core)))


def trace(adj, deg, start, mu, rule):
    """Independent brute-force tourist: keep the whole trajectory, look for repeats."""
    traj = [start]
    while True:
        cur = traj[-1]
        mem = traj[-mu:]
        cand = [v for v in sorted(adj[cur]) if v not in mem]
        if not cand:
            return None
        diff = [abs(deg[cur] - deg[v]) for v in cand]
        target = min(diff) if rule == "min" else max(diff)
        traj.append(cand[diff.index(target)])
        t_now = len(traj) - 1
        state = tuple(traj[-mu:])
        for t0 in range(t_now):
            if tuple(traj[max(0, t0 - mu + 1):t0 + 1]) == state and t0 + 1 >= min(mu, t_now):
                if len(traj[max(0, t0 - mu + 1):t0 + 1]) == len(state):
                    return t0, t_now - t0


def test_dtw_path_traces(path4):
    assert dtw_walk(path4, 0, 1, "min") == Attractor(1, 2)
    assert dtw_walk(path4, 1, 1, "min") == Attractor(0, 2)
    assert dtw_walk(path4, 1, 1, "min").length == 2


def test_dtw_isolated_blocked():
    assert dtw_walk(from_edges(2, []), 0, 1) is None


def test_dtw_path_histogram(path4):
    phi, blocked = dtw_histogram(path4, 1, "min", 5)
    assert phi.tolist() == [0.5, 0.5, 0, 0, 0] and blocked == 0


def test_dtw_matches_brute_force_trace():
    rng = np.random.default_rng(3)
    for _ in range(30):
        g = random_simple_graph(rng, int(rng.integers(4, 25)), 0.2)
        adj = [g.neighbors(i).tolist() for i in range(g.n)]
        deg = g.out_degrees().tolist()
        for mu in (1, 2, 3):
            for rule in ("min", "max"):
                for s in range(g.n):
                    a = dtw_walk(g, s, mu, rule)
                    b = trace(adj, deg, s, mu, rule)
                    assert (None if a is None else tuple(a)) == b


def test_dtw_signature_defaults():
    g = generate(ModelSpec("BA", 60, 4, 0))
    sig = dtw_signature(g)
    assert sig.shape == (20,) == (DtwSpec().length,)
    assert len(DtwSpec().column_names()) == 20
    assert np.all((sig >= 0) & (sig <= 1))
    for block in sig.reshape(4, 5):
        assert block.sum() <= 1 + 1e-12


def test_dtw_signature_order():
    g = generate(ModelSpec("ER", 40, 4, 2))
    sig = dtw_signature(g)
    parts = [dtw_histogram(g, mu, r)[0] for r in ("min", "max") for mu in (1, 2)]
    assert np.array_equal(sig, np.concatenate(parts))


def test_dtw_edgeless():
    assert not dtw_signature(from_edges(5, [])).any()


def test_dtw_mass_equality_iff_nothing_excluded():
    ring = from_edges(8, [(i, (i + 1) % 8) for i in range(8)])
    # all degree differences tie, so the tourist drifts toward node 0 and
    # bounces on (0, 1); from node 5 the length is 5 + 2 = 7 > mu + 5
    phi, blocked = dtw_histogram(ring, 1, "min", 5)
    assert blocked == 0 and phi.sum() == pytest.approx(7 / 8)
    phi, _ = dtw_histogram(ring, 1, "min", 10)
    assert phi.sum() == pytest.approx(1.0)
    phi, blocked = dtw_histogram(from_edges(3, [(0, 1)]), 1, "min", 5)
    assert blocked == 1 and phi.sum() < 1


def test_dtw_bad_rule(k3):
    with pytest.raises(ValueError):
        dtw_walk(k3, 0, 1, "median")
