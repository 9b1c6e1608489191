"""
Visit profiles of the three walk types
======================================

Runs traditional (RW), self-avoiding (SAW) and limited-memory (LMW) walks on a
small graph and compares the Monte Carlo visit profiles with exact values
obtained by enumerating every trajectory.
"""
from collections import defaultdict

import numpy as np

from netwalk import WalkConfig, expected_rw_frequencies, from_edges, run_lmw, run_rw, run_saw

# two triangles joined by a bridge, plus a pendant node
g = from_edges(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 4), (5, 6)])
cfg = WalkConfig(walkers=5000, max_steps=7, seed=1)

# %%
# Traditional walk against the transition-matrix expectation
rw = run_rw(g, cfg)
print("RW  empirical:", np.round(rw.visits, 3))
print("RW  exact:    ", np.round(expected_rw_frequencies(g, 7), 3))

# %%
# Self-avoiding walk: exact visits by enumerating all self-avoiding paths
adj = [g.neighbors(i).tolist() for i in range(g.n)]
exact = np.zeros(g.n)
lengths = defaultdict(float)


def walk(path, p):
    options = [v for v in adj[path[-1]] if v not in path]
    if not options:
        lengths[len(path) - 1] += p / g.n
        return
    for v in options:
        exact[v] += p / len(options) / g.n
        walk(path + [v], p / len(options))


for s in range(g.n):
    walk([s], 1.0)

saw, saw_lengths = run_saw(g, cfg)
print("SAW empirical:", np.round(saw.visits, 3))
print("SAW exact:    ", np.round(exact, 3))
print("SAW mean length empirical %.3f exact %.3f"
      % (saw_lengths.mean(), sum(k * p for k, p in lengths.items())))

# %%
# Memory interpolates between RW (m = 1) and SAW (m >= N)
for m in (1, 2, 3, 7):
    lmw = run_lmw(g, m, cfg)
    print(f"LMW m={m}: mean steps per walker {lmw.total_steps / (g.n * cfg.walkers):.2f}")
