"""
Robustness to Link Change noise
===============================

Perturbs the synthetic dataset at increasing noise rates and tracks the
accuracy of each feature extractor, plus the average relative drop.
"""
from netwalk import build_synthetic_dataset, published
from netwalk.pipeline import average_drop, noise_sweep
from netwalk.walks import WalkConfig

ds = build_synthetic_dataset(sizes=(200,), degrees=(4, 6, 8), per_cell=10, seed=3)
rows = noise_sweep(ds, levels=[0, 20, 40, 60, 80, 100], cfg=WalkConfig(), seed=3)

for r in rows:
    print(f"{r['method']:11s} p={r['p']:3d}  {float(r['mean_acc']):5.1f}")

# %%
for method, ref in [("randomwalk", "Random walks"), ("structural", "Structural"),
                    ("dtw", "DTW")]:
    print(f"{method:11s} average drop {average_drop(rows, method):5.1f}%  "
          f"(published {published.NOISE_DROP[ref]}%)")
