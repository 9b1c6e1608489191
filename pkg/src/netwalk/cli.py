"""Command-line entry point: ``netwalk <command> ...``.

Exit codes: 0 success, 2 bad arguments, 3 bad data, 4 internal error.
"""
from __future__ import annotations

import argparse
import logging
import shutil
import sys
from pathlib import Path

import numpy as np

from . import published
from .baselines import DtwSpec
from .classify import cross_validate
from .datasets import DatasetError, LabeledDataset, load_edge_list_dir, load_tudataset, \
    save_dataset
from .features import FeatureSetSpec
from .generators import MODELS, WS_REWIRE, build_noisy_dataset, build_synthetic_dataset, \
    derive_seed
from .graph import GraphError
from .pipeline import METHODS, cv_seed, feature_matrix, feature_set_sweep, memory_sweep, \
    noise_sweep, read_feature_csv, report_row, write_confusion, write_feature_csv, \
    write_rows
from .walks import WalkConfig

log = logging.getLogger("netwalk")


class UsageError(Exception):
    pass


def int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def int_range(text):
    """``1..10``, ``10..100:10`` or ``1,2,5``."""
    out = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                rng, _, step = part.partition(":")
                lo, hi = rng.split("..")
                out.extend(range(int(lo), int(hi) + 1, int(step or 1)))
            elif part:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer range {text!r}")
    if not out:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def noise_levels(text):
    levels = int_range(text)
    bad = [p for p in levels if not 0 <= p <= 100]
    if bad:
        raise argparse.ArgumentTypeError(f"noise levels must lie in 0..100, got {bad}")
    return levels


def feature_spec(text, memories, normalize=False):
    """Parse ``--features``: comma list of ``saw``, ``length``, ``visits``, ``lmw``, ``full``."""
    tokens = {t.strip() for t in text.split(",") if t.strip()}
    unknown = tokens - {"saw", "length", "visits", "lmw", "full"}
    if unknown:
        raise UsageError(f"unknown feature block(s): {', '.join(sorted(unknown))}")
    full = "full" in tokens
    return FeatureSetSpec(
        include_saw_lengths=full or "saw" in tokens or "length" in tokens,
        include_saw_visits=full or "saw" in tokens or "visits" in tokens,
        lmw_memories=tuple(memories) if (full or "lmw" in tokens) else (),
        normalize_lengths_by_n=normalize)


def walk_config(args):
    return WalkConfig(walkers=args.walkers, max_steps=args.max_steps,
                      memories=tuple(args.memories), seed=args.seed,
                      window_includes_current=args.window == "current")


def load_input(args) -> LabeledDataset:
    if getattr(args, "tudataset", None):
        if not args.name:
            raise UsageError("--tudataset needs --name")
        return load_tudataset(args.tudataset, args.name, directed=args.directed)
    if not args.input:
        raise UsageError("give --input MANIFEST or --tudataset DIR --name NAME")
    return load_edge_list_dir(args.input)


def _prepare_out(path, force):
    path = Path(path)
    occupied = any(path.iterdir()) if path.is_dir() else path.exists()
    if occupied:
        if not force:
            raise UsageError(f"{path} exists; pass --force to overwrite")
        shutil.rmtree(path) if path.is_dir() else path.unlink()
    return path


# -- commands ---------------------------------------------------------------------

def cmd_generate(args):
    models = MODELS if args.models == "all" else tuple(args.models.split(","))
    unknown = set(models) - set(MODELS)
    if unknown:
        raise UsageError(f"unknown model(s) {sorted(unknown)}; choose from {MODELS}")
    odd = [k for k in args.degrees if k % 2]
    if odd and ({"WS", "BA"} & set(models)):
        raise UsageError(f"WS and BA need even average degrees; got {odd}")
    small = [(n, k) for n in args.sizes for k in args.degrees if k >= n]
    if small:
        raise UsageError(f"average degree must be below the node count; got (n, k) {small}")
    ds = build_synthetic_dataset(args.sizes, args.degrees, args.per_cell, args.seed, models,
                                 rewire_prob=args.rewire_prob)
    out = _prepare_out(args.out, args.force)
    manifest = save_dataset(ds, out)
    print(f"wrote {len(ds)} graphs to {manifest}")


def cmd_perturb(args):
    base = load_input(args)
    out = Path(args.out)
    noisy = build_noisy_dataset(base, args.levels, seed=derive_seed(args.seed, "noise"))
    for p, ds in noisy.items():
        d = _prepare_out(out / f"p{p:03d}", args.force)
        save_dataset(ds, d)
    print(f"wrote {len(noisy)} noisy datasets under {out}")


def _extract(args, ds):
    cfg = walk_config(args)
    spec = feature_spec(args.features, cfg.memories, args.normalize_lengths)
    dtw = DtwSpec(tuple(args.dtw_memories), tuple(args.dtw_rules.split(",")), args.dtw_width)
    return feature_matrix(ds.graphs, args.method, cfg, spec, dtw, args.threads)


def cmd_extract(args):
    ds = load_input(args)
    X, names = _extract(args, ds)
    write_feature_csv(args.out, X, names, ds.labels)
    print(f"wrote {X.shape[0]} x {X.shape[1]} feature matrix to {args.out}")


def cmd_classify(args):
    X, _, y = read_feature_csv(args.features)
    if len(np.unique(y)) < 2:
        raise ValueError("classification needs at least two classes")
    rep = cross_validate(X, y, args.folds, cv_seed(args.seed),
                         stratified=not args.no_stratify)
    name = args.dataset or Path(args.features).stem
    write_rows(args.out, [report_row(rep, feature_set=args.feature_set, dataset=name)])
    if args.confusion:
        write_confusion(args.confusion, rep)
    print(f"accuracy {rep.mean:.1f} ({rep.std:.1f})")


def cmd_benchmark(args):
    if args.kind == "reference":
        write_rows(args.out, published.rows())
        return
    ds = load_input(args)
    cfg = walk_config(args)
    y = np.array(ds.labels)
    if args.kind == "noise":
        spec = feature_spec(args.features, cfg.memories, args.normalize_lengths)
        dtw = DtwSpec(tuple(args.dtw_memories), tuple(args.dtw_rules.split(",")),
                      args.dtw_width)
        methods = tuple(args.methods.split(","))
        bad = set(methods) - set(METHODS)
        if bad:
            raise UsageError(f"unknown method(s) {sorted(bad)}")
        rows = noise_sweep(ds, args.levels, methods, cfg, spec, dtw, args.folds,
                           args.seed, args.threads)
    else:
        X, names = feature_matrix(ds.graphs, "randomwalk", cfg,
                                  FeatureSetSpec.full(cfg.memories), threads=args.threads)
        sweep = feature_set_sweep if args.kind == "feature-sets" else memory_sweep
        rows = sweep(X, names, y, cfg.memories, ds.name, args.folds, args.seed, args.threads)
    write_rows(args.out, rows)
    print(f"wrote {len(rows)} rows to {args.out}")


# -- argument parsing ---------------------------------------------------------------

def _input_args(p):
    p.add_argument("--input", help="dataset manifest CSV (or its directory)")
    p.add_argument("--tudataset", metavar="DIR", help="TUDataset bundle directory")
    p.add_argument("--name", help="TUDataset name, e.g. IMDB-MULTI")
    p.add_argument("--directed", action="store_true", help="treat TUDataset edges as directed")


def _walk_args(p):
    p.add_argument("--walkers", type=int, default=10, help="walkers per node (default 10)")
    p.add_argument("--max-steps", type=int, default=None,
                   help="step cap for RW/LMW (default: node count)")
    p.add_argument("--memories", type=int_range, default=list(range(1, 11)),
                   help="LMW memory sizes (default 1..10)")
    p.add_argument("--window", choices=("current", "previous"), default="current",
                   help="whether the LMW memory window includes the current node")
    p.add_argument("--features", default="saw",
                   help="blocks: saw, length, visits, lmw, full (default saw)")
    p.add_argument("--normalize-lengths", action="store_true",
                   help="divide SAW lengths by the node count")
    p.add_argument("--dtw-memories", type=int_list, default=[1, 2])
    p.add_argument("--dtw-rules", default="min,max")
    p.add_argument("--dtw-width", type=int, default=5)


def _common(p):
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $NETWALK_THREADS or CPU count)")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(prog="netwalk",
                                     description="Network classification with random-walk statistics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate the synthetic 4-model dataset")
    p.add_argument("--models", default="all", help="'all' or comma list of BA,ER,WS,Waxman")
    p.add_argument("--sizes", type=int_list, default=[500, 1000, 1500, 2000])
    p.add_argument("--degrees", type=int_list, default=[4, 6, 8, 10, 12, 14, 16])
    p.add_argument("--per-cell", type=int, default=10)
    p.add_argument("--rewire-prob", type=float, default=WS_REWIRE)
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("perturb", help="Link Change noise at several rates")
    _input_args(p)
    p.add_argument("--levels", type=noise_levels, default=list(range(10, 101, 10)))
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true")
    _common(p)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("extract", help="write a feature matrix CSV")
    _input_args(p)
    p.add_argument("--method", choices=METHODS, default="randomwalk")
    _walk_args(p)
    p.add_argument("--out", required=True)
    _common(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("classify", help="LDA k-fold cross-validation on a feature CSV")
    p.add_argument("--features", required=True, help="feature matrix CSV")
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--no-stratify", action="store_true")
    p.add_argument("--dataset", help="dataset name for the report")
    p.add_argument("--feature-set", default="", help="feature-set name for the report")
    p.add_argument("--confusion", help="optional confusion-matrix CSV")
    p.add_argument("--out", required=True)
    _common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("benchmark", help="accuracy sweeps")
    p.add_argument("kind", choices=("feature-sets", "memory-sweep", "noise", "reference"))
    _input_args(p)
    _walk_args(p)
    p.add_argument("--levels", type=noise_levels, default=list(range(0, 101, 10)))
    p.add_argument("--methods", default=",".join(METHODS))
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--out", required=True)
    _common(p)
    p.set_defaults(func=cmd_benchmark)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        args.func(args)
    except UsageError as exc:
        print(f"netwalk: error: {exc}", file=sys.stderr)
        return 2
    except (DatasetError, GraphError, ValueError, OSError) as exc:
        print(f"netwalk: data error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover
        log.exception("internal error")
        print(f"netwalk: internal error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
