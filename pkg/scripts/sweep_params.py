#!/usr/bin/env python3
"""Sweep extraction parameters over the bundled corpus and report mean
block-matching F1 per setting.

Example:
    python scripts/sweep_params.py --grids 4x6 6x8 7x8 --alphas 1 2 3
"""
import argparse
import itertools
import json

from gce.expanding import run_gce
from gce.grid import GridConfig
from gce.metrics import block_match_scores, mean_report
from gce.snapshot import parse_snapshot, preprocess, text_leaf_ids
from gce.synth import build_corpus


def parse_grid(text: str) -> tuple[int, int]:
    rows, _, cols = text.partition("x")
    return int(rows), int(cols)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grids", nargs="+", default=["4x6", "6x8", "7x8", "8x8"])
    ap.add_argument("--alphas", nargs="+", type=float, default=[1.0, 2.0, 3.0])
    ap.add_argument("--betas", nargs="+", type=float, default=[0.3, 0.5, 0.7])
    ap.add_argument("--ratios", nargs="+", type=float, default=[1.3, 1.5, 1.7])
    ap.add_argument("--out", help="also write rows as JSON")
    args = ap.parse_args()

    pages = [
        (p.truth_node_id, parse_snapshot(json.dumps(p.snapshot)))
        for p in build_corpus()
    ]
    rows = []
    combos = itertools.product(
        [parse_grid(g) for g in args.grids], args.alphas, args.betas, args.ratios
    )
    for (g_rows, g_cols), alpha, beta, ratio in combos:
        cfg = GridConfig(rows=g_rows, cols=g_cols, alpha=alpha, beta=beta,
                         width_ratio=ratio)
        reports = []
        failures = 0
        for truth_id, s in pages:
            result = run_gce(s, cfg)
            failures += result.failed
            truth_ids = text_leaf_ids(preprocess(s), truth_id)
            reports.append(block_match_scores(result.text_leaf_ids, truth_ids))
        mean = mean_report("block", reports)
        rows.append({
            "grid": f"{g_rows}x{g_cols}", "alpha": alpha, "beta": beta,
            "ratio": ratio, "meanF1": round(mean.f1, 4), "failures": failures,
        })

    rows.sort(key=lambda r: -r["meanF1"])
    print(f"{'grid':>6} {'alpha':>6} {'beta':>6} {'ratio':>6} {'meanF1':>8} {'fail':>5}")
    for r in rows:
        print(f"{r['grid']:>6} {r['alpha']:>6} {r['beta']:>6} {r['ratio']:>6} "
              f"{r['meanF1']:>8} {r['failures']:>5}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(rows, f, indent=2)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
