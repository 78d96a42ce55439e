"""Command-line interface: extract one page, evaluate a corpus, or report
midpoint/band hit rates.

Exit codes: 0 success, 1 input or configuration error, 2 failed extraction.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from .centering import BAND_CENTERS, BAND_LITERAL, band_diagnostics
from .config import RunConfig, apply_overrides, load_run_config
from .errors import EmptyDocument, GceError, MissingTruth
from .expanding import run_gce, run_gce_traced
from .metrics import (
    BLOCK_MEASURE,
    LCS_MEASURE,
    ScoreReport,
    block_match_scores,
    failed_scores,
    lcs_scores,
    mean_report,
)
from .snapshot import (
    PageSnapshot,
    parse_ground_truth,
    parse_snapshot,
    preprocess,
    subtree_text,
    text_leaf_ids,
    validate_truth,
)

MEAN_ROW = "__mean__"


def _load_config(args) -> RunConfig:
    cfg = load_run_config(args.config) if args.config else RunConfig()
    return apply_overrides(
        cfg,
        band_mode=getattr(args, "band_mode", None),
        jobs=getattr(args, "jobs", None),
        out=getattr(args, "out", None),
    )


def _dump_config(cfg: RunConfig, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(
            json.dumps(cfg.to_json_dict(), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )


def _write_or_print(payload: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(payload, encoding="utf-8")
    else:
        print(payload)


# --- extract ----------------------------------------------------------------

def cmd_extract(args) -> int:
    try:
        cfg = _load_config(args)
        _dump_config(cfg, args.dump_config)
        data = Path(args.snapshot).read_bytes()
        s = parse_snapshot(data)
    except (OSError, GceError, ValueError) as e:
        print(f"error: {args.snapshot}: {e}", file=sys.stderr)
        return 1
    try:
        result, trace = run_gce_traced(s, cfg.grid, cfg.selection_order)
    except GceError as e:
        print(f"error: {args.snapshot}: {e}", file=sys.stderr)
        return 1
    if args.dump_grid and trace is not None:
        Path(args.dump_grid).write_text(
            json.dumps(trace.grid.to_json_dict(), indent=2), encoding="utf-8"
        )
    if args.explain and trace is not None:
        for row in trace.candidate_table():
            d = "-" if row["dT"] is None else f"{row['dT']:.6f}"
            print(
                f"center={row['center']} rule={row['rule']} node={row['nodeId']} "
                f"dT={d} class={row['class']}",
                file=sys.stderr,
            )
    payload = json.dumps(result.to_json_dict(), ensure_ascii=False, indent=2) + "\n"
    _write_or_print(payload, cfg.out)
    return 2 if result.failed else 0


# --- shared corpus walking ---------------------------------------------------

def _corpus_pages(corpus_dir: str, truth_dir: str) -> tuple[list[tuple[str, Path, Path]], list[str]]:
    """Sorted (stem, snapshot path, truth path) triples plus missing-truth stems."""
    corpus = Path(corpus_dir)
    snaps = sorted(corpus.glob("*.json"))
    pages = []
    missing = []
    for p in snaps:
        t = Path(truth_dir) / (p.stem + ".json")
        if not t.exists():
            missing.append(p.stem)
            continue
        pages.append((p.stem, p, t))
    return pages, missing


def _truth_sets(s: PageSnapshot, truth_id: int) -> tuple[str, frozenset[int]]:
    """Truth text and leaf ids, measured on the preprocessed snapshot when the
    annotated node survives preprocessing (it normally does)."""
    try:
        pre = preprocess(s)
    except EmptyDocument:
        pre = s
    src = pre if pre.has_node(truth_id) else s
    return subtree_text(src, truth_id), text_leaf_ids(src, truth_id)


def _external_outputs(external_dir: str, stem: str) -> tuple[str, frozenset[int]]:
    base = Path(external_dir)
    text = ""
    ids: frozenset[int] = frozenset()
    txt_path = base / (stem + ".txt")
    ids_path = base / (stem + ".ids.json")
    if txt_path.exists():
        text = txt_path.read_text(encoding="utf-8")
    if ids_path.exists():
        raw = json.loads(ids_path.read_text(encoding="utf-8"))
        if isinstance(raw, dict):
            raw = raw.get("textLeafIds", [])
        ids = frozenset(int(v) for v in raw)
    return text, ids


def _score_page_safe(task) -> dict:
    """Error-trapping wrapper so one bad page cannot sink a pool run."""
    try:
        return _score_page(task)
    except (GceError, ValueError, OSError) as e:
        return {"page": task[0], "error": str(e)}


def _score_page(task) -> dict:
    """One page's rows for both measures.  Top-level so worker pools can
    pickle it; returns plain dicts for the same reason."""
    stem, snap_path, truth_path, cfg, external_dir = task
    s = parse_snapshot(Path(snap_path).read_bytes())
    gt = parse_ground_truth(Path(truth_path).read_bytes())
    validate_truth(s, gt)
    truth_text, truth_ids = _truth_sets(s, gt.truth_node_id)

    failed = False
    if external_dir is not None:
        ex_text, ex_ids = _external_outputs(external_dir, stem)
    else:
        result = run_gce(s, cfg.grid, cfg.selection_order)
        failed = result.failed
        ex_text, ex_ids = result.text, result.text_leaf_ids

    if failed:
        lcs = failed_scores(LCS_MEASURE)
        block = failed_scores(BLOCK_MEASURE)
    else:
        lcs = lcs_scores(ex_text, truth_text)
        block = block_match_scores(ex_ids, truth_ids, snapshot=s)
    return {
        "page": stem,
        "failed": failed,
        "lcs": lcs.to_json_dict(),
        "block": block.to_json_dict(),
    }


def _report_from_rows(cfg: RunConfig, rows: list[dict]) -> dict:
    by_measure = {LCS_MEASURE: [], BLOCK_MEASURE: []}
    page_rows = []
    for r in rows:
        for measure in (LCS_MEASURE, BLOCK_MEASURE):
            rep = r[measure]
            by_measure[measure].append(
                ScoreReport(
                    measure,
                    rep["precision"],
                    rep["recall"],
                    rep["f1"],
                    rep["f05"],
                    rep["truncated"],
                )
            )
            page_rows.append({"page": r["page"], **rep})
    means = {
        m: mean_report(m, reps).to_json_dict() for m, reps in by_measure.items()
    }
    return {
        "version": 1,
        "config": cfg.science_dict(),
        "pages": page_rows,
        "means": means,
        "failedPages": sorted(r["page"] for r in rows if r["failed"]),
    }


def _report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["page", "measure", "precision", "recall", "f1", "f05"])
    for row in report["pages"]:
        w.writerow(
            [row["page"], row["measure"]]
            + [f"{row[k]:.6f}" for k in ("precision", "recall", "f1", "f05")]
        )
    for measure in (LCS_MEASURE, BLOCK_MEASURE):
        m = report["means"][measure]
        w.writerow(
            [MEAN_ROW, measure]
            + [f"{m[k]:.6f}" for k in ("precision", "recall", "f1", "f05")]
        )
    return buf.getvalue()


def cmd_eval(args) -> int:
    try:
        cfg = _load_config(args)
        _dump_config(cfg, args.dump_config)
    except (OSError, GceError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    pages, missing = _corpus_pages(args.corpus, args.truth)
    for stem in missing:
        print(f"error: {MissingTruth(stem)}; skipped", file=sys.stderr)
    if not pages:
        print("error: no scoreable pages in corpus", file=sys.stderr)
        return 1

    tasks = [
        (stem, str(snap), str(truth), cfg, args.external_dir)
        for stem, snap, truth in pages
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_score_page_safe, tasks))
    else:
        results = [_score_page_safe(task) for task in tasks]
    bad_pages = []
    rows = []
    for r in results:
        if "error" in r:
            bad_pages.append(r["page"])
            print(f"error: page {r['page']!r}: {r['error']}; skipped", file=sys.stderr)
        else:
            rows.append(r)
    if not rows:
        print("error: every page failed to load", file=sys.stderr)
        return 1

    report = _report_from_rows(cfg, rows)
    payload = json.dumps(report, ensure_ascii=False, indent=2) + "\n"
    if cfg.out:
        base = cfg.out[:-5] if cfg.out.endswith(".json") else cfg.out
        Path(base + ".json").write_text(payload, encoding="utf-8")
        Path(base + ".csv").write_text(_report_csv(report), encoding="utf-8")
    else:
        print(payload, end="")
    return 1 if (missing or bad_pages) else 0


# --- stats -------------------------------------------------------------------

def cmd_stats(args) -> int:
    try:
        cfg = _load_config(args)
        _dump_config(cfg, args.dump_config)
    except (OSError, GceError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    pages, missing = _corpus_pages(args.corpus, args.truth)
    for stem in missing:
        print(f"error: {MissingTruth(stem)}; skipped", file=sys.stderr)
    if not pages:
        print("error: no scoreable pages in corpus", file=sys.stderr)
        return 1
    per_page = []
    bad_pages = []
    for stem, snap, truth in pages:
        try:
            s = parse_snapshot(snap.read_bytes())
            gt = parse_ground_truth(truth.read_bytes())
            validate_truth(s, gt)
            hit, overlap = band_diagnostics(s, gt.truth_node_id, cfg.band_mode)
        except (GceError, ValueError, OSError) as e:
            bad_pages.append(stem)
            print(f"error: page {stem!r}: {e}; skipped", file=sys.stderr)
            continue
        per_page.append({"page": stem, "midpointHit": hit, "bandOverlap": overlap})
    if not per_page:
        print("error: every page failed to load", file=sys.stderr)
        return 1
    n = len(per_page)
    summary = {
        "pages": n,
        "midpointHitRate": 100.0 * sum(r["midpointHit"] for r in per_page) / n,
        "bandOverlapRate": 100.0 * sum(r["bandOverlap"] for r in per_page) / n,
        "perPage": per_page,
    }
    payload = json.dumps(summary, ensure_ascii=False, indent=2) + "\n"
    _write_or_print(payload, cfg.out)
    return 1 if (missing or bad_pages) else 0


# --- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gce",
        description="Main content extraction over rendered-DOM snapshots",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="run-config JSON file")
        p.add_argument("--out", help="output path (eval: path prefix for .json/.csv)")
        p.add_argument(
            "--band-mode",
            choices=[BAND_CENTERS, BAND_LITERAL],
            dest="band_mode",
            help="extraction-band interpretation",
        )
        p.add_argument("--dump-config", dest="dump_config", help="write effective config JSON")

    p_ex = sub.add_parser("extract", help="extract main content from one snapshot")
    p_ex.add_argument("snapshot", help="snapshot JSON file")
    common(p_ex)
    p_ex.add_argument("--explain", action="store_true", help="print candidate table to stderr")
    p_ex.add_argument("--dump-grid", dest="dump_grid", help="write grid+mask JSON")
    p_ex.set_defaults(func=cmd_extract)

    p_ev = sub.add_parser("eval", help="score a snapshot corpus against ground truth")
    p_ev.add_argument("corpus", help="directory of snapshot JSON files")
    p_ev.add_argument("truth", help="directory of ground-truth JSON files")
    common(p_ev)
    p_ev.add_argument("--jobs", type=int, help="parallel page workers")
    p_ev.add_argument(
        "--external-dir",
        dest="external_dir",
        help="score third-party outputs (<page>.txt, <page>.ids.json) instead of running extraction",
    )
    p_ev.set_defaults(func=cmd_eval)

    p_st = sub.add_parser("stats", help="midpoint-hit and band-overlap rates")
    p_st.add_argument("corpus", help="directory of snapshot JSON files")
    p_st.add_argument("truth", help="directory of ground-truth JSON files")
    common(p_st)
    p_st.set_defaults(func=cmd_stats)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
