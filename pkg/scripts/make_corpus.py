#!/usr/bin/env python3
"""Regenerate the bundled synthetic snapshot corpus under tests/fixtures/.

The corpus is deterministic; rerunning this script reproduces identical
files.  Layout:

    tests/fixtures/corpus/<page>.json   snapshot files
    tests/fixtures/truth/<page>.json    ground-truth files
"""
import argparse
import json
from pathlib import Path

from gce.synth import build_boilerplate_only_page, build_corpus, build_invisible_only_page


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    default_root = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
    ap.add_argument("--root", type=Path, default=default_root)
    args = ap.parse_args()

    corpus_dir = args.root / "corpus"
    truth_dir = args.root / "truth"
    special_dir = args.root / "special"
    for d in (corpus_dir, truth_dir, special_dir):
        d.mkdir(parents=True, exist_ok=True)

    pages = build_corpus()
    for page in pages:
        (corpus_dir / f"{page.name}.json").write_text(
            json.dumps(page.snapshot, ensure_ascii=False, indent=1) + "\n",
            encoding="utf-8",
        )
        truth = {"snapshot": page.name, "truthNodeId": page.truth_node_id}
        (truth_dir / f"{page.name}.json").write_text(
            json.dumps(truth) + "\n", encoding="utf-8"
        )
    (special_dir / "boilerplate_only.json").write_text(
        json.dumps(build_boilerplate_only_page(), ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8",
    )
    (special_dir / "invisible_only.json").write_text(
        json.dumps(build_invisible_only_page(), ensure_ascii=False, indent=1) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {len(pages)} corpus pages to {corpus_dir}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
