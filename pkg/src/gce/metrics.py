"""Extraction quality scores: character LCS and text-block matching.

Both measures report precision/recall with F1 and F0.5; F0.5 penalizes
whole-page results whose recall is trivially high.  LCS works on characters
so CJK and Arabic text score the same way as space-separated languages.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import CrossSnapshotIds
from .snapshot import PageSnapshot

LCS_MEASURE = "lcs"
BLOCK_MEASURE = "block"

LCS_INPUT_CAP = 200_000  # characters; longer inputs are cut and flagged


@dataclass(frozen=True)
class ScoreReport:
    measure: str
    precision: float
    recall: float
    f1: float
    f05: float
    truncated: bool = False

    def to_json_dict(self) -> dict:
        return {
            "measure": self.measure,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "f05": self.f05,
            "truncated": self.truncated,
        }


def fscores(precision: float, recall: float) -> tuple[float, float]:
    """(F1, F0.5); zero whenever the denominator vanishes."""
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    denom = 0.25 * precision + recall
    f05 = 1.25 * precision * recall / denom if denom > 0 else 0.0
    return f1, f05


def _report(measure: str, p: float, r: float, truncated: bool = False) -> ScoreReport:
    f1, f05 = fscores(p, r)
    return ScoreReport(measure, p, r, f1, f05, truncated)


def lcs_length(a: str, b: str) -> int:
    """Exact character-level longest-common-subsequence length.

    Bit-parallel over Python bigints: one mask per distinct character of a,
    one add/or sweep per character of b.  Shared prefix/suffix is peeled
    off first, which makes the common near-identical case cheap.
    """
    # peel common prefix
    lo = 0
    hi = min(len(a), len(b))
    while lo < hi and a[lo] == b[lo]:
        lo += 1
    common = lo
    a, b = a[lo:], b[lo:]
    # peel common suffix
    k = 0
    while k < min(len(a), len(b)) and a[len(a) - 1 - k] == b[len(b) - 1 - k]:
        k += 1
    common += k
    if k:
        a, b = a[:-k], b[:-k]
    if not a or not b:
        return common

    m = len(a)
    mask = (1 << m) - 1
    char_masks: dict[str, int] = {}
    for i, ch in enumerate(a):
        char_masks[ch] = char_masks.get(ch, 0) | (1 << i)
    v = mask
    for ch in b:
        cm = char_masks.get(ch)
        if cm is None:
            continue
        u = v & cm
        v = ((v + u) & mask) | (v & (mask ^ cm))
    # zero bits of v mark matched positions of a
    return common + m - bin(v).count("1")


def lcs_scores(extracted: str, truth: str, cap: int = LCS_INPUT_CAP) -> ScoreReport:
    """Precision = LCS/|extracted|, recall = LCS/|truth|."""
    truncated = len(extracted) > cap or len(truth) > cap
    if truncated:
        extracted, truth = extracted[:cap], truth[:cap]
    n = lcs_length(extracted, truth)
    p = n / len(extracted) if extracted else 0.0
    r = n / len(truth) if truth else 0.0
    return _report(LCS_MEASURE, p, r, truncated)


def block_match_scores(
    extracted_ids: Iterable[int],
    truth_ids: Iterable[int],
    snapshot: Optional[PageSnapshot] = None,
) -> ScoreReport:
    """Set overlap of text-node identities, every leaf weighted equally.

    When a snapshot is supplied, ids are checked against it; unknown ids mean
    the sets were taken from different snapshots.
    """
    ex = set(extracted_ids)
    tr = set(truth_ids)
    if snapshot is not None:
        for nid in ex | tr:
            if not snapshot.has_node(nid):
                raise CrossSnapshotIds(f"id {nid} is not in the snapshot")
    matches = len(ex & tr)
    p = matches / len(ex) if ex else 0.0
    r = matches / len(tr) if tr else 0.0
    return _report(BLOCK_MEASURE, p, r)


def failed_scores(measure: str) -> ScoreReport:
    """All-zero report for a failed extraction."""
    return ScoreReport(measure, 0.0, 0.0, 0.0, 0.0)


def mean_report(measure: str, reports: list[ScoreReport]) -> ScoreReport:
    """Arithmetic mean of each score column (not recomputed from mean P/R)."""
    if not reports:
        return ScoreReport(measure, 0.0, 0.0, 0.0, 0.0)
    n = len(reports)
    return ScoreReport(
        measure=measure,
        precision=sum(r.precision for r in reports) / n,
        recall=sum(r.recall for r in reports) / n,
        f1=sum(r.f1 for r in reports) / n,
        f05=sum(r.f05 for r in reports) / n,
        truncated=any(r.truncated for r in reports),
    )
