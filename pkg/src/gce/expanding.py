"""DOM ascent from seed leaves, text-density scoring, and final selection.

From each seed leaf the tree is walked toward <body>; three rules each grab
the first ancestor that fires (the <article> tag, the words "article" or
"content" in id/class, a sudden width jump).  Candidates tall enough to be
scored compete on text node area density; the winner per center is ranked
against the other centers' winners.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .centering import Centers, compute_centers, nearest_leaf
from .errors import (
    AllCellsExcluded,
    EmptyDocument,
    NoTextLeaves,
    ZeroArea,
)
from .grid import FbaGrid, GridConfig, build_fba_grid, exclude_cells
from .links import LOW, compute_density_map, label_text_leaves, mark_link_containers
from .snapshot import (
    ExtractionResult,
    PageSnapshot,
    Provenance,
    failed_result,
    preprocess,
    subtree_text,
    text_leaf_ids,
)

ATTR_WORDS = ("article", "content")
RULES = ("tag", "attr", "diff")
_RULE_RANK = {"tag": 2, "attr": 1, "diff": 0}

BEST = "best"
NOBEST = "nobest"

# candidate preference: later centers first, best class before nobest
DEFAULT_ORDER: tuple[tuple[int, str], ...] = (
    (3, BEST),
    (2, BEST),
    (1, BEST),
    (3, NOBEST),
    (2, NOBEST),
    (1, NOBEST),
)


@dataclass
class CandidateSet:
    center_index: int
    m_tag: Optional[int] = None
    m_attr: Optional[int] = None
    m_diff: Optional[int] = None

    def slots(self) -> list[tuple[str, int]]:
        out = []
        for rule, nid in (("tag", self.m_tag), ("attr", self.m_attr), ("diff", self.m_diff)):
            if nid is not None:
                out.append((rule, nid))
        return out


def _attrs_match(node) -> bool:
    hay = (node.attr_id + " " + node.attr_class).lower()
    return any(w in hay for w in ATTR_WORDS)


def collect_candidates(
    s: PageSnapshot, leaf_id: int, width_ratio: float, center_index: int = 0
) -> CandidateSet:
    """Single ascent from a seed leaf; each rule slot is set at most once."""
    cand = CandidateSet(center_index=center_index)
    n = s.node(leaf_id)
    while n.parent_id is not None and n.tag != "body":
        p = s.node(n.parent_id)
        if cand.m_tag is None and p.tag == "article":
            cand.m_tag = p.id
        if cand.m_attr is None and _attrs_match(p):
            cand.m_attr = p.id
        if cand.m_diff is None and p.rect.w > n.rect.w * width_ratio:
            cand.m_diff = p.id
        n = p
    return cand


def text_area_density(
    s: PageSnapshot, labels: dict[int, str], element_id: int
) -> Optional[float]:
    """Low-density text-leaf area under the element over its own area.

    None marks a candidate that cannot be scored: the <body> element, or a
    node shorter than half the window.
    """
    node = s.node(element_id)
    h0 = s.window[1]
    if node.tag == "body" or node.rect.h < h0 / 2:
        return None
    if node.rect.area == 0:
        raise ZeroArea(element_id)
    total = 0.0
    for d in s.descendants(element_id):
        if d.is_text and labels.get(d.id) == LOW:
            total += d.rect.area
    return total / node.rect.area


def _pick_for_center(
    s: PageSnapshot, labels: dict[int, str], cand: CandidateSet
) -> tuple[Optional[tuple[int, str]], Optional[tuple[int, str]]]:
    """((best node, rule), (nobest node, rule)) for one ascent, either may be
    None.  Best is the scoreable slot with maximal density, ties to the
    smaller box then document order."""
    scored: list[tuple[float, float, int, int, int, str]] = []
    unscored: list[tuple[str, int]] = []
    for rule, nid in cand.slots():
        try:
            d_t = text_area_density(s, labels, nid)
        except ZeroArea:
            d_t = None  # degenerate box: cannot be scored
        if d_t is None:
            unscored.append((rule, nid))
        else:
            node = s.node(nid)
            scored.append(
                (d_t, -node.rect.area, -s.doc_order(nid), _RULE_RANK[rule], nid, rule)
            )
    if scored:
        nid, rule = max(scored)[4:]
        return (nid, rule), None
    if unscored:
        # fallback: prefer anything over <body>, then tag > attr > diff
        non_body = [(r, n) for r, n in unscored if s.node(n).tag != "body"]
        rule, nid = (non_body or unscored)[0]
        return None, (nid, rule)
    return None, None


def select_main_content(
    sets: list[CandidateSet],
    s: PageSnapshot,
    labels: dict[int, str],
    order: tuple[tuple[int, str], ...] = DEFAULT_ORDER,
) -> ExtractionResult:
    """Rank per-center winners and build the result.

    A <body>-valued entry is never returned as main content; when nothing
    but <body> (or nothing at all) is on offer, the extraction failed.
    """
    chosen: dict[tuple[int, str], tuple[int, str]] = {}
    for cand in sets:
        best, nobest = _pick_for_center(s, labels, cand)
        if best is not None:
            chosen[(cand.center_index, BEST)] = best
        if nobest is not None:
            chosen[(cand.center_index, NOBEST)] = nobest
    for center, cls in order:
        entry = chosen.get((center, cls))
        if entry is None:
            continue
        nid, rule = entry
        if s.node(nid).tag == "body":
            continue
        return ExtractionResult(
            main_node_id=nid,
            text=subtree_text(s, nid),
            text_leaf_ids=text_leaf_ids(s, nid),
            provenance=Provenance(center=center, rule=rule, cls=cls),
            failed=False,
        )
    return failed_result("all-candidates-body" if chosen else "no-candidates")


@dataclass
class PipelineTrace:
    """Intermediate artifacts of one extraction, for --explain/--dump-grid."""

    snapshot: PageSnapshot  # preprocessed
    grid: FbaGrid
    centers: Centers
    seeds: list[int]
    candidate_sets: list[CandidateSet]
    densities: dict[int, float]
    labels: dict[int, str]

    def candidate_table(self) -> list[dict]:
        rows = []
        for cand in self.candidate_sets:
            for rule, nid in cand.slots():
                try:
                    d_t = text_area_density(self.snapshot, self.labels, nid)
                except ZeroArea:
                    d_t = None
                rows.append(
                    {
                        "center": cand.center_index,
                        "rule": rule,
                        "nodeId": nid,
                        "dT": d_t,
                        "class": BEST if d_t is not None else NOBEST,
                    }
                )
        return rows


def run_gce(
    s: PageSnapshot,
    cfg: GridConfig,
    selection_order: tuple[tuple[int, str], ...] = DEFAULT_ORDER,
) -> ExtractionResult:
    result, _ = run_gce_traced(s, cfg, selection_order)
    return result


def run_gce_traced(
    s: PageSnapshot,
    cfg: GridConfig,
    selection_order: tuple[tuple[int, str], ...] = DEFAULT_ORDER,
) -> tuple[ExtractionResult, Optional[PipelineTrace]]:
    """Full pipeline on a raw snapshot; deterministic for fixed inputs.

    Document-level failures (nothing visible, nothing but link text) come
    back as failed results with a reason code rather than exceptions.
    """
    cfg.validate()
    try:
        pre = preprocess(s)
    except EmptyDocument:
        return failed_result("empty-document"), None

    containers = mark_link_containers(pre)
    densities = compute_density_map(pre, containers)
    labels = label_text_leaves(pre, containers, densities, cfg.beta)

    grid = build_fba_grid(cfg, pre)
    try:
        grid = exclude_cells(grid, pre, densities, cfg)
    except AllCellsExcluded:
        # keep the fully-excluded mask; centers fall back to the window center
        grid = replace(grid, excluded=[[True] * grid.cols for _ in range(grid.n_rows)])
    centers = compute_centers(grid, pre)

    try:
        seeds = [
            nearest_leaf(pre, labels, centers.c1),
            nearest_leaf(pre, labels, centers.c2),
            nearest_leaf(pre, labels, centers.c3),
        ]
    except NoTextLeaves:
        return failed_result("no-text-leaves"), None

    sets = [
        collect_candidates(pre, leaf, cfg.width_ratio, center_index=i + 1)
        for i, leaf in enumerate(seeds)
    ]
    result = select_main_content(sets, pre, labels, order=selection_order)
    trace = PipelineTrace(
        snapshot=pre,
        grid=grid,
        centers=centers,
        seeds=seeds,
        candidate_sets=sets,
        densities=densities,
        labels=labels,
    )
    return result, trace
