"""Main content extraction with the grid-centering-expanding method.

Pipeline: parse a rendered-DOM snapshot, drop fixed/invisible boilerplate,
label link-dense regions by area, lay a grid over the first browsing area,
derive three center points, seed at their nearest text leaves, ascend the
DOM to collect candidates, and pick the densest one.  The metrics module
scores extractions against ground truth with character-LCS and text-block
matching.
"""
from .centering import Centers, Point, band_diagnostics, compute_centers, nearest_leaf
from .expanding import (
    CandidateSet,
    collect_candidates,
    run_gce,
    run_gce_traced,
    select_main_content,
    text_area_density,
)
from .geometry import Rect
from .grid import FbaGrid, GridConfig, build_fba_grid, exclude_cells, row_count
from .links import (
    compute_density_map,
    label_text_leaves,
    link_area_density,
    mark_link_containers,
)
from .metrics import ScoreReport, block_match_scores, fscores, lcs_length, lcs_scores
from .snapshot import (
    ExtractionResult,
    GroundTruth,
    PageSnapshot,
    SnapshotNode,
    parse_ground_truth,
    parse_snapshot,
    preprocess,
    scale_snapshot,
    serialize_snapshot,
    subtree_text,
    text_leaf_ids,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateSet",
    "Centers",
    "ExtractionResult",
    "FbaGrid",
    "GridConfig",
    "GroundTruth",
    "PageSnapshot",
    "Point",
    "Rect",
    "ScoreReport",
    "SnapshotNode",
    "band_diagnostics",
    "block_match_scores",
    "build_fba_grid",
    "collect_candidates",
    "compute_centers",
    "compute_density_map",
    "exclude_cells",
    "fscores",
    "label_text_leaves",
    "lcs_length",
    "lcs_scores",
    "link_area_density",
    "mark_link_containers",
    "nearest_leaf",
    "parse_ground_truth",
    "parse_snapshot",
    "preprocess",
    "row_count",
    "run_gce",
    "run_gce_traced",
    "scale_snapshot",
    "select_main_content",
    "serialize_snapshot",
    "subtree_text",
    "text_area_density",
    "text_leaf_ids",
]
