"""Center points from the grid, nearest-leaf seeds, and band diagnostics.

Three hypothetical user foci: the centroid of the included grid cells, that
centroid pulled toward the window center, and pulled further toward the
document center.  Each seed is the closest low-link-density text leaf.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import NoTextLeaves
from .geometry import Rect, overlaps, point_rect_dist_sq
from .grid import FbaGrid
from .links import LOW
from .snapshot import PageSnapshot

BAND_CENTERS = "centers"  # full-width strip between the two centers' heights
BAND_LITERAL = "literal"  # zero-width segment at x=0 between the two heights


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Centers:
    c1: Point
    c2: Point
    c3: Point
    midpoint: Point
    band: Rect


def window_center(s: PageSnapshot) -> Point:
    return Point(s.window[0] / 2, s.window[1] / 2)


def document_center(s: PageSnapshot) -> Point:
    return Point(s.document[0] / 2, s.document[1] / 2)


def midpoint_of(s: PageSnapshot) -> Point:
    w0, h0 = s.window
    w1, h1 = s.document
    return Point((w0 + w1) / 4, (h0 + h1) / 4)


def extraction_band(s: PageSnapshot, mode: str = BAND_CENTERS) -> Rect:
    h0, h1 = s.window[1], s.document[1]
    lo, hi = min(h0, h1), max(h0, h1)
    if mode == BAND_LITERAL:
        return Rect(0.0, lo, 0.0, hi - lo)
    if mode != BAND_CENTERS:
        raise ValueError(f"unknown band mode {mode!r}")
    return Rect(0.0, lo / 2, s.document[0], hi / 2 - lo / 2)


def _centroid(points: list[Point]) -> Point:
    n = len(points)
    return Point(sum(p.x for p in points) / n, sum(p.y for p in points) / n)


def compute_centers(
    g: Optional[FbaGrid], s: PageSnapshot, band_mode: str = BAND_CENTERS
) -> Centers:
    """C1 from the included cells, C2 mixing in the window center, C3 mixing
    in both centers.  With no usable cells, the window center stands in for
    the whole grid."""
    cw = window_center(s)
    cd = document_center(s)
    va = [Point(x, y) for x, y in g.included_centers()] if g is not None else []
    if not va:
        va = [cw]
    return Centers(
        c1=_centroid(va),
        c2=_centroid(va + [cw]),
        c3=_centroid(va + [cw, cd]),
        midpoint=midpoint_of(s),
        band=extraction_band(s, band_mode),
    )


def nearest_leaf(s: PageSnapshot, labels: dict[int, str], p: Point) -> int:
    """The low-density text leaf whose box is closest to p.

    Distance is point-to-rectangle (zero inside the box); ties go to the
    leaf earliest in document order.
    """
    best_id = None
    best_d = None
    for n in s.nodes:
        if labels.get(n.id) != LOW:
            continue
        d = point_rect_dist_sq(p.x, p.y, n.rect)
        if best_d is None or d < best_d:
            best_id, best_d = n.id, d
    if best_id is None:
        raise NoTextLeaves("no low-density text leaf to seed from")
    return best_id


def band_diagnostics(
    s: PageSnapshot, truth_node_id: int, band_mode: str = BAND_CENTERS
) -> tuple[bool, bool]:
    """(midpoint inside the truth box, band overlaps the truth box)."""
    truth_rect = s.node(truth_node_id).rect
    mp = midpoint_of(s)
    band = extraction_band(s, band_mode)
    return truth_rect.contains_point(mp.x, mp.y), overlaps(band, truth_rect)
