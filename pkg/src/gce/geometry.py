"""Axis-aligned rectangle helpers in document coordinates.

All geometry here is pure arithmetic on (x, y, w, h) boxes with y growing
downward, matching browser layout coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Rect:
    x: float
    y: float
    w: float
    h: float

    @property
    def area(self) -> float:
        return self.w * self.h

    @property
    def x2(self) -> float:
        return self.x + self.w

    @property
    def y2(self) -> float:
        return self.y + self.h

    def contains_point(self, px: float, py: float) -> bool:
        # closed on all edges
        return self.x <= px <= self.x2 and self.y <= py <= self.y2

    def scaled(self, k: float) -> "Rect":
        return Rect(self.x * k, self.y * k, self.w * k, self.h * k)


def intersection_area(a: Rect, b: Rect) -> float:
    w = min(a.x2, b.x2) - max(a.x, b.x)
    h = min(a.y2, b.y2) - max(a.y, b.y)
    if w <= 0 or h <= 0:
        return 0.0
    return w * h


def overlaps(a: Rect, b: Rect) -> bool:
    """True when the intersection has strictly positive area."""
    return intersection_area(a, b) > 0


def point_rect_dist_sq(px: float, py: float, r: Rect) -> float:
    """Squared Euclidean distance from a point to the nearest point of r.

    Zero when the point lies inside or on the boundary.  Squared form keeps
    comparisons exact for integer coordinates.
    """
    dx = max(r.x - px, 0.0, px - r.x2)
    dy = max(r.y - py, 0.0, py - r.y2)
    return dx * dx + dy * dy


def union_cover_area(clip: Rect, rects: list[Rect]) -> float:
    """Area of (union of rects) ∩ clip.

    Coordinate compression over the clipped boxes: every compressed sub-cell
    is either fully covered by some rect or not at all, so summing covered
    sub-cells is exact.
    """
    clipped = []
    for r in rects:
        x1, y1 = max(r.x, clip.x), max(r.y, clip.y)
        x2, y2 = min(r.x2, clip.x2), min(r.y2, clip.y2)
        if x2 > x1 and y2 > y1:
            clipped.append((x1, y1, x2, y2))
    if not clipped:
        return 0.0
    xs = sorted({v for b in clipped for v in (b[0], b[2])})
    ys = sorted({v for b in clipped for v in (b[1], b[3])})
    total = 0.0
    for i in range(len(xs) - 1):
        x1, x2 = xs[i], xs[i + 1]
        for j in range(len(ys) - 1):
            y1, y2 = ys[j], ys[j + 1]
            for b in clipped:
                if b[0] <= x1 and b[2] >= x2 and b[1] <= y1 and b[3] >= y2:
                    total += (x2 - x1) * (y2 - y1)
                    break
    return total
