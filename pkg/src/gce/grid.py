"""Checkerboard grid over the first browsing area, with cell exclusion.

The first browsing area is the top slice of the document a user sees on
arrival: the window, stretched downward by the scrolling factor alpha but
never past the document bottom.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .errors import AllCellsExcluded, DegenerateWindow
from .geometry import Rect, union_cover_area
from .snapshot import PageSnapshot

# grid tuned at this window; cell pixel size is held when windows differ
REFERENCE_WINDOW = (1920.0, 1080.0)
DEFAULT_ROWS = 7
DEFAULT_COLS = 8


@dataclass(frozen=True)
class GridConfig:
    rows: int = DEFAULT_ROWS  # base row count (before downward extension)
    cols: int = DEFAULT_COLS
    alpha: float = 2.0  # scrolling threshold, >= 1
    beta: float = 0.5  # link-density threshold for dense areas
    gamma: float = 0.5  # cell coverage fraction that triggers exclusion
    width_ratio: float = 1.7  # parent/child width jump for the expand step
    window: tuple[float, float] = REFERENCE_WINDOW

    def validate(self) -> None:
        if self.rows < 3 or self.cols < 3:
            raise ValueError("grid needs >= 3 rows and >= 3 cols")
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1")
        if self.beta <= 0:
            raise ValueError("beta must be > 0")
        if not (0 < self.gamma <= 1):
            raise ValueError("gamma must be in (0, 1]")
        if self.width_ratio <= 1:
            raise ValueError("width_ratio must be > 1")
        if self.window[0] <= 0 or self.window[1] <= 0:
            raise ValueError("window dims must be > 0")


@dataclass
class FbaGrid:
    cell_w: float
    cell_h: float
    n_rows: int
    cols: int
    excluded: list[list[bool]] = field(default_factory=list)

    def __post_init__(self):
        if not self.excluded:
            self.excluded = [[False] * self.cols for _ in range(self.n_rows)]

    def cell_rect(self, row: int, col: int) -> Rect:
        return Rect(col * self.cell_w, row * self.cell_h, self.cell_w, self.cell_h)

    def cell_center(self, row: int, col: int) -> tuple[float, float]:
        return ((col + 0.5) * self.cell_w, (row + 0.5) * self.cell_h)

    def included_centers(self) -> list[tuple[float, float]]:
        return [
            self.cell_center(r, c)
            for r in range(self.n_rows)
            for c in range(self.cols)
            if not self.excluded[r][c]
        ]

    def to_json_dict(self) -> dict:
        return {
            "cellW": self.cell_w,
            "cellH": self.cell_h,
            "rows": self.n_rows,
            "cols": self.cols,
            "excluded": [list(row) for row in self.excluded],
        }


def resolve_grid_dims(cfg: GridConfig, window: tuple[float, float]) -> tuple[int, int]:
    """Row/col counts for an actual window, keeping the configured cell pixel
    size when the window differs from the config's reference window."""
    if window == cfg.window:
        return cfg.rows, cfg.cols
    ref_cell_h = cfg.window[1] / cfg.rows
    ref_cell_w = cfg.window[0] / cfg.cols
    rows = max(3, round(window[1] / ref_cell_h))
    cols = max(3, round(window[0] / ref_cell_w))
    return rows, cols


def row_count(
    window_h: float, doc_h: float, alpha: float, cell_h: float, base_rows: int | None = None
) -> int:
    """Rows needed to cover the first browsing area.

    ceil(min(alpha*h0, h1) / cell_h) when the document is taller than the
    window, else the base row count.  Rational arithmetic keeps the ceil
    exact over the given operands.
    """
    if base_rows is None:
        base_rows = math.ceil(Fraction(window_h) / Fraction(cell_h))
    if window_h >= doc_h:
        return base_rows
    reach = min(Fraction(alpha) * Fraction(window_h), Fraction(doc_h))
    return math.ceil(reach / Fraction(cell_h))


def build_fba_grid(cfg: GridConfig, s: PageSnapshot) -> FbaGrid:
    """Lay the grid over the first browsing area; no cells excluded yet."""
    cfg.validate()
    rows, cols = resolve_grid_dims(cfg, s.window)
    w0, h0 = s.window
    cell_w = w0 / cols
    cell_h = h0 / rows
    if cell_w < 1 or cell_h < 1:
        raise DegenerateWindow(f"cell {cell_w:.2f}x{cell_h:.2f} is sub-pixel")
    h1 = s.document[1]
    if h0 >= h1:
        n_rows = rows
    else:
        # cell_h is h0/rows by construction, so divide by the exact rational
        # form instead of the rounded float: min(a*h0, h1) * rows / h0
        reach = min(Fraction(cfg.alpha) * Fraction(h0), Fraction(h1))
        n_rows = math.ceil(reach * rows / Fraction(h0))
    return FbaGrid(cell_w=cell_w, cell_h=cell_h, n_rows=n_rows, cols=cols)


def exclude_cells(
    g: FbaGrid, s: PageSnapshot, densities: dict[int, float], cfg: GridConfig
) -> FbaGrid:
    """Mark perimeter cells, cells past the document bottom, and cells mostly
    covered by dense-link areas.  Raises AllCellsExcluded when nothing
    survives."""
    doc_h = s.document[1]
    dense_rects = [
        n.rect
        for n in s.nodes
        if n.is_element and n.visible and densities.get(n.id, 0.0) > cfg.beta
    ]
    mask = [[False] * g.cols for _ in range(g.n_rows)]
    any_included = False
    for r in range(g.n_rows):
        for c in range(g.cols):
            if r == 0 or c == 0 or r == g.n_rows - 1 or c == g.cols - 1:
                mask[r][c] = True
                continue
            cell = g.cell_rect(r, c)
            if cell.y >= doc_h:
                mask[r][c] = True
                continue
            if dense_rects:
                covered = union_cover_area(cell, dense_rects)
                if covered >= cfg.gamma * cell.area:
                    mask[r][c] = True
                    continue
            any_included = True
    out = replace(g, excluded=mask)
    if not any_included:
        raise AllCellsExcluded("every grid cell was excluded")
    return out
