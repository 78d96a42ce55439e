"""Run configuration: a single versioned JSON file plus flag overrides."""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from .centering import BAND_CENTERS, BAND_LITERAL
from .expanding import BEST, DEFAULT_ORDER, NOBEST
from .grid import GridConfig

CONFIG_VERSION = 1


def order_to_names(order: tuple[tuple[int, str], ...]) -> list[str]:
    return [f"{c}_{cls}" for c, cls in order]


def order_from_names(names: list[str]) -> tuple[tuple[int, str], ...]:
    out = []
    for name in names:
        center_s, _, cls = name.partition("_")
        if cls not in (BEST, NOBEST) or center_s not in ("1", "2", "3"):
            raise ValueError(f"bad selection-order entry {name!r}")
        out.append((int(center_s), cls))
    if len(set(out)) != len(out):
        raise ValueError("selection order has duplicate entries")
    return tuple(out)


@dataclass(frozen=True)
class RunConfig:
    grid: GridConfig = field(default_factory=GridConfig)
    band_mode: str = BAND_CENTERS
    selection_order: tuple[tuple[int, str], ...] = DEFAULT_ORDER
    jobs: int = 1
    corpus_dir: Optional[str] = None
    truth_dir: Optional[str] = None
    out: Optional[str] = None

    def validate(self) -> None:
        self.grid.validate()
        if self.band_mode not in (BAND_CENTERS, BAND_LITERAL):
            raise ValueError(f"unknown band mode {self.band_mode!r}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def science_dict(self) -> dict:
        """The knobs that affect extraction output (reports embed this)."""
        g = self.grid
        return {
            "version": CONFIG_VERSION,
            "grid": {
                "rows": g.rows,
                "cols": g.cols,
                "alpha": g.alpha,
                "beta": g.beta,
                "gamma": g.gamma,
                "widthRatio": g.width_ratio,
                "window": [g.window[0], g.window[1]],
            },
            "bandMode": self.band_mode,
            "selectionOrder": order_to_names(self.selection_order),
        }

    def to_json_dict(self) -> dict:
        d = self.science_dict()
        d["jobs"] = self.jobs
        for key, val in (
            ("corpusDir", self.corpus_dir),
            ("truthDir", self.truth_dir),
            ("out", self.out),
        ):
            if val is not None:
                d[key] = val
        return d


def run_config_from_dict(obj: dict) -> RunConfig:
    if not isinstance(obj, dict):
        raise ValueError("config must be a JSON object")
    version = obj.get("version", CONFIG_VERSION)
    if version != CONFIG_VERSION:
        raise ValueError(f"unsupported config version {version!r}")
    g = obj.get("grid", {})
    window = g.get("window", list(GridConfig().window))
    grid = GridConfig(
        rows=g.get("rows", GridConfig.rows),
        cols=g.get("cols", GridConfig.cols),
        alpha=g.get("alpha", GridConfig.alpha),
        beta=g.get("beta", GridConfig.beta),
        gamma=g.get("gamma", GridConfig.gamma),
        width_ratio=g.get("widthRatio", GridConfig.width_ratio),
        window=(float(window[0]), float(window[1])),
    )
    order = DEFAULT_ORDER
    if "selectionOrder" in obj:
        order = order_from_names(obj["selectionOrder"])
    cfg = RunConfig(
        grid=grid,
        band_mode=obj.get("bandMode", BAND_CENTERS),
        selection_order=order,
        jobs=obj.get("jobs", 1),
        corpus_dir=obj.get("corpusDir"),
        truth_dir=obj.get("truthDir"),
        out=obj.get("out"),
    )
    cfg.validate()
    return cfg


def load_run_config(path: str) -> RunConfig:
    with open(path, "r", encoding="utf-8") as f:
        return run_config_from_dict(json.load(f))


def apply_overrides(
    cfg: RunConfig,
    band_mode: Optional[str] = None,
    jobs: Optional[int] = None,
    out: Optional[str] = None,
) -> RunConfig:
    if band_mode is not None:
        cfg = replace(cfg, band_mode=band_mode)
    if jobs is not None:
        cfg = replace(cfg, jobs=jobs)
    if out is not None:
        cfg = replace(cfg, out=out)
    cfg.validate()
    return cfg
