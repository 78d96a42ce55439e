"""Shared test helpers: independent oracle implementations and a random
snapshot generator.

The oracles deliberately take different routes from the library code
(fixpoint iteration instead of a reverse sweep, per-node ancestor scans
instead of accumulation, quadratic DP instead of bit-parallel) so agreement
is meaningful.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction

from gce.links import HIGH, LOW
from gce.snapshot import PageSnapshot, parse_snapshot
from gce.synth import SnapshotBuilder

TAGS = ["div", "span", "p", "section", "li", "article", "nav"]
WORD_POOL = ["alpha", "beta", "（空）", "内容", "نص", "слово", "x  y", " pad ", "Z"]


# --- random snapshots --------------------------------------------------------

def random_snapshot_dict(
    rng: random.Random,
    max_depth: int = 4,
    max_children: int = 4,
    allow_hidden: bool = True,
) -> dict:
    w1, h1 = rng.choice([(800, 1200), (1200, 2400), (1920, 3000), (600, 500)])
    w0, h0 = rng.choice([(800, 600), (1200, 800), (1920, 1080)])
    b = SnapshotBuilder(window=(w0, h0), document=(w1, h1))

    def sub_box(x, y, w, h):
        nx = x + rng.uniform(0, w * 0.3)
        ny = y + rng.uniform(0, h * 0.3)
        nw = max(1.0, (w - (nx - x)) * rng.uniform(0.3, 1.0))
        nh = max(1.0, (h - (ny - y)) * rng.uniform(0.3, 1.0))
        return round(nx, 1), round(ny, 1), round(nw, 1), round(nh, 1)

    def gen_children(parent, depth, x, y, w, h):
        for _ in range(rng.randint(0, max_children)):
            cx, cy, cw, ch = sub_box(x, y, w, h)
            roll = rng.random()
            if roll < 0.35 or depth >= max_depth:
                b.text(
                    parent, cx, cy, cw, ch,
                    " ".join(rng.choice(WORD_POOL) for _ in range(rng.randint(0, 5))),
                    visible=not (allow_hidden and rng.random() < 0.1),
                )
            elif roll < 0.5:
                # link, sometimes inside a chain of single-child wrappers
                top = parent
                for _ in range(rng.randint(0, 2)):
                    top = b.element(top, "div", cx, cy, cw, ch)
                a = b.element(top, "a", cx, cy, cw, ch, is_link=True)
                b.text(a, cx, cy, cw, ch, rng.choice(WORD_POOL))
            else:
                el = b.element(
                    parent,
                    rng.choice(TAGS),
                    cx, cy, cw, ch,
                    attr_class=rng.choice(["", "", "menu", "article-box", "main content"]),
                    visible=not (allow_hidden and rng.random() < 0.07),
                    fixed=allow_hidden and rng.random() < 0.05,
                )
                gen_children(el, depth + 1, cx, cy, cw, ch)

    gen_children(b.body_id, 0, 0, 0, w1, h1)
    # guarantee at least one visible text node so preprocessing can succeed
    b.text(b.body_id, 5, 5, 50, 20, "anchor text")
    return b.snapshot_dict()


def random_snapshot(rng: random.Random, **kw) -> PageSnapshot:
    return parse_snapshot(json.dumps(random_snapshot_dict(rng, **kw)))


# --- oracles -----------------------------------------------------------------

def oracle_containers(s: PageSnapshot) -> set[int]:
    """Fixpoint by repeated full passes."""
    containers = {n.id for n in s.nodes if n.is_element and n.tag == "a"}
    changed = True
    while changed:
        changed = False
        for n in s.nodes:
            if n.is_element and n.id not in containers:
                kids = s.children(n.id)
                if len(kids) == 1 and kids[0] in containers:
                    containers.add(n.id)
                    changed = True
    return containers


def oracle_link_density(s: PageSnapshot, containers: set[int], eid: int) -> float:
    """Sum maximal containers under eid by checking each container's path."""
    total = 0.0
    for n in s.descendants(eid):
        if n.id not in containers:
            continue
        blocked = False
        cur = n
        while cur.parent_id is not None and cur.parent_id != eid:
            cur = s.node(cur.parent_id)
            if cur.id in containers:
                blocked = True
                break
        if not blocked:
            total += n.rect.area
    return total / s.node(eid).rect.area


def oracle_labels(
    s: PageSnapshot, containers: set[int], densities: dict[int, float], beta: float
) -> dict[int, str]:
    """Per-leaf ancestor scan."""
    out = {}
    for n in s.nodes:
        if not (n.is_text and n.visible):
            continue
        high = False
        for anc in s.ancestors(n.id):
            if anc.id in containers or densities.get(anc.id, 0.0) > beta:
                high = True
                break
        out[n.id] = HIGH if high else LOW
    return out


def oracle_text_density(
    s: PageSnapshot, labels: dict[int, str], eid: int
) -> float | None:
    node = s.node(eid)
    if node.tag == "body" or node.rect.h < s.window[1] / 2:
        return None
    total = sum(
        d.rect.area
        for d in s.descendants(eid)
        if d.is_text and labels.get(d.id) == LOW
    )
    return total / node.rect.area


def oracle_lcs(a: str, b: str) -> int:
    """Quadratic DP."""
    m, n = len(a), len(b)
    prev = [0] * (n + 1)
    for i in range(1, m + 1):
        cur = [0] * (n + 1)
        ai = a[i - 1]
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = prev[j] if prev[j] >= cur[j - 1] else cur[j - 1]
        prev = cur
    return prev[n]


def oracle_row_count(
    window_h: float, doc_h: float, alpha: float, cell_h: float
) -> int:
    """Linear search for the smallest row count covering the browsing area."""
    if window_h >= doc_h:
        target = Fraction(window_h)
    else:
        target = min(Fraction(alpha) * Fraction(window_h), Fraction(doc_h))
    n = 1
    while n * Fraction(cell_h) < target:
        n += 1
    return n


def oracle_subtree_text(s: PageSnapshot, root_id: int) -> str:
    """Recursive walk, assembled separately from the library's iterative one."""
    parts: list[str] = []

    def walk(nid: int):
        node = s.node(nid)
        if node.is_text:
            norm = " ".join(node.text.split())
            if norm:
                parts.append(norm)
        for kid in s.children(nid):
            walk(kid)

    for kid in s.children(root_id):
        walk(kid)
    return "\n".join(parts)


def rel_close(a: float, b: float, tol: float = 1e-12) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
