"""Link containers, link node area density, and high/low leaf labeling.

Density is area-based rather than token-based so that menus made of short
CJK words weigh the same as their Latin counterparts.
"""
from __future__ import annotations

from .errors import ZeroArea
from .snapshot import PageSnapshot

HIGH = "high"
LOW = "low"


def mark_link_containers(s: PageSnapshot) -> set[int]:
    """Fixpoint of: every <a> is a container; a parent whose only child is a
    container is itself a container."""
    containers: set[int] = set()
    # children appear after parents, so one reverse pass reaches the fixpoint
    for n in reversed(s.nodes):
        if not n.is_element:
            continue
        if n.tag == "a":
            containers.add(n.id)
            continue
        kids = s.children(n.id)
        if len(kids) == 1 and kids[0] in containers:
            containers.add(n.id)
    return containers


def _maximal_container_areas(s: PageSnapshot, containers: set[int]) -> dict[int, float]:
    """For each element id, the summed area of its maximal container
    descendants (containers nested in other counted containers contribute
    nothing extra).

    Each container adds its area to every ancestor up to and including its
    nearest container ancestor: above that point it is no longer maximal.
    """
    acc: dict[int, float] = {}
    for cid in containers:
        area = s.node(cid).rect.area
        for anc in s.ancestors(cid):
            acc[anc.id] = acc.get(anc.id, 0.0) + area
            if anc.id in containers:
                break
    return acc


def link_area_density(s: PageSnapshot, containers: set[int], element_id: int) -> float:
    """Summed area of maximal link-container descendants over own area.

    May exceed 1 when overlapping link boxes overflow the element box.
    """
    node = s.node(element_id)
    if node.rect.area == 0:
        raise ZeroArea(element_id)
    total = 0.0
    stack = list(s.children(element_id))
    while stack:
        nid = stack.pop()
        if nid in containers:
            total += s.node(nid).rect.area
            continue  # maximal only: skip nested containers
        stack.extend(s.children(nid))
    return total / node.rect.area


def compute_density_map(s: PageSnapshot, containers: set[int]) -> dict[int, float]:
    """Link area density for every visible element with positive area.

    Elements without link descendants map to 0.0.
    """
    acc = _maximal_container_areas(s, containers)
    out: dict[int, float] = {}
    for n in s.nodes:
        if n.is_element and n.visible and n.rect.area > 0:
            out[n.id] = acc.get(n.id, 0.0) / n.rect.area
    return out


def label_text_leaves(
    s: PageSnapshot, containers: set[int], densities: dict[int, float], beta: float
) -> dict[int, str]:
    """Label each visible text leaf HIGH or LOW.

    A leaf is HIGH when it sits inside a link container or under any ancestor
    whose link density exceeds beta; LOW otherwise.
    """
    if beta <= 0:
        raise ValueError("beta must be > 0")
    labels: dict[int, str] = {}
    # DFS from the root propagating the inherited density verdict downward
    stack: list[tuple[int, bool]] = [(s.root.id, False)]
    while stack:
        nid, dense = stack.pop()
        node = s.node(nid)
        if node.is_text:
            if node.visible:
                labels[nid] = HIGH if dense else LOW
            continue
        dense = dense or nid in containers or densities.get(nid, 0.0) > beta
        for kid in s.children(nid):
            stack.append((kid, dense))
    return labels


def low_density_leaves(s: PageSnapshot, labels: dict[int, str]) -> list[int]:
    """Ids of LOW-labeled leaves in document order."""
    return [n.id for n in s.nodes if n.id in labels and labels[n.id] == LOW]
