"""Rendered-page snapshot model: parsing, validation, preprocessing, queries.

A snapshot is a flat pre-order list of DOM nodes with per-node geometry in
document coordinates, plus the browser window size and the full document
size.  The JSON wire format is documented in the README (schema version 1).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional

from .errors import (
    DanglingParent,
    DuplicateId,
    EmptyDocument,
    MalformedJson,
    SchemaViolation,
    UnknownNode,
)
from .geometry import Rect

SCHEMA_VERSION = "1"

ELEMENT = "element"
TEXT = "text"


@dataclass(frozen=True)
class SnapshotNode:
    id: int
    parent_id: Optional[int]  # None only for the root <body>
    kind: str  # ELEMENT or TEXT
    tag: str = ""  # lowercase tag name, elements only
    attr_id: str = ""
    attr_class: str = ""
    rect: Rect = Rect(0, 0, 0, 0)
    visible: bool = True
    position_fixed: bool = False
    is_link: bool = False  # <a> with an href
    text: str = ""  # text nodes only

    @property
    def is_element(self) -> bool:
        return self.kind == ELEMENT

    @property
    def is_text(self) -> bool:
        return self.kind == TEXT


@dataclass
class PageSnapshot:
    """Immutable after construction; all pipeline stages are pure functions."""

    version: str
    window: tuple[float, float]  # (w0, h0)
    document: tuple[float, float]  # (w1, h1)
    nodes: list[SnapshotNode]
    _by_id: dict[int, SnapshotNode] = field(init=False, repr=False, compare=False)
    _children: dict[int, list[int]] = field(init=False, repr=False, compare=False)
    _order: dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        self._by_id = {n.id: n for n in self.nodes}
        self._children = {n.id: [] for n in self.nodes}
        self._order = {n.id: i for i, n in enumerate(self.nodes)}
        for n in self.nodes:
            if n.parent_id is not None:
                self._children[n.parent_id].append(n.id)

    @property
    def root(self) -> SnapshotNode:
        return self.nodes[0]

    def node(self, node_id: int) -> SnapshotNode:
        try:
            return self._by_id[node_id]
        except KeyError:
            raise UnknownNode(node_id) from None

    def has_node(self, node_id: int) -> bool:
        return node_id in self._by_id

    def children(self, node_id: int) -> list[int]:
        return self._children[node_id]

    def doc_order(self, node_id: int) -> int:
        return self._order[node_id]

    def ancestors(self, node_id: int) -> Iterator[SnapshotNode]:
        """Parent chain from the node's parent up to the root."""
        n = self.node(node_id)
        while n.parent_id is not None:
            n = self._by_id[n.parent_id]
            yield n

    def descendants(self, node_id: int) -> Iterator[SnapshotNode]:
        """Strict descendants in document (pre-)order."""
        self.node(node_id)
        stack = list(reversed(self._children[node_id]))
        while stack:
            nid = stack.pop()
            node = self._by_id[nid]
            yield node
            stack.extend(reversed(self._children[nid]))

    def text_leaves(self, root_id: Optional[int] = None) -> list[SnapshotNode]:
        """Visible text nodes under root_id (whole tree when omitted)."""
        if root_id is None:
            it: Iterator[SnapshotNode] = iter(self.nodes)
        else:
            it = self.descendants(root_id)
        return [n for n in it if n.is_text and n.visible]


@dataclass(frozen=True)
class GroundTruth:
    snapshot_ref: str
    truth_node_id: int


@dataclass(frozen=True)
class Provenance:
    center: int  # 1 | 2 | 3
    rule: str  # "tag" | "attr" | "diff"
    cls: str  # "best" | "nobest"


@dataclass
class ExtractionResult:
    main_node_id: Optional[int]
    text: str
    text_leaf_ids: frozenset[int]
    provenance: Optional[Provenance]
    failed: bool
    reason: Optional[str] = None  # set only on failed results

    def to_json_dict(self) -> dict:
        d = {
            "mainNodeId": self.main_node_id,
            "failed": self.failed,
            "provenance": None,
            "text": self.text,
            "textLeafIds": sorted(self.text_leaf_ids),
        }
        if self.provenance is not None:
            d["provenance"] = {
                "center": self.provenance.center,
                "rule": self.provenance.rule,
                "class": self.provenance.cls,
            }
        if self.failed:
            d["reason"] = self.reason
        return d


def failed_result(reason: str) -> ExtractionResult:
    return ExtractionResult(
        main_node_id=None,
        text="",
        text_leaf_ids=frozenset(),
        provenance=None,
        failed=True,
        reason=reason,
    )


# --- parsing ---------------------------------------------------------------

def _require(obj: dict, key: str, types, path: str):
    if key not in obj:
        raise SchemaViolation(path, "missing")
    v = obj[key]
    if not isinstance(v, types) or isinstance(v, bool) and types is not bool:
        raise SchemaViolation(path, f"expected {types}, got {type(v).__name__}")
    return v


def _num(obj: dict, key: str, path: str) -> float:
    if key not in obj:
        raise SchemaViolation(path, "missing")
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaViolation(path, "expected number")
    return float(v)


def _opt_bool(obj: dict, key: str, default: bool, path: str) -> bool:
    if key not in obj:
        return default
    v = obj[key]
    if not isinstance(v, bool):
        raise SchemaViolation(path, "expected boolean")
    return v


def _opt_str(obj: dict, key: str, path: str) -> str:
    if key not in obj:
        return ""
    v = obj[key]
    if not isinstance(v, str):
        raise SchemaViolation(path, "expected string")
    return v


def _parse_size(obj: dict, key: str, path: str) -> tuple[float, float]:
    sub = _require(obj, key, dict, path)
    w = _num(sub, "w", f"{path}.w")
    h = _num(sub, "h", f"{path}.h")
    if w <= 0 or h <= 0:
        raise SchemaViolation(f"{path}.w" if w <= 0 else f"{path}.h", "must be > 0")
    return (w, h)


def parse_snapshot(data: bytes | str) -> PageSnapshot:
    """Parse and validate snapshot JSON into a PageSnapshot.

    Enforces: unique ids, parents precede children and chain into a single
    <body> root, strict pre-order node listing, non-negative box sizes, and
    the document-relative sanity bounds on node boxes.
    """
    try:
        obj = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise MalformedJson(str(e)) from None
    if not isinstance(obj, dict):
        raise SchemaViolation("$", "top level must be an object")

    version = _require(obj, "version", str, "version")
    window = _parse_size(obj, "window", "window")
    document = _parse_size(obj, "document", "document")
    raw_nodes = _require(obj, "nodes", list, "nodes")
    if not raw_nodes:
        raise SchemaViolation("nodes", "must not be empty")

    w1, h1 = document
    nodes: list[SnapshotNode] = []
    seen: dict[int, SnapshotNode] = {}
    # stack of open ancestor ids; enforces pre-order
    stack: list[int] = []

    for i, raw in enumerate(raw_nodes):
        path = f"nodes[{i}]"
        if not isinstance(raw, dict):
            raise SchemaViolation(path, "expected object")
        nid = _require(raw, "id", int, f"{path}.id")
        if nid < 0:
            raise SchemaViolation(f"{path}.id", "must be non-negative")
        if nid in seen:
            raise DuplicateId(nid)
        kind = _require(raw, "kind", str, f"{path}.kind")
        if kind not in (ELEMENT, TEXT):
            raise SchemaViolation(f"{path}.kind", f"unknown kind {kind!r}")

        rect_obj = _require(raw, "rect", dict, f"{path}.rect")
        rx = _num(rect_obj, "x", f"{path}.rect.x")
        ry = _num(rect_obj, "y", f"{path}.rect.y")
        rw = _num(rect_obj, "w", f"{path}.rect.w")
        rh = _num(rect_obj, "h", f"{path}.rect.h")
        if rw < 0:
            raise SchemaViolation(f"{path}.rect.w", "must be >= 0")
        if rh < 0:
            raise SchemaViolation(f"{path}.rect.h", "must be >= 0")
        if not (-w1 <= rx and rx + rw <= 2 * w1):
            raise SchemaViolation(f"{path}.rect.x", "outside [-w1, 2*w1]")
        if not (-h1 <= ry and ry + rh <= 2 * h1):
            raise SchemaViolation(f"{path}.rect.y", "outside [-h1, 2*h1]")

        parent_id: Optional[int]
        if "parent" in raw and raw["parent"] is not None:
            parent_id = _require(raw, "parent", int, f"{path}.parent")
            if parent_id not in seen:
                raise DanglingParent(nid)
            if not seen[parent_id].is_element:
                raise SchemaViolation(f"{path}.parent", "parent is a text node")
            # pre-order: parent must still be an open ancestor
            while stack and stack[-1] != parent_id:
                stack.pop()
            if not stack:
                raise SchemaViolation(f"{path}.parent", "nodes are not in pre-order")
        else:
            parent_id = None
            if i != 0:
                raise SchemaViolation(f"{path}.parent", "second parentless node")

        if kind == ELEMENT:
            tag = _require(raw, "tag", str, f"{path}.tag")
            if not tag or tag != tag.lower():
                raise SchemaViolation(f"{path}.tag", "must be a lowercase tag name")
            text = ""
            if "text" in raw and raw["text"]:
                raise SchemaViolation(f"{path}.text", "elements carry no text")
        else:
            tag = ""
            if "tag" in raw and raw["tag"]:
                raise SchemaViolation(f"{path}.tag", "text nodes carry no tag")
            text = _require(raw, "text", str, f"{path}.text")

        if parent_id is None and (kind != ELEMENT or tag != "body"):
            raise SchemaViolation(f"{path}.tag", "root must be a <body> element")

        is_link = _opt_bool(raw, "isLink", False, f"{path}.isLink")
        if is_link and tag != "a":
            raise SchemaViolation(f"{path}.isLink", "only <a> elements are links")

        node = SnapshotNode(
            id=nid,
            parent_id=parent_id,
            kind=kind,
            tag=tag,
            attr_id=_opt_str(raw, "attrId", f"{path}.attrId"),
            attr_class=_opt_str(raw, "attrClass", f"{path}.attrClass"),
            rect=Rect(rx, ry, rw, rh),
            visible=_opt_bool(raw, "visible", True, f"{path}.visible"),
            position_fixed=_opt_bool(raw, "fixed", False, f"{path}.fixed"),
            is_link=is_link,
            text=text,
        )
        seen[nid] = node
        nodes.append(node)
        if kind == ELEMENT:
            stack.append(nid)

    return PageSnapshot(version=version, window=window, document=document, nodes=nodes)


def serialize_snapshot(s: PageSnapshot) -> bytes:
    """Inverse of parse_snapshot; parse(serialize(s)) reproduces s."""
    out_nodes = []
    for n in s.nodes:
        d: dict = {"id": n.id, "kind": n.kind}
        if n.parent_id is not None:
            d["parent"] = n.parent_id
        if n.is_element:
            d["tag"] = n.tag
            if n.attr_id:
                d["attrId"] = n.attr_id
            if n.attr_class:
                d["attrClass"] = n.attr_class
        else:
            d["text"] = n.text
        d["rect"] = {"x": n.rect.x, "y": n.rect.y, "w": n.rect.w, "h": n.rect.h}
        d["visible"] = n.visible
        if n.position_fixed:
            d["fixed"] = True
        if n.is_link:
            d["isLink"] = True
        out_nodes.append(d)
    obj = {
        "version": s.version,
        "window": {"w": s.window[0], "h": s.window[1]},
        "document": {"w": s.document[0], "h": s.document[1]},
        "nodes": out_nodes,
    }
    return json.dumps(obj, ensure_ascii=False).encode("utf-8")


def parse_ground_truth(data: bytes | str) -> GroundTruth:
    try:
        obj = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise MalformedJson(str(e)) from None
    if not isinstance(obj, dict):
        raise SchemaViolation("$", "top level must be an object")
    ref = _require(obj, "snapshot", str, "snapshot")
    tid = _require(obj, "truthNodeId", int, "truthNodeId")
    return GroundTruth(snapshot_ref=ref, truth_node_id=tid)


def validate_truth(s: PageSnapshot, truth: GroundTruth) -> SnapshotNode:
    node = s.node(truth.truth_node_id)
    if not node.is_element:
        raise SchemaViolation("truthNodeId", "must reference an element")
    return node


# --- preprocessing ---------------------------------------------------------

def _removable(n: SnapshotNode) -> bool:
    if n.is_element and n.position_fixed:
        return True
    if not n.visible:
        return True
    if n.rect.area == 0:
        return True
    return False


def preprocess(s: PageSnapshot) -> PageSnapshot:
    """Drop fixed-position boilerplate and invisible/zero-area subtrees.

    The root is always kept.  Raises EmptyDocument when no visible text node
    survives.  Idempotent.
    """
    kept: list[SnapshotNode] = []
    kept_ids: set[int] = set()
    for n in s.nodes:
        if n.parent_id is None:
            kept.append(n)
            kept_ids.add(n.id)
            continue
        if n.parent_id not in kept_ids or _removable(n):
            continue
        kept.append(n)
        kept_ids.add(n.id)
    if not any(n.is_text for n in kept):
        raise EmptyDocument("no visible text node remains after preprocessing")
    return PageSnapshot(
        version=s.version, window=s.window, document=s.document, nodes=kept
    )


# --- text queries ----------------------------------------------------------

def normalize_block(text: str) -> str:
    """Collapse whitespace runs to single spaces and trim."""
    return " ".join(text.split())


def text_blocks(s: PageSnapshot, root_id: int) -> list[str]:
    """Non-empty normalized text blocks under root_id in document order."""
    s.node(root_id)
    blocks = []
    for n in s.descendants(root_id):
        if n.is_text:
            b = normalize_block(n.text)
            if b:
                blocks.append(b)
    return blocks


def subtree_text(s: PageSnapshot, root_id: int) -> str:
    """Normalized text of all text descendants, blocks joined by newlines."""
    return "\n".join(text_blocks(s, root_id))


def text_leaf_ids(s: PageSnapshot, root_id: int) -> frozenset[int]:
    """Ids of visible text leaves under root_id."""
    s.node(root_id)
    return frozenset(n.id for n in s.descendants(root_id) if n.is_text and n.visible)


def scale_snapshot(s: PageSnapshot, k: float) -> PageSnapshot:
    """Uniformly scale all geometry by k > 0 (content untouched)."""
    return PageSnapshot(
        version=s.version,
        window=(s.window[0] * k, s.window[1] * k),
        document=(s.document[0] * k, s.document[1] * k),
        nodes=[replace(n, rect=n.rect.scaled(k)) for n in s.nodes],
    )
