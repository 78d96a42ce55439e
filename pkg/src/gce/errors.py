"""Exception types raised by the extraction pipeline."""


class GceError(Exception):
    """Base class for all errors raised by this package."""


class MalformedJson(GceError):
    pass


class SchemaViolation(GceError):
    """A snapshot field violates the schema; `path` names the first bad field."""

    def __init__(self, path: str, detail: str = ""):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}" if detail else path)


class DuplicateId(GceError):
    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"duplicate node id {node_id}")


class DanglingParent(GceError):
    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"node {node_id} references a missing or later parent")


class EmptyDocument(GceError):
    """Preprocessing removed every visible text node."""


class UnknownNode(GceError):
    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"no node with id {node_id}")


class ZeroArea(GceError):
    def __init__(self, node_id: int):
        self.node_id = node_id
        super().__init__(f"node {node_id} has zero area")


class NoTextLeaves(GceError):
    """No low-link-density visible text leaf exists."""


class DegenerateWindow(GceError):
    """Window too small for the configured grid (sub-pixel cells)."""


class AllCellsExcluded(GceError):
    """Every grid cell was excluded; callers fall back to the window center."""


class MissingTruth(GceError):
    def __init__(self, page: str):
        self.page = page
        super().__init__(f"no ground-truth file for page {page!r}")


class CrossSnapshotIds(GceError):
    """Node-id sets passed to block matching come from different snapshots."""
