import { RectJson, SizeJson, SnapshotJson, SnapshotNodeJson, SCHEMA_VERSION } from "./types";

/**
 * Geometry backend for one document.  The browser engine answers from live
 * layout APIs; the static engine answers from its own layout pass.  All
 * rects are in document coordinates.
 */
export interface GeometryProvider {
  elementRect(el: Element): RectJson;
  textRects(node: Text): RectJson[];
  position(el: Element): string;
  rendered(el: Element): boolean;
}

export interface BuildResult {
  nodes: SnapshotNodeJson[];
  truthNodeId?: number;
}

/**
 * Walk the body subtree in document order and emit one record per element
 * and per non-empty text node.
 *
 * Self-contained by design: the browser engine injects this function's
 * source into the page, so it must not reference anything outside its own
 * parameters and locals.
 */
export function buildNodeList(
  body: Element,
  provider: GeometryProvider,
  docSize: SizeJson,
  truthEl?: Element | null,
): BuildResult {
  const SKIP: Record<string, boolean> = {
    script: true, style: true, noscript: true, template: true,
  };
  const round2 = (v: number) => Math.round(v * 100) / 100;
  const clamp = (rect: { x: number; y: number; w: number; h: number }) => {
    // schema sanity bounds: boxes live within [-w1, 2w1] x [-h1, 2h1]
    const cl = (lo: number, hi: number, pos: number, size: number) => {
      let p = Math.min(Math.max(pos, lo), hi);
      let s = Math.max(Math.min(size, hi - p), 0);
      return [p, s];
    };
    const [x, w] = cl(-docSize.w, 2 * docSize.w, rect.x, rect.w);
    const [y, h] = cl(-docSize.h, 2 * docSize.h, rect.y, rect.h);
    return { x: round2(x), y: round2(y), w: round2(w), h: round2(h) };
  };
  const union = (rects: RectJson[]) => {
    if (!rects.length) return { x: 0, y: 0, w: 0, h: 0 };
    let x1 = Infinity, y1 = Infinity, x2 = -Infinity, y2 = -Infinity;
    for (const r of rects) {
      if (r.w <= 0 || r.h <= 0) continue;
      x1 = Math.min(x1, r.x);
      y1 = Math.min(y1, r.y);
      x2 = Math.max(x2, r.x + r.w);
      y2 = Math.max(y2, r.y + r.h);
    }
    if (x1 > x2) return { x: 0, y: 0, w: 0, h: 0 };
    return { x: x1, y: y1, w: x2 - x1, h: y2 - y1 };
  };

  const nodes: SnapshotNodeJson[] = [];
  let nextId = 0;
  let truthNodeId: number | undefined;

  const walkElement = (el: Element, parentId: number | undefined, parentShown: boolean) => {
    const tag = el.tagName.toLowerCase();
    if (SKIP[tag]) return;
    const id = nextId++;
    if (truthEl && el === truthEl) truthNodeId = id;
    const rect = clamp(provider.elementRect(el));
    const shown = parentShown && provider.rendered(el);
    const rec: SnapshotNodeJson = {
      id,
      kind: "element",
      tag,
      rect,
      visible: shown && rect.w > 0 && rect.h > 0,
    };
    if (parentId !== undefined) rec.parent = parentId;
    const attrId = el.getAttribute("id");
    const attrClass = el.getAttribute("class");
    if (attrId) rec.attrId = attrId;
    if (attrClass) rec.attrClass = attrClass;
    if (provider.position(el) === "fixed") rec.fixed = true;
    if (tag === "a" && el.getAttribute("href") !== null) rec.isLink = true;
    nodes.push(rec);

    const children = el.childNodes;
    for (let i = 0; i < children.length; i++) {
      const child = children[i];
      if (child.nodeType === 1) {
        walkElement(child as Element, id, shown);
      } else if (child.nodeType === 3) {
        const data = (child as Text).data;
        if (!data.length) continue;
        const rect = clamp(union(provider.textRects(child as Text)));
        nodes.push({
          id: nextId++,
          parent: id,
          kind: "text",
          text: data,
          rect,
          visible: shown && rect.w > 0 && rect.h > 0 && /\S/.test(data),
        });
      }
    }
  };

  walkElement(body, undefined, true);
  return { nodes, truthNodeId };
}

export function assembleSnapshot(
  nodes: SnapshotNodeJson[],
  viewport: SizeJson,
  docSize: SizeJson,
): SnapshotJson {
  return {
    version: SCHEMA_VERSION,
    window: { w: viewport.w, h: viewport.h },
    document: { w: docSize.w, h: docSize.h },
    nodes,
  };
}
