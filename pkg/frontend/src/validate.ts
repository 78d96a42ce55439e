import { SnapshotJson, SnapshotNodeJson } from "./types";

/**
 * Check a snapshot against the schema rules the extractor's parser
 * enforces.  Returns a list of problems; empty means valid.
 */
export function validateSnapshot(snapshot: SnapshotJson): string[] {
  const problems: string[] = [];
  const bad = (msg: string) => problems.push(msg);

  if (typeof snapshot.version !== "string") bad("version: must be a string");
  for (const [key, size] of [["window", snapshot.window], ["document", snapshot.document]] as const) {
    if (!size || !(size.w > 0) || !(size.h > 0)) bad(`${key}: dims must be > 0`);
  }
  if (!Array.isArray(snapshot.nodes) || snapshot.nodes.length === 0) {
    bad("nodes: must be a non-empty array");
    return problems;
  }

  const w1 = snapshot.document.w;
  const h1 = snapshot.document.h;
  const seen = new Map<number, SnapshotNodeJson>();
  const stack: number[] = [];

  snapshot.nodes.forEach((node, i) => {
    const path = `nodes[${i}]`;
    if (!Number.isInteger(node.id) || node.id < 0) bad(`${path}.id: bad id`);
    if (seen.has(node.id)) bad(`${path}.id: duplicate ${node.id}`);
    if (node.kind !== "element" && node.kind !== "text") bad(`${path}.kind: unknown`);

    const r = node.rect;
    if (!r || typeof r.x !== "number" || typeof r.y !== "number") {
      bad(`${path}.rect: missing coordinates`);
    } else {
      if (r.w < 0 || r.h < 0) bad(`${path}.rect: negative size`);
      if (r.x < -w1 || r.x + r.w > 2 * w1) bad(`${path}.rect.x: out of bounds`);
      if (r.y < -h1 || r.y + r.h > 2 * h1) bad(`${path}.rect.y: out of bounds`);
    }

    if (node.parent === undefined) {
      if (i !== 0) bad(`${path}.parent: second parentless node`);
      if (node.kind !== "element" || node.tag !== "body") bad(`${path}: root must be <body>`);
    } else {
      const parent = seen.get(node.parent);
      if (!parent) {
        bad(`${path}.parent: references a missing or later node`);
      } else if (parent.kind !== "element") {
        bad(`${path}.parent: parent is a text node`);
      } else {
        while (stack.length && stack[stack.length - 1] !== node.parent) stack.pop();
        if (!stack.length) bad(`${path}.parent: nodes are not in pre-order`);
      }
    }

    if (node.kind === "element") {
      if (!node.tag || node.tag !== node.tag.toLowerCase()) bad(`${path}.tag: must be lowercase`);
      if (node.text) bad(`${path}.text: elements carry no text`);
      if (node.isLink && node.tag !== "a") bad(`${path}.isLink: only <a> is a link`);
    } else {
      if (node.tag) bad(`${path}.tag: text nodes carry no tag`);
      if (typeof node.text !== "string") bad(`${path}.text: required string`);
      if (node.isLink) bad(`${path}.isLink: only elements`);
    }

    seen.set(node.id, node);
    if (node.kind === "element") stack.push(node.id);
  });

  return problems;
}
