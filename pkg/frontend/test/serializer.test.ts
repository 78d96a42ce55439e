import { describe, expect, it } from "vitest";
import { JSDOM } from "jsdom";

import { buildNodeList, GeometryProvider } from "../src/serializer";
import { validateSnapshot } from "../src/validate";
import { SnapshotJson } from "../src/types";

function fixedProvider(rect = { x: 5, y: 5, w: 100, h: 40 }): GeometryProvider {
  return {
    elementRect: () => ({ ...rect }),
    textRects: () => [{ ...rect }],
    position: () => "static",
    rendered: () => true,
  };
}

function bodyOf(html: string): Element {
  return new JSDOM(html).window.document.body;
}

describe("buildNodeList", () => {
  it("skips script/style subtrees and comments", () => {
    const body = bodyOf(
      "<body><script>var x = 1;</script><style>p{}</style>" +
      "<!-- note --><p>kept</p></body>",
    );
    const { nodes } = buildNodeList(body, fixedProvider(), { w: 1000, h: 1000 });
    const tags = nodes.filter((n) => n.kind === "element").map((n) => n.tag);
    expect(tags).toEqual(["body", "p"]);
    expect(nodes.filter((n) => n.kind === "text").map((n) => n.text)).toEqual(["kept"]);
  });

  it("merges text client rects into one box", () => {
    const body = bodyOf("<body><p>two lines</p></body>");
    const provider = fixedProvider();
    provider.textRects = () => [
      { x: 10, y: 10, w: 50, h: 10 },
      { x: 10, y: 20, w: 30, h: 10 },
    ];
    const { nodes } = buildNodeList(body, provider, { w: 1000, h: 1000 });
    const text = nodes.find((n) => n.kind === "text")!;
    expect(text.rect).toEqual({ x: 10, y: 10, w: 50, h: 20 });
  });

  it("clamps boxes into the schema sanity bounds", () => {
    const body = bodyOf("<body><div>x</div></body>");
    const provider = fixedProvider();
    provider.elementRect = () => ({ x: -9999, y: 0, w: 99999, h: 10 });
    const { nodes } = buildNodeList(body, provider, { w: 1000, h: 1000 });
    for (const n of nodes.filter((n) => n.kind === "element")) {
      expect(n.rect.x).toBeGreaterThanOrEqual(-1000);
      expect(n.rect.x + n.rect.w).toBeLessThanOrEqual(2000);
    }
  });

  it("propagates hidden state to descendants' visibility", () => {
    const body = bodyOf("<body><div id='h'><p>inside</p></div><p>outside</p></body>");
    const provider = fixedProvider();
    provider.rendered = (el) => el.getAttribute("id") !== "h";
    const { nodes } = buildNodeList(body, provider, { w: 1000, h: 1000 });
    const byText = (t: string) => nodes.find((n) => n.text === t)!;
    expect(byText("inside").visible).toBe(false);
    expect(byText("outside").visible).toBe(true);
  });

  it("produces a snapshot the validator accepts", () => {
    const body = bodyOf("<body><div><a href='/x'>go</a></div><p>txt</p></body>");
    const { nodes } = buildNodeList(body, fixedProvider(), { w: 1000, h: 1000 });
    const snapshot: SnapshotJson = {
      version: "1",
      window: { w: 800, h: 600 },
      document: { w: 1000, h: 1000 },
      nodes,
    };
    expect(validateSnapshot(snapshot)).toEqual([]);
  });
});

describe("validateSnapshot negatives", () => {
  const base = (): SnapshotJson => ({
    version: "1",
    window: { w: 800, h: 600 },
    document: { w: 1000, h: 1000 },
    nodes: [
      { id: 0, kind: "element", tag: "body", rect: { x: 0, y: 0, w: 10, h: 10 } },
      { id: 1, parent: 0, kind: "text", text: "x", rect: { x: 0, y: 0, w: 5, h: 5 } },
    ],
  });

  it("accepts the base snapshot", () => {
    expect(validateSnapshot(base())).toEqual([]);
  });

  it("catches duplicate ids", () => {
    const s = base();
    s.nodes[1].id = 0;
    expect(validateSnapshot(s).join()).toContain("duplicate");
  });

  it("catches missing parents", () => {
    const s = base();
    s.nodes[1].parent = 7;
    expect(validateSnapshot(s).join()).toContain("missing or later");
  });

  it("catches a non-body root and uppercase tags", () => {
    const s = base();
    s.nodes[0].tag = "DIV";
    const problems = validateSnapshot(s).join();
    expect(problems).toContain("root must be <body>");
    expect(problems).toContain("lowercase");
  });
});
