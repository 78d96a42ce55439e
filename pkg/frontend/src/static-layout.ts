import { GeometryProvider } from "./serializer";
import { RectJson, SizeJson } from "./types";

/**
 * Layout for fixed-layout pages without a browser.
 *
 * Supported subset: inline styles only; `position: absolute|fixed` with
 * pixel `left`/`top`/`width`/`height` (absolute resolves against the
 * nearest positioned ancestor, fixed against the viewport origin);
 * unpositioned block elements stack vertically inside their parent and
 * default to the parent's width; `display:none`, `visibility:hidden`, and
 * `opacity:0` mark subtrees hidden.  Text nodes take their parent's box.
 *
 * This is not a CSS engine; pages meant for this path should position
 * everything explicitly (see fixtures/static_article.html).
 */

interface Box {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface StaticLayoutResult {
  provider: GeometryProvider;
  docSize: SizeJson;
}

function px(value: string | undefined | null): number | null {
  if (!value) return null;
  const m = /^(-?\d+(?:\.\d+)?)(px)?$/.exec(value.trim());
  return m ? parseFloat(m[1]) : null;
}

export function layoutStatic(document: Document, viewport: SizeJson): StaticLayoutResult {
  const rects = new Map<Element, Box>();
  const textRects = new Map<Text, RectJson[]>();
  const positions = new Map<Element, string>();
  const shown = new Map<Element, boolean>();
  let extentRight = 0;
  let extentBottom = 0;

  const body = document.body;
  if (!body) throw new Error("document has no <body>");

  const styleOf = (el: Element) => (el as HTMLElement).style;

  function layout(el: Element, cb: Box, flowX: number, flowY: number, flowW: number, hidden: boolean): Box {
    const style = styleOf(el);
    const position = style.position || "static";
    positions.set(el, position);
    const noneHidden = hidden || style.display === "none";
    const rendered =
      !noneHidden && style.visibility !== "hidden" && style.opacity !== "0";
    shown.set(el, rendered);

    let w = px(style.width);
    let h = px(style.height);
    let x: number;
    let y: number;
    if (position === "fixed") {
      x = px(style.left) ?? 0;
      y = px(style.top) ?? 0;
      if (w === null) w = 0;
    } else if (position === "absolute") {
      x = cb.x + (px(style.left) ?? 0);
      y = cb.y + (px(style.top) ?? 0);
      if (w === null) w = 0;
    } else {
      x = flowX + (position === "relative" ? px(style.left) ?? 0 : 0);
      y = flowY + (position === "relative" ? px(style.top) ?? 0 : 0);
      if (w === null) w = flowW;
    }

    const box: Box = { x, y, w, h: h ?? 0 };
    const childCb = position === "static" ? cb : box;
    let cursor = y;
    const texts: Text[] = [];
    const children = el.childNodes;
    for (let i = 0; i < children.length; i++) {
      const child = children[i];
      if (child.nodeType === 1) {
        const childStyle = styleOf(child as Element);
        const childBox = layout(child as Element, childCb, x, cursor, w, noneHidden);
        const childPos = childStyle.position || "static";
        if (childPos === "static" || childPos === "relative") {
          cursor += childBox.h;
        }
      } else if (child.nodeType === 3) {
        texts.push(child as Text);
      }
    }
    if (h === null) box.h = cursor - y;
    if (noneHidden) {
      box.x = 0;
      box.y = 0;
      box.w = 0;
      box.h = 0;
    }
    rects.set(el, box);
    for (const t of texts) {
      textRects.set(t, box.w > 0 && box.h > 0 ? [{ ...box }] : []);
    }
    if (position !== "fixed") {
      extentRight = Math.max(extentRight, box.x + box.w);
      extentBottom = Math.max(extentBottom, box.y + box.h);
    }
    return box;
  }

  const bodyW = px(styleOf(body).width) ?? viewport.w;
  const origin: Box = { x: 0, y: 0, w: bodyW, h: 0 };
  const bodyBox = layout(body, origin, 0, 0, bodyW, false);

  const docW = px(styleOf(body).width) ?? Math.max(extentRight, viewport.w);
  const docH = px(styleOf(body).height) ?? Math.max(extentBottom, viewport.h);
  // the body box stands in for the whole document area
  bodyBox.w = Math.max(bodyBox.w, docW);
  bodyBox.h = Math.max(bodyBox.h, docH);

  return {
    provider: {
      elementRect: (el) => ({ ...(rects.get(el) ?? { x: 0, y: 0, w: 0, h: 0 }) }),
      textRects: (t) => textRects.get(t) ?? [],
      position: (el) => positions.get(el) ?? "static",
      rendered: (el) => shown.get(el) ?? true,
    },
    docSize: { w: docW, h: docH },
  };
}
