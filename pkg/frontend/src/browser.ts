import { LoadTimeout, NavigationError, SelectorNotFound } from "./errors";
import { buildNodeList, assembleSnapshot } from "./serializer";
import { CaptureOptions, CaptureOutput } from "./types";

/**
 * Headless-browser engine.  Needs the optional `playwright-core` package
 * plus a Chromium executable (set GCE_BROWSER to its path, or rely on the
 * default Playwright installation).  The serializer function is injected
 * into the page and runs against live layout APIs.
 */

async function loadPlaywright(): Promise<any> {
  try {
    // optional dependency: resolved at runtime only
    return require("playwright-core");
  } catch {
    throw new NavigationError(
      "browser engine unavailable: playwright-core is not installed " +
      "(npm install playwright-core and a Chromium build, or use --engine static)",
    );
  }
}

function targetToUrl(target: string): string {
  if (/^https?:\/\//i.test(target)) return target;
  const path = require("path");
  return "file://" + path.resolve(target);
}

export async function captureWithBrowser(opts: CaptureOptions): Promise<CaptureOutput> {
  const pw = await loadPlaywright();
  let browser: any;
  try {
    browser = await pw.chromium.launch({
      headless: true,
      executablePath: process.env.GCE_BROWSER || undefined,
    });
  } catch (e: any) {
    throw new NavigationError(`browser launch failed: ${e?.message ?? e}`);
  }
  try {
    const page = await browser.newPage({
      viewport: { width: opts.window.w, height: opts.window.h },
    });
    try {
      await page.goto(targetToUrl(opts.target), {
        timeout: 30_000 + opts.wait,
        waitUntil: "load",
      });
    } catch (e: any) {
      if (e?.name === "TimeoutError") throw new LoadTimeout(String(e?.message ?? e));
      throw new NavigationError(`navigation failed: ${e?.message ?? e}`);
    }
    if (opts.wait > 0) await page.waitForTimeout(opts.wait);

    const script = `(() => {
      const buildNodeList = ${buildNodeList.toString()};
      const doc = document;
      const sx = () => window.scrollX || 0;
      const sy = () => window.scrollY || 0;
      const provider = {
        elementRect: (el) => {
          const r = el.getBoundingClientRect();
          return { x: r.x + sx(), y: r.y + sy(), w: r.width, h: r.height };
        },
        textRects: (node) => {
          const range = doc.createRange();
          range.selectNodeContents(node);
          const out = [];
          const list = range.getClientRects();
          for (let i = 0; i < list.length; i++) {
            const r = list[i];
            out.push({ x: r.x + sx(), y: r.y + sy(), w: r.width, h: r.height });
          }
          return out;
        },
        position: (el) => getComputedStyle(el).position,
        rendered: (el) => {
          const st = getComputedStyle(el);
          return st.display !== "none" && st.visibility !== "hidden" &&
                 parseFloat(st.opacity) > 0;
        },
      };
      const de = doc.documentElement;
      const docSize = {
        w: Math.max(de.scrollWidth, doc.body ? doc.body.scrollWidth : 0),
        h: Math.max(de.scrollHeight, doc.body ? doc.body.scrollHeight : 0),
      };
      const truthSelector = ${JSON.stringify(opts.truthSelector ?? null)};
      let truthEl = null;
      if (truthSelector) {
        truthEl = doc.querySelector(truthSelector);
        if (!truthEl) return { error: "selector-not-found" };
      }
      const built = buildNodeList(doc.body, provider, docSize, truthEl);
      return { nodes: built.nodes, truthNodeId: built.truthNodeId, docSize };
    })()`;

    const result = await page.evaluate(script);
    if (result && result.error === "selector-not-found") {
      throw new SelectorNotFound(opts.truthSelector ?? "");
    }
    const snapshot = assembleSnapshot(result.nodes, opts.window, result.docSize);
    return { snapshot, truthNodeId: result.truthNodeId, engine: "browser" };
  } finally {
    await browser.close();
  }
}
