import * as fs from "fs";

import { JSDOM } from "jsdom";

import { captureWithBrowser } from "./browser";
import { NavigationError, SelectorNotFound } from "./errors";
import { assembleSnapshot, buildNodeList } from "./serializer";
import { layoutStatic } from "./static-layout";
import { CaptureOptions, CaptureOutput } from "./types";

function isUrl(target: string): boolean {
  return /^https?:\/\//i.test(target);
}

async function browserInstalled(): Promise<boolean> {
  try {
    require.resolve("playwright-core");
    return true;
  } catch {
    return false;
  }
}

export async function captureStatic(opts: CaptureOptions): Promise<CaptureOutput> {
  if (isUrl(opts.target)) {
    throw new NavigationError("the static engine only loads local files");
  }
  if (/\.mhtml?$/i.test(opts.target)) {
    throw new NavigationError("MHTML needs the browser engine");
  }
  let html: string;
  try {
    html = fs.readFileSync(opts.target, "utf-8");
  } catch (e: any) {
    throw new NavigationError(`cannot read ${opts.target}: ${e?.message ?? e}`);
  }
  const dom = new JSDOM(html);
  const document = dom.window.document;
  const { provider, docSize } = layoutStatic(document, opts.window);
  let truthEl: Element | null = null;
  if (opts.truthSelector) {
    truthEl = document.querySelector(opts.truthSelector);
    if (!truthEl) throw new SelectorNotFound(opts.truthSelector);
  }
  const built = buildNodeList(document.body, provider, docSize, truthEl);
  return {
    snapshot: assembleSnapshot(built.nodes, opts.window, docSize),
    truthNodeId: built.truthNodeId,
    engine: "static",
  };
}

/**
 * Run one capture.  Engine selection:
 *  - "browser" / "static": use that engine, fail if it cannot.
 *  - "auto": URLs and MHTML need the browser; local HTML uses the browser
 *    when playwright-core is installed and the static layout engine
 *    otherwise.
 */
export async function captureSnapshot(opts: CaptureOptions): Promise<CaptureOutput> {
  if (opts.engine === "browser") return captureWithBrowser(opts);
  if (opts.engine === "static") return captureStatic(opts);
  if (isUrl(opts.target) || /\.mhtml?$/i.test(opts.target)) {
    return captureWithBrowser(opts);
  }
  return (await browserInstalled()) ? captureWithBrowser(opts) : captureStatic(opts);
}
