#!/usr/bin/env node
import * as fs from "fs";
import { parseArgs } from "util";

import { captureSnapshot } from "./capture";
import { CaptureError } from "./errors";
import { CaptureOptions, EngineName, GroundTruthJson } from "./types";

const USAGE = `usage: gce-capture capture (--url <url> | --file <path>) [options]

options:
  --viewport WxH     browser window size (default 1920x1080)
  --wait MS          settle time after load (default 0)
  --out PATH         snapshot output file (default stdout)
  --truth SELECTOR   also emit <out>.truth.json for the matched element
  --engine NAME      auto | browser | static (default auto)
`;

function parseViewport(text: string): { w: number; h: number } {
  const m = /^(\d+)x(\d+)$/.exec(text);
  if (!m) throw new CaptureError(`bad viewport "${text}", expected WxH`);
  return { w: parseInt(m[1], 10), h: parseInt(m[2], 10) };
}

export async function main(argv: string[]): Promise<number> {
  const { values, positionals } = parseArgs({
    args: argv,
    allowPositionals: true,
    options: {
      url: { type: "string" },
      file: { type: "string" },
      viewport: { type: "string", default: "1920x1080" },
      wait: { type: "string", default: "0" },
      out: { type: "string" },
      truth: { type: "string" },
      engine: { type: "string", default: "auto" },
      help: { type: "boolean", default: false },
    },
  });

  if (values.help || positionals[0] !== "capture") {
    process.stderr.write(USAGE);
    return values.help ? 0 : 1;
  }
  const target = values.url ?? values.file;
  if (!target || (values.url && values.file)) {
    process.stderr.write("error: pass exactly one of --url or --file\n");
    return 1;
  }
  const engine = values.engine as EngineName;
  if (!["auto", "browser", "static"].includes(engine)) {
    process.stderr.write(`error: unknown engine ${engine}\n`);
    return 1;
  }
  const wait = parseInt(values.wait ?? "0", 10);
  if (!Number.isFinite(wait) || wait < 0) {
    process.stderr.write("error: --wait must be >= 0\n");
    return 1;
  }

  let opts: CaptureOptions;
  try {
    opts = {
      target,
      window: parseViewport(values.viewport ?? "1920x1080"),
      wait,
      truthSelector: values.truth,
      engine,
    };
  } catch (e: any) {
    process.stderr.write(`error: ${e.message}\n`);
    return 1;
  }

  try {
    const result = await captureSnapshot(opts);
    const payload = JSON.stringify(result.snapshot, null, 1) + "\n";
    if (values.out) {
      fs.writeFileSync(values.out, payload, "utf-8");
    } else {
      process.stdout.write(payload);
    }
    if (opts.truthSelector && result.truthNodeId !== undefined) {
      const base = (values.out ?? "snapshot.json").replace(/\.json$/, "");
      const name = base.split(/[\\/]/).pop() ?? base;
      const truth: GroundTruthJson = { snapshot: name, truthNodeId: result.truthNodeId };
      fs.writeFileSync(base + ".truth.json", JSON.stringify(truth) + "\n", "utf-8");
    }
    return 0;
  } catch (e: any) {
    if (e instanceof CaptureError) {
      process.stderr.write(`error: ${e.message}\n`);
      return 1;
    }
    throw e;
  }
}

if (require.main === module) {
  main(process.argv.slice(2)).then(
    (code) => process.exit(code),
    (e) => {
      process.stderr.write(`unexpected error: ${e?.stack ?? e}\n`);
      process.exit(1);
    },
  );
}
