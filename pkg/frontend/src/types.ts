/** Snapshot JSON wire format (schema version 1), shared with the extractor. */

export interface RectJson {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface SizeJson {
  w: number;
  h: number;
}

export interface SnapshotNodeJson {
  id: number;
  parent?: number;
  kind: "element" | "text";
  tag?: string;
  attrId?: string;
  attrClass?: string;
  rect: RectJson;
  visible?: boolean;
  fixed?: boolean;
  isLink?: boolean;
  text?: string;
}

export interface SnapshotJson {
  version: string;
  window: SizeJson;
  document: SizeJson;
  nodes: SnapshotNodeJson[];
}

export interface GroundTruthJson {
  snapshot: string;
  truthNodeId: number;
}

export const SCHEMA_VERSION = "1";

export type EngineName = "auto" | "browser" | "static";

export interface CaptureOptions {
  /** URL (http/https) or a local .html/.mhtml path. */
  target: string;
  /** Viewport size; defaults to 1920x1080. */
  window: SizeJson;
  /** Settle time in ms after load before serializing. */
  wait: number;
  /** CSS selector whose matched element becomes the ground-truth node. */
  truthSelector?: string;
  engine: EngineName;
}

export interface CaptureOutput {
  snapshot: SnapshotJson;
  truthNodeId?: number;
  engine: "browser" | "static";
}
