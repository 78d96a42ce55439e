export { captureSnapshot, captureStatic } from "./capture";
export { captureWithBrowser } from "./browser";
export { buildNodeList, assembleSnapshot } from "./serializer";
export type { GeometryProvider } from "./serializer";
export { layoutStatic } from "./static-layout";
export { validateSnapshot } from "./validate";
export { CaptureError, LoadTimeout, NavigationError, SelectorNotFound } from "./errors";
export type {
  CaptureOptions,
  CaptureOutput,
  EngineName,
  GroundTruthJson,
  RectJson,
  SizeJson,
  SnapshotJson,
  SnapshotNodeJson,
} from "./types";
