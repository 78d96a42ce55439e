export class CaptureError extends Error {}

export class LoadTimeout extends CaptureError {}

export class NavigationError extends CaptureError {}

export class SelectorNotFound extends CaptureError {
  constructor(selector: string) {
    super(`truth selector matched nothing: ${selector}`);
  }
}
