/**
 * Controller: owns the state, talks to the gateway, re-renders on change.
 *
 * The service address defaults to same-origin and can be overridden with
 * ?api=http://127.0.0.1:8787 for serving the static files separately.
 */

import { ApiError, Client } from "./api.js";
import type { JobSnapshot, PortSnapshot } from "./api.js";
import * as model from "./model.js";
import type { AppState, Effect, PortId } from "./model.js";
import { render } from "./view.js";
import type { Handlers } from "./view.js";

function apiBase(): string {
  const override = new URLSearchParams(window.location.search).get("api");
  return override ? override.replace(/\/$/, "") : "";
}

export class App {
  state: AppState = model.initialState();

  constructor(
    private readonly root: HTMLElement,
    private readonly client: Client,
  ) {}

  async start(): Promise<void> {
    this.client.events((kind, payload) => this.onEvent(kind, payload));
    try {
      const ports = await this.client.ports();
      this.apply(model.applyPorts(this.state, ports));
    } catch (err) {
      this.toast(err);
    }
    this.draw();
  }

  private apply(result: [AppState, Effect[]] | AppState): void {
    if (Array.isArray(result)) {
      const [next, effects] = result;
      this.state = next;
      for (const effect of effects) void this.runEffect(effect);
    } else {
      this.state = result;
    }
    this.draw();
  }

  private async runEffect(effect: Effect): Promise<void> {
    try {
      const listing = await this.client.listing(effect.port, effect.path);
      this.apply(
        model.applyListing(
          this.state,
          effect.port,
          listing.path,
          listing.entries,
          listing.volume,
        ),
      );
    } catch (err) {
      this.toast(err);
    }
  }

  private onEvent(kind: string, payload: unknown): void {
    if (kind === "port-changed") {
      this.apply(model.applyPortSnapshot(this.state, payload as PortSnapshot));
    } else if (kind === "job-progress") {
      this.apply(model.applyJobProgress(this.state, payload as JobSnapshot));
    } else if (kind === "job-finished") {
      this.apply(model.applyJobFinished(this.state, payload as JobSnapshot));
    }
  }

  private toast(err: unknown): void {
    const message =
      err instanceof ApiError
        ? `${err.code}: ${err.message}`
        : String(err instanceof Error ? err.message : err);
    this.state = { ...this.state, toasts: [...this.state.toasts, message] };
    this.draw();
  }

  private handlers(): Handlers {
    return {
      onSelect: (port, path) => {
        this.apply(model.select(this.state, port, path));
      },
      onOpen: (port, path) => {
        void this.runEffect({ kind: "load", port, path });
      },
      onUp: (port) => {
        const pane = this.state.panes[port];
        void this.runEffect({
          kind: "load",
          port,
          path: model.parentPath(pane.path),
        });
      },
      onAttach: (port, image, readOnly) => {
        if (!image) return;
        this.client.attach(port, image, readOnly).catch((err) => {
          this.toast(err);
        });
      },
      onDetach: (port) => {
        this.client.detach(port).catch((err) => this.toast(err));
      },
      onCopy: (src: PortId) => {
        const pane = this.state.panes[src];
        if (!pane.selection) return;
        const entry = pane.entries.find((e) => e.path === pane.selection);
        if (!entry) return;
        const dst = model.otherPort(src);
        this.client
          .startCopy({
            src_port: src,
            src_path: entry.path,
            dst_port: dst,
            dst_path: this.state.panes[dst].path,
            recursive: entry.is_dir,
          })
          .then((job) => this.apply(model.applyJobProgress(this.state, job)))
          .catch((err) => this.toast(err));
      },
      onCancel: (jobId) => {
        this.client.cancel(jobId).catch((err) => this.toast(err));
      },
      onDismissToasts: () => {
        this.apply(model.dismissToasts(this.state));
      },
    };
  }

  draw(): void {
    render(this.root, this.state, this.handlers());
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  const app = new App(
    document.getElementById("app") as HTMLElement,
    new Client(apiBase()),
  );
  void app.start();
}
