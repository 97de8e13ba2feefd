/**
 * DOM rendering for the 480x272 touch screen: two panes (port A left,
 * port B right), a job strip with a progress bar, and toast errors.
 *
 * Listing rows and the footer are rendered verbatim from the canonical
 * formatter, so what the screen shows is exactly what the CLI prints.
 */

import type { AppState, PaneState, PortId } from "./model.js";
import { formatLine, infoLine, sortEntries } from "./format.js";
import { otherPort, progressFraction } from "./model.js";

export interface Handlers {
  onSelect(port: PortId, path: string | null): void;
  onOpen(port: PortId, path: string): void;
  onUp(port: PortId): void;
  onAttach(port: PortId, image: string, readOnly: boolean): void;
  onDetach(port: PortId): void;
  onCopy(src: PortId): void;
  onCancel(jobId: string): void;
  onDismissToasts(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderPane(
  doc: Document,
  pane: PaneState,
  handlers: Handlers,
): HTMLElement {
  const root = el(doc, "section", `pane pane-${pane.port}`);
  root.dataset["port"] = pane.port;

  const head = el(doc, "header", "pane-head");
  head.append(el(doc, "span", "pane-title", `Port ${pane.port}`));
  head.append(el(doc, "span", "pane-status", pane.status));
  if (pane.status === "ready") {
    const detach = el(doc, "button", "btn detach", "eject");
    detach.addEventListener("click", () => handlers.onDetach(pane.port));
    head.append(detach);
  }
  root.append(head);

  if (pane.status !== "ready") {
    const form = el(doc, "div", "attach-form");
    const input = el(doc, "input", "attach-image") as HTMLInputElement;
    input.placeholder = "image path";
    const ro = el(doc, "input", "attach-ro") as HTMLInputElement;
    ro.type = "checkbox";
    const roLabel = el(doc, "label", "attach-ro-label", "ro");
    roLabel.prepend(ro);
    const go = el(doc, "button", "btn attach", "attach");
    go.addEventListener("click", () =>
      handlers.onAttach(pane.port, input.value, ro.checked),
    );
    form.append(input, roLabel, go);
    if (pane.error) form.append(el(doc, "div", "pane-error", pane.error));
    root.append(form);
    return root;
  }

  const crumbs = el(doc, "div", "pane-path");
  crumbs.append(el(doc, "span", "path-text", pane.path));
  if (pane.path !== "/") {
    const up = el(doc, "button", "btn up", "up");
    up.addEventListener("click", () => handlers.onUp(pane.port));
    crumbs.append(up);
  }
  root.append(crumbs);

  const body = el(doc, "div", "pane-body");
  for (const entry of sortEntries(pane.entries)) {
    const row = el(doc, "div", "row", formatLine(entry));
    row.dataset["path"] = entry.path;
    if (entry.path === pane.selection) row.classList.add("selected");
    row.addEventListener("click", () => {
      if (entry.is_dir) handlers.onOpen(pane.port, entry.path);
      else
        handlers.onSelect(
          pane.port,
          entry.path === pane.selection ? null : entry.path,
        );
    });
    body.append(row);
  }
  root.append(body);

  const actions = el(doc, "div", "pane-actions");
  const copy = el(
    doc,
    "button",
    "btn copy",
    `copy to ${otherPort(pane.port)}`,
  ) as HTMLButtonElement;
  copy.disabled = pane.selection === null;
  copy.addEventListener("click", () => handlers.onCopy(pane.port));
  actions.append(copy);
  root.append(actions);

  if (pane.volume) {
    root.append(el(doc, "footer", "pane-foot", infoLine(pane.volume)));
  }
  return root;
}

function renderJobStrip(
  doc: Document,
  state: AppState,
  handlers: Handlers,
): HTMLElement {
  const strip = el(doc, "div", "job-strip");
  const job = state.job;
  if (!job) {
    strip.append(el(doc, "span", "job-idle", "no transfer"));
    return strip;
  }
  const pct = Math.round(
    (job.state === "done" ? 1 : Math.max(state.progress, progressFraction(job))) * 100,
  );
  const label =
    `${job.id} ${job.src_port}:${job.src_path} -> ` +
    `${job.dst_port}:${job.dst_path} ${job.state} ${pct}%`;
  strip.append(el(doc, "span", "job-label", label));
  const bar = el(doc, "div", "job-bar");
  const fill = el(doc, "div", "job-fill");
  fill.style.width = `${pct}%`;
  bar.append(fill);
  strip.append(bar);
  if (job.state === "queued" || job.state === "running") {
    const cancel = el(doc, "button", "btn cancel", "cancel");
    cancel.addEventListener("click", () => handlers.onCancel(job.id));
    strip.append(cancel);
  }
  return strip;
}

export function render(
  root: HTMLElement,
  state: AppState,
  handlers: Handlers,
): void {
  const doc = root.ownerDocument;
  root.textContent = "";
  const screen = el(doc, "div", "screen");
  const panes = el(doc, "div", "panes");
  panes.append(renderPane(doc, state.panes.A, handlers));
  panes.append(renderPane(doc, state.panes.B, handlers));
  screen.append(panes);
  screen.append(renderJobStrip(doc, state, handlers));
  if (state.toasts.length > 0) {
    const toasts = el(doc, "div", "toasts");
    for (const message of state.toasts) {
      toasts.append(el(doc, "div", "toast", message));
    }
    toasts.addEventListener("click", () => handlers.onDismissToasts());
    screen.append(toasts);
  }
  root.append(screen);
}
