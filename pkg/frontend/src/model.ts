/**
 * Pure view-model: pane state, job progress, and the reducers that apply
 * API responses and stream events. Reducers return the next state plus a
 * list of effects (directories to reload); the controller performs the
 * fetches, so the logic here stays synchronous and testable.
 *
 * Invariants kept here: the rendered listing always reflects the most
 * recent fs response for the displayed path, and the job progress fraction
 * is copied/total clamped to [0, 1] and never moves backwards for a job.
 */

import type { JobSnapshot, PortSnapshot } from "./api.js";
import type { Entry, VolumeInfo } from "./format.js";

export type PortId = "A" | "B";

export interface PaneState {
  port: PortId;
  status: string; // empty | probing | ready | failed
  path: string;
  entries: Entry[];
  volume: VolumeInfo | null;
  selection: string | null; // path of the selected entry
  error: string | null;
}

export interface AppState {
  panes: Record<PortId, PaneState>;
  job: JobSnapshot | null;
  progress: number; // monotone fraction of the job above
  toasts: string[];
}

export interface LoadEffect {
  kind: "load";
  port: PortId;
  path: string;
}

export type Effect = LoadEffect;

const MAX_TOASTS = 4;

function emptyPane(port: PortId): PaneState {
  return {
    port,
    status: "empty",
    path: "/",
    entries: [],
    volume: null,
    selection: null,
    error: null,
  };
}

export function initialState(): AppState {
  return {
    panes: { A: emptyPane("A"), B: emptyPane("B") },
    job: null,
    progress: 0,
    toasts: [],
  };
}

export function otherPort(port: PortId): PortId {
  return port === "A" ? "B" : "A";
}

export function progressFraction(job: JobSnapshot): number {
  if (job.total_bytes <= 0) {
    return job.state === "queued" || job.state === "running" ? 0 : 1;
  }
  const fraction = job.copied_bytes / job.total_bytes;
  return Math.min(1, Math.max(0, fraction));
}

function asPortId(value: string): PortId | null {
  return value === "A" || value === "B" ? value : null;
}

function withPane(state: AppState, pane: PaneState): AppState {
  return { ...state, panes: { ...state.panes, [pane.port]: pane } };
}

function pushToast(state: AppState, message: string): AppState {
  return { ...state, toasts: [...state.toasts, message].slice(-MAX_TOASTS) };
}

/** Apply one port snapshot; ready panes request a listing reload. */
export function applyPortSnapshot(
  state: AppState,
  snap: PortSnapshot,
): [AppState, Effect[]] {
  const port = asPortId(snap.port);
  if (!port) return [state, []];
  const previous = state.panes[port];
  const pane: PaneState = {
    ...previous,
    status: snap.status,
    volume: snap.volume,
    error: snap.error,
  };
  if (snap.status !== "ready") {
    pane.path = "/";
    pane.entries = [];
    pane.selection = null;
    pane.volume = null;
  }
  let next = withPane(state, pane);
  if (snap.status === "failed" && snap.error) {
    next = pushToast(next, `port ${port}: ${snap.error}`);
  }
  const effects: Effect[] =
    snap.status === "ready" ? [{ kind: "load", port, path: pane.path }] : [];
  return [next, effects];
}

export function applyPorts(
  state: AppState,
  snaps: readonly PortSnapshot[],
): [AppState, Effect[]] {
  let next = state;
  const effects: Effect[] = [];
  for (const snap of snaps) {
    const [after, more] = applyPortSnapshot(next, snap);
    next = after;
    effects.push(...more);
  }
  return [next, effects];
}

/** Install a fresh listing; drops a selection that no longer exists. */
export function applyListing(
  state: AppState,
  port: PortId,
  path: string,
  entries: Entry[],
  volume: VolumeInfo,
): AppState {
  const previous = state.panes[port];
  const stillThere = entries.some((e) => e.path === previous.selection);
  return withPane(state, {
    ...previous,
    path,
    entries,
    volume,
    selection: stillThere ? previous.selection : null,
  });
}

export function select(
  state: AppState,
  port: PortId,
  path: string | null,
): AppState {
  return withPane(state, { ...state.panes[port], selection: path });
}

export function applyJobProgress(
  state: AppState,
  job: JobSnapshot,
): AppState {
  const sameJob = state.job !== null && state.job.id === job.id;
  const floor = sameJob ? state.progress : 0;
  return { ...state, job, progress: Math.max(floor, progressFraction(job)) };
}

/**
 * Terminal job event: lock the fraction (1.0 on success) and reload the
 * destination pane so the copied file shows up without a manual refresh.
 */
export function applyJobFinished(
  state: AppState,
  job: JobSnapshot,
): [AppState, Effect[]] {
  let next = applyJobProgress(state, job);
  if (job.state === "done") {
    next = { ...next, progress: 1 };
  }
  if (job.state === "failed") {
    next = pushToast(next, `${job.id} failed: ${job.error ?? "unknown"}`);
  }
  if (job.state === "cancelled") {
    next = pushToast(next, `${job.id} cancelled`);
  }
  const port = asPortId(job.dst_port);
  const effects: Effect[] = [];
  if (port && next.panes[port].status === "ready") {
    effects.push({ kind: "load", port, path: next.panes[port].path });
  }
  return [next, effects];
}

export function dismissToasts(state: AppState): AppState {
  return { ...state, toasts: [] };
}

/** Parent of an absolute path ("/docs/q1" -> "/docs", "/docs" -> "/"). */
export function parentPath(path: string): string {
  if (path === "/") return "/";
  const cut = path.lastIndexOf("/");
  return cut <= 0 ? "/" : path.slice(0, cut);
}
