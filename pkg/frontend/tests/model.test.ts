import { describe, expect, it } from "vitest";

import type { JobSnapshot, PortSnapshot } from "../src/api.js";
import type { Entry, VolumeInfo } from "../src/format.js";
import * as model from "../src/model.js";

const volume: VolumeInfo = {
  label: "ALPHA",
  variant: "FAT16",
  total_bytes: 16_630_272,
  free_bytes: 16_628_224,
};

function entry(name: string, size = 0, isDir = false): Entry {
  return {
    name,
    path: `/${name}`,
    size_bytes: size,
    is_dir: isDir,
    mtime: null,
  };
}

function readyPort(port: string): PortSnapshot {
  return { port, status: "ready", volume, error: null };
}

function job(over: Partial<JobSnapshot>): JobSnapshot {
  return {
    id: "job-1",
    state: "running",
    src_port: "A",
    src_path: "/a.bin",
    dst_port: "B",
    dst_path: "/a.bin",
    total_bytes: 1000,
    copied_bytes: 0,
    error: null,
    ...over,
  };
}

function readyState(): model.AppState {
  let state = model.initialState();
  [state] = model.applyPorts(state, [readyPort("A"), readyPort("B")]);
  return state;
}

describe("port snapshots", () => {
  it("ready ports request a listing load", () => {
    const [state, effects] = model.applyPorts(model.initialState(), [
      readyPort("A"),
      { port: "B", status: "empty", volume: null, error: null },
    ]);
    expect(effects).toEqual([{ kind: "load", port: "A", path: "/" }]);
    expect(state.panes.A.status).toBe("ready");
    expect(state.panes.B.status).toBe("empty");
  });

  it("a failed probe clears the pane and raises a toast", () => {
    let state = readyState();
    state = model.applyListing(state, "A", "/", [entry("x.bin", 5)], volume);
    const [next] = model.applyPortSnapshot(state, {
      port: "A",
      status: "failed",
      volume: null,
      error: "no filesystem",
    });
    expect(next.panes.A.entries).toEqual([]);
    expect(next.panes.A.volume).toBeNull();
    expect(next.toasts.some((t) => t.includes("no filesystem"))).toBe(true);
  });

  it("listing keeps the selection only while the entry exists", () => {
    let state = readyState();
    state = model.applyListing(state, "A", "/", [entry("keep.bin", 1)], volume);
    state = model.select(state, "A", "/keep.bin");
    state = model.applyListing(state, "A", "/", [entry("keep.bin", 1)], volume);
    expect(state.panes.A.selection).toBe("/keep.bin");
    state = model.applyListing(state, "A", "/", [entry("other.bin", 2)], volume);
    expect(state.panes.A.selection).toBeNull();
  });
});

describe("job progress", () => {
  it("fraction is monotone and reaches exactly 100%", () => {
    let state = readyState();
    const seen: number[] = [];
    for (const copied of [0, 131072, 262144, 262144, 500000]) {
      state = model.applyJobProgress(
        state,
        job({ copied_bytes: copied, total_bytes: 500000 }),
      );
      seen.push(state.progress);
    }
    // a stale, lower progress event must not move the bar backwards
    state = model.applyJobProgress(
      state,
      job({ copied_bytes: 100, total_bytes: 500000 }),
    );
    seen.push(state.progress);
    const [finished] = model.applyJobFinished(
      state,
      job({ state: "done", copied_bytes: 500000, total_bytes: 500000 }),
    );
    seen.push(finished.progress);
    for (let i = 1; i < seen.length; i++) {
      expect(seen[i]).toBeGreaterThanOrEqual(seen[i - 1] as number);
    }
    expect(finished.progress).toBe(1);
  });

  it("a new job resets the floor", () => {
    let state = readyState();
    state = model.applyJobProgress(state, job({ copied_bytes: 900 }));
    expect(state.progress).toBe(0.9);
    state = model.applyJobProgress(
      state,
      job({ id: "job-2", copied_bytes: 100 }),
    );
    expect(state.progress).toBe(0.1);
  });

  it("zero-byte jobs report 0 while running, 1 when finished", () => {
    expect(
      model.progressFraction(job({ total_bytes: 0, copied_bytes: 0 })),
    ).toBe(0);
    expect(
      model.progressFraction(
        job({ state: "done", total_bytes: 0, copied_bytes: 0 }),
      ),
    ).toBe(1);
  });
});

describe("job completion refreshes the destination", () => {
  it("emits a load effect for the destination pane's current path", () => {
    let state = readyState();
    state = model.applyListing(state, "B", "/docs", [], volume);
    const [, effects] = model.applyJobFinished(
      state,
      job({ state: "done", copied_bytes: 1000 }),
    );
    expect(effects).toEqual([{ kind: "load", port: "B", path: "/docs" }]);
  });

  it("the copied file appears once the reload lands, without user action", () => {
    let state = readyState();
    const [afterJob, effects] = model.applyJobFinished(
      state,
      job({ state: "done", copied_bytes: 1000 }),
    );
    expect(effects).toHaveLength(1);
    const fresh = [entry("a.bin", 1000)];
    const next = model.applyListing(
      afterJob,
      effects[0]!.port,
      effects[0]!.path,
      fresh,
      volume,
    );
    expect(next.panes.B.entries.map((e) => e.name)).toContain("a.bin");
  });

  it("failed jobs toast and still refresh the destination", () => {
    const [next, effects] = model.applyJobFinished(
      readyState(),
      job({ state: "failed", error: "device gone: port B detached" }),
    );
    expect(next.toasts.some((t) => t.includes("device gone"))).toBe(true);
    expect(effects).toHaveLength(1);
  });

  it("no refresh when the destination pane is not ready", () => {
    const [, effects] = model.applyJobFinished(
      model.initialState(),
      job({ state: "done", copied_bytes: 1000 }),
    );
    expect(effects).toEqual([]);
  });
});

describe("paths", () => {
  it("parentPath walks toward the root and stops there", () => {
    expect(model.parentPath("/docs/q1/a")).toBe("/docs/q1");
    expect(model.parentPath("/docs")).toBe("/");
    expect(model.parentPath("/")).toBe("/");
  });
});
