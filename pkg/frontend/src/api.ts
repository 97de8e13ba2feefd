/** HTTP + event-stream client for the bridge gateway. */

import type { Entry, VolumeInfo } from "./format.js";

export interface PortSnapshot {
  port: string;
  status: string;
  volume: VolumeInfo | null;
  error: string | null;
}

export interface Listing {
  port: string;
  path: string;
  entries: Entry[];
  volume: VolumeInfo;
}

export interface JobSnapshot {
  id: string;
  state: string;
  src_port: string;
  src_path: string;
  dst_port: string;
  dst_path: string;
  total_bytes: number;
  copied_bytes: number;
  error: string | null;
}

export interface CopyRequest {
  src_port: string;
  src_path: string;
  dst_port: string;
  dst_path: string;
  overwrite?: boolean;
  recursive?: boolean;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class Client {
  constructor(
    readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  ports(): Promise<PortSnapshot[]> {
    return this.request<{ ports: PortSnapshot[] }>("GET", "/v1/ports").then(
      (body) => body.ports,
    );
  }

  listing(port: string, path: string): Promise<Listing> {
    const q = encodeURIComponent(path);
    return this.request<Listing>("GET", `/v1/fs/${port}?path=${q}`);
  }

  attach(port: string, image: string, readOnly = false): Promise<PortSnapshot> {
    return this.request<PortSnapshot>("POST", `/v1/ports/${port}/attach`, {
      image,
      read_only: readOnly,
    });
  }

  detach(port: string): Promise<PortSnapshot> {
    return this.request<PortSnapshot>("POST", `/v1/ports/${port}/detach`);
  }

  startCopy(req: CopyRequest): Promise<JobSnapshot> {
    return this.request<JobSnapshot>("POST", "/v1/jobs", req);
  }

  job(id: string): Promise<JobSnapshot> {
    return this.request<JobSnapshot>("GET", `/v1/jobs/${id}`);
  }

  cancel(id: string): Promise<JobSnapshot> {
    return this.request<JobSnapshot>("POST", `/v1/jobs/${id}/cancel`);
  }

  /**
   * Subscribe to the gateway event stream. Returns an unsubscribe function.
   * Event kinds: port-changed, job-progress, job-finished.
   */
  events(handler: (kind: string, payload: unknown) => void): () => void {
    const source = new EventSource(`${this.base}/v1/events`);
    for (const kind of ["port-changed", "job-progress", "job-finished"]) {
      source.addEventListener(kind, (ev) => {
        handler(kind, JSON.parse((ev as MessageEvent).data as string));
      });
    }
    return () => source.close();
  }

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(`${this.base}${path}`, init);
    const text = await response.text();
    let parsed: unknown = null;
    if (text) {
      try {
        parsed = JSON.parse(text);
      } catch {
        throw new ApiError("bad-response", text.slice(0, 200), response.status);
      }
    }
    if (!response.ok) {
      const err = (parsed as { error?: { code?: string; message?: string } })
        ?.error;
      throw new ApiError(
        err?.code ?? "internal",
        err?.message ?? `HTTP ${response.status}`,
        response.status,
      );
    }
    return parsed as T;
  }
}
