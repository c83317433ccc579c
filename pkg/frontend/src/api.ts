// Thin API client. Every mutable-state fetch goes through a latest-wins
// gate so a stale response can never overwrite a newer one.

import type { DataRow } from "./model.js";

export interface SpaceInfo {
  marks: string[];
  channels: string[];
  attrs: string[];
  eligibility: Record<string, Record<string, boolean>>;
}

export interface Verdict {
  viable: boolean;
  violations: string[];
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

async function getJson(url: string): Promise<any> {
  const resp = await fetch(url);
  if (!resp.ok) throw new ApiError(`${url} -> ${resp.status}`, resp.status);
  return resp.json();
}

async function postJson(url: string, body: unknown): Promise<Response> {
  return fetch(url, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
}

export async function fetchSpace(base = ""): Promise<SpaceInfo> {
  return getJson(`${base}/api/space`);
}

export async function fetchViableConfigs(base = ""): Promise<string[]> {
  const body = await getJson(`${base}/api/enumerate?viable=true`);
  return body.configs;
}

export async function validateConfig(config: string, base = ""): Promise<Verdict> {
  const resp = await postJson(`${base}/api/validate`, { config });
  const body = await resp.json();
  if (!resp.ok) throw new ApiError(body.message ?? "validate failed", resp.status);
  return body;
}

export async function renderConfig(
  config: string, rows: DataRow[] | null, base = "",
): Promise<string> {
  const payload: Record<string, unknown> = { config };
  if (rows !== null) payload.rows = rows;
  const resp = await postJson(`${base}/api/render`, payload);
  if (!resp.ok) {
    const body = await resp.json();
    throw new ApiError(body.message ?? "render failed", resp.status);
  }
  return resp.text();
}

/**
 * Latest-wins gate: run() tags each call; apply() only sees the result of
 * the newest call still in flight.
 */
export class LatestWins<T> {
  private counter = 0;

  async run(task: () => Promise<T>, apply: (result: T) => void,
            onError?: (err: unknown) => void): Promise<void> {
    const ticket = ++this.counter;
    try {
      const result = await task();
      if (ticket === this.counter) apply(result);
    } catch (err) {
      if (ticket === this.counter && onError) onError(err);
    }
  }
}
