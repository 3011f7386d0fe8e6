// Shared test plumbing: a fetch stub that replays canned responses and
// records every request body it saw.

import type { FetchLike } from "../src/api.js";

export interface RecordedCall {
  path: string;
  body: unknown;
  signal: AbortSignal | null;
}

export interface FetchStub {
  fn: FetchLike;
  calls: RecordedCall[];
}

type Canned = { status?: number; json: unknown };

export function cannedFetch(routes: Record<string, Canned | Canned[]>): FetchStub {
  const calls: RecordedCall[] = [];
  const served: Record<string, number> = {};
  const fn: FetchLike = (input, init) => {
    const path = input.replace(/^https?:\/\/[^/]+/, "");
    calls.push({
      path,
      body: init?.body ? JSON.parse(init.body as string) : null,
      signal: init?.signal ?? null,
    });
    const route = routes[path];
    if (!route) {
      return Promise.resolve(jsonResponse(404, { code: "NOT_FOUND", message: path }));
    }
    const sequence = Array.isArray(route) ? route : [route];
    const index = Math.min(served[path] ?? 0, sequence.length - 1);
    served[path] = (served[path] ?? 0) + 1;
    const canned = sequence[index]!;
    return Promise.resolve(jsonResponse(canned.status ?? 200, canned.json));
  };
  return { fn, calls };
}

export function jsonResponse(status: number, payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export function mountApp(): HTMLElement {
  document.body.innerHTML = '<div id="app"></div>';
  return document.getElementById("app")!;
}
