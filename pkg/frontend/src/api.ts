// Typed client for the /v1 service endpoints. Keeps at most one in-flight
// request per endpoint: a newer call aborts the older one.

export interface ApiCandidate {
  api: string;
  kac: number;
  kkc: number;
  relevance: number;
  kac_raw: number;
  kkc_raw: number;
  kac_full: number;
  kkc_full: number;
  relevance_full: number;
}

export interface ReformulateResponse {
  keywords: string[];
  candidates: ApiCandidate[];
}

export interface SnippetRow {
  rank: number;
  combined: number;
  similarity: number;
  combined_full: number;
  similarity_full: number;
  repo: string;
  path: string;
  host_score: number;
  host_rank: number;
  name: string;
  start_line: number;
  end_line: number;
  matched_keywords: string[];
  body: string;
}

export interface SearchResponse {
  results: SnippetRow[];
  notice?: string;
}

export type SearchMode = "top1" | "topk";

export interface SearchRequest {
  query: string;
  apis: string[];
  mode: SearchMode;
  k?: number;
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export class RequestCancelled extends Error {}

export class ServiceClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    private baseUrl = "",
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async reformulate(query: string, top = 10): Promise<ReformulateResponse> {
    return this.post<ReformulateResponse>("/v1/reformulate", { query, top });
  }

  async search(request: SearchRequest): Promise<SearchResponse> {
    return this.post<SearchResponse>("/v1/search", request);
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    this.inflight.get(path)?.abort();
    const controller = new AbortController();
    this.inflight.set(path, controller);
    let response: Response;
    try {
      response = await this.fetchFn(this.baseUrl + path, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (error) {
      if ((error as Error).name === "AbortError") {
        throw new RequestCancelled(path);
      }
      throw new ServiceError(0, "NETWORK", String(error));
    } finally {
      if (this.inflight.get(path) === controller) {
        this.inflight.delete(path);
      }
    }
    if (!response.ok) {
      let code = "ERROR";
      let message = `service returned ${response.status}`;
      try {
        const payload = (await response.json()) as { code?: string; message?: string };
        code = payload.code ?? code;
        message = payload.message ?? message;
      } catch {
        // non-JSON error body: keep defaults
      }
      throw new ServiceError(response.status, code, message);
    }
    return (await response.json()) as T;
  }
}
