/**
 * Typed client for the teamcraft session service.
 *
 * Every number shown in the UI originates from these response bodies; the
 * client never recomputes a score.
 */

export interface SolutionMember {
  id: number;
  role: string;
  score: number;
  label?: string;
}

export interface SolutionTeam {
  id: number;
  members: SolutionMember[];
  capacity: number;
  team_score: number;
  sigma: number | null;
}

export interface SolutionDocument {
  participants: number[];
  teams: SolutionTeam[];
  assembly: number[];
  roles: string[];
  stage: "INITIAL" | "FINAL";
  config: Record<string, unknown>;
  metrics: Record<string, unknown>;
}

export interface SwapEvent {
  i: number;
  j: number;
  timestamp: number;
  resulting_team_score: number;
}

export interface SessionBody {
  session_id: string;
  version: number;
  finalized: boolean;
  scores: number[][];
  roles: string[];
  labels: string[] | null;
  assembly: number[];
  initial: string[];
  current: string[];
  swap_log: SwapEvent[];
  team_scores: Record<string, number>;
  solution: SolutionDocument;
}

export interface WhatIfBody {
  team: number;
  new_team_scores: Record<string, number>;
  delta: number;
  rule3_warnings: string[];
  version: number;
}

export interface SolveRequest {
  scores: number[][];
  roles: string[];
  n: number;
  method?: string;
  seed?: number;
  labels?: string[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
  }
}

type FetchLike = typeof fetch;

export class SessionApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      const detail =
        typeof body?.detail === "string"
          ? body.detail
          : JSON.stringify(body?.detail ?? body);
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  createSession(payload: SolveRequest): Promise<SessionBody> {
    return this.post("/sessions", payload);
  }

  loadSession(id: string): Promise<SessionBody> {
    return this.request(`/sessions/${id}`);
  }

  whatIf(id: string, i: number, j: number): Promise<WhatIfBody> {
    return this.post(`/sessions/${id}/whatif`, { i, j });
  }

  commitSwap(id: string, i: number, j: number): Promise<SessionBody> {
    return this.post(`/sessions/${id}/swaps`, { i, j });
  }

  finalize(id: string): Promise<SessionBody> {
    return this.post(`/sessions/${id}/finalize`);
  }
}
