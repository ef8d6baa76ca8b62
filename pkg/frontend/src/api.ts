// Typed client for the readiness API. Every request is appended to `log`,
// which the what-if tests use to prove the panel never mutates anything.

import type {
  ApiErrorBody,
  Assessment,
  CatalogDto,
  OverallReport,
  ProjectDto,
  ScoreSheet,
  ServiceReport,
  UseCaseReport,
  WhatIfOverride,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface RequestLogEntry {
  method: string;
  path: string;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    detail: string,
    public errors?: ApiErrorBody["errors"],
  ) {
    super(detail);
  }
}

export class ApiClient {
  readonly log: RequestLogEntry[] = [];
  private fetchImpl: FetchLike;

  constructor(private baseUrl = "", fetchImpl?: FetchLike) {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    this.log.push({ method, path });
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.baseUrl + path, init);
    if (!res.ok) {
      let parsed: ApiErrorBody | null = null;
      try {
        parsed = (await res.json()) as ApiErrorBody;
      } catch {
        // non-JSON error body; fall through with a generic code
      }
      throw new ApiError(
        res.status,
        parsed?.code ?? "http-error",
        parsed?.detail ?? `HTTP ${res.status} for ${path}`,
        parsed?.errors,
      );
    }
    return (await res.json()) as T;
  }

  getCatalog(): Promise<CatalogDto> {
    return this.request("GET", "/api/catalog");
  }

  getProject(): Promise<ProjectDto> {
    return this.request("GET", "/api/project");
  }

  getAssessments(useCase: string): Promise<{ use_case_id: string; assessments: Assessment[] }> {
    return this.request("GET", `/api/assessments/${encodeURIComponent(useCase)}`);
  }

  putAssessments(useCase: string, assessments: Assessment[]): Promise<ScoreSheet> {
    return this.request("PUT", `/api/assessments/${encodeURIComponent(useCase)}`, assessments);
  }

  getUseCaseReport(useCase: string): Promise<UseCaseReport> {
    return this.request("GET", `/api/reports/usecase/${encodeURIComponent(useCase)}`);
  }

  getServiceReport(service: string): Promise<ServiceReport> {
    return this.request("GET", `/api/reports/service/${encodeURIComponent(service)}`);
  }

  getOverallReport(): Promise<OverallReport> {
    return this.request("GET", "/api/reports/overall");
  }

  whatIf(useCase: string, overrides: WhatIfOverride[]): Promise<UseCaseReport> {
    return this.request("POST", "/api/whatif", { use_case_id: useCase, overrides });
  }

  listSnapshots(): Promise<{ snapshots: { id: string; label: string; timestamp: string }[] }> {
    return this.request("GET", "/api/snapshots");
  }

  createSnapshot(label: string): Promise<{ id: string }> {
    return this.request("POST", "/api/snapshots", { label });
  }
}

export function mutatingRequests(log: RequestLogEntry[]): RequestLogEntry[] {
  // POST /api/whatif is stateless by contract; everything else non-GET mutates.
  return log.filter((e) => e.method !== "GET" && !(e.method === "POST" && e.path === "/api/whatif"));
}
