import { describe, expect, it } from "vitest";

import { ApiClient, mutatingRequests } from "../src/api.js";
import { categoryDeltas, renderComparison } from "../src/panels.js";
import type { UseCaseReport } from "../src/types.js";

function report(overrides: Partial<UseCaseReport> = {}): UseCaseReport {
  return {
    use_case_id: "RWW-demo",
    enablers: [],
    categories: {
      physical: { readiness: 6, aspiration: 9, threshold: 3 },
      operation: { readiness: 3, aspiration: 9, threshold: 3 },
    },
    total_readiness: 5.8,
    total_aspiration: 8.7,
    total_threshold: 3.5,
    deployment_cost: 11,
    display: {
      total_readiness: "5.8",
      total_aspiration: "8.7",
      total_threshold: "3.5",
      categories: {},
    },
    feasibility: { use_case_id: "RWW-demo", feasible: true, blockers: [], margin: 0 },
    radar: [
      { label: "Readiness", values: [6, 3, 4.5, 6.5, 9], absent: [false, false, false, false, false], style: "solid" },
    ],
    impact: null,
    scenario_id: null,
    enabler_universe: [],
    ...overrides,
  };
}

function fakeFetch(bodies: Record<string, unknown>): (url: string, init?: RequestInit) => Promise<Response> {
  return async (url) => {
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const body = bodies[path];
    if (body === undefined) {
      return new Response(JSON.stringify({ code: "not-found", detail: path }), { status: 404 });
    }
    return new Response(JSON.stringify(body), { status: 200 });
  };
}

describe("what-if interactions", () => {
  it("a full what-if session issues zero mutating requests", async () => {
    const client = new ApiClient(
      "",
      fakeFetch({
        "/api/reports/usecase/RWW-demo": report(),
        "/api/whatif": report({ total_readiness: 7.0 }),
      }),
    );
    const baseline = await client.getUseCaseReport("RWW-demo");
    const overlay = await client.whatIf("RWW-demo", [
      { enabler_id: "response-plan", dimension: "readiness", level: "high" },
    ]);
    await client.whatIf("RWW-demo", []);

    expect(baseline.total_readiness).toBeCloseTo(5.8);
    expect(overlay.total_readiness).toBeCloseTo(7.0);
    expect(client.log).toHaveLength(3);
    expect(mutatingRequests(client.log)).toEqual([]);
  });

  it("saving the grid IS a mutating request (log sanity check)", async () => {
    const client = new ApiClient(
      "",
      fakeFetch({ "/api/assessments/RWW-demo": report() }),
    );
    await client.putAssessments("RWW-demo", []);
    expect(mutatingRequests(client.log)).toEqual([
      { method: "PUT", path: "/api/assessments/RWW-demo" },
    ]);
  });

  it("surfaces API error codes", async () => {
    const client = new ApiClient("", async () =>
      new Response(
        JSON.stringify({ code: "importance-none-forbidden", detail: "importance cannot be 'none'" }),
        { status: 400 },
      ),
    );
    await expect(client.whatIf("RWW-demo", [])).rejects.toMatchObject({
      status: 400,
      code: "importance-none-forbidden",
    });
  });
});

describe("comparison deltas", () => {
  it("empty overrides produce identical polygons and no deltas", () => {
    const base = report();
    const same = report();
    expect(categoryDeltas(base, same)).toEqual([]);
    const html = renderComparison(base, same);
    const polys = [...html.matchAll(/points="([^"]+)"/g)].map((m) => m[1]);
    expect(polys).toHaveLength(2);
    expect(polys[0]).toBe(polys[1]);
    expect(html).toContain("No category changes.");
  });

  it("reports per-category deltas for a changed overlay", () => {
    const base = report();
    const overlay = report({
      categories: {
        physical: { readiness: 6, aspiration: 9, threshold: 3 },
        operation: { readiness: 9, aspiration: 9, threshold: 3 },
      },
      total_readiness: 7.0,
      display: { total_readiness: "7.0", total_aspiration: "8.7", total_threshold: "3.5", categories: {} },
      radar: [
        { label: "Readiness", values: [6, 9, 4.5, 6.5, 9], absent: [false, false, false, false, false], style: "solid" },
      ],
    });
    const deltas = categoryDeltas(base, overlay);
    expect(deltas).toEqual([
      { category: "operation", dimension: "readiness", before: 3, after: 9, delta: 6 },
    ]);
    const html = renderComparison(base, overlay);
    expect(html).toContain("+6.0");
    expect(html).toContain("What-if (7.0)");
  });
});
