// End-to-end checks against a real server process: the score grid's local
// cells must agree with the running API's score sheet, the radar series must
// come back in documented axis order, and what-if traffic must leave the
// project directory untouched.

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, readdirSync, readFileSync, rmSync, statSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, mutatingRequests } from "../src/api.js";
import { gridRows, reconcile } from "../src/grid.js";
import { AXES } from "../src/radar.js";
import {
  EXPECTED_ASPIRATION,
  EXPECTED_COST,
  EXPECTED_READINESS,
  EXPECTED_THRESHOLD,
} from "./fixtures.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let serverProc: ChildProcess | null = null;
let projectDir = "";

function fingerprint(root: string): Record<string, string> {
  const out: Record<string, string> = {};
  const walk = (dir: string) => {
    for (const entry of readdirSync(dir)) {
      const full = join(dir, entry);
      if (statSync(full).isDirectory()) walk(full);
      else out[full] = readFileSync(full, "utf8");
    }
  };
  walk(root);
  return out;
}

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/api/project`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  projectDir = mkdtempSync(join(tmpdir(), "crf-dash-"));
  const init = spawnSync("python3", ["-m", "crf", "init", projectDir, "--demo", "--id", "rww-demo"]);
  if (init.status !== 0) {
    throw new Error(`init failed: ${init.stderr?.toString()}`);
  }
  serverProc = spawn(
    "python3",
    ["-m", "crf", "serve", "--dir", projectDir, "--port", String(PORT)],
    { stdio: "ignore" },
  );
  await waitForServer();
}, 30_000);

afterAll(() => {
  serverProc?.kill();
  if (projectDir) rmSync(projectDir, { recursive: true, force: true });
});

describe("score grid against the running API", () => {
  it("local computed cells equal the server's recomputed sheet after save", async () => {
    const client = new ApiClient(BASE);
    const { assessments } = await client.getAssessments("RWW-demo");
    expect(assessments).toHaveLength(9);

    const rows = gridRows(assessments);
    expect(rows.map((r) => r.cells.readiness_score)).toEqual(EXPECTED_READINESS);
    expect(rows.map((r) => r.cells.aspiration_score)).toEqual(EXPECTED_ASPIRATION);
    expect(rows.map((r) => r.cells.threshold_score)).toEqual(EXPECTED_THRESHOLD);
    expect(rows.map((r) => r.cells.cost_points)).toEqual(EXPECTED_COST);

    const sheet = await client.putAssessments("RWW-demo", assessments);
    expect(reconcile(rows, sheet.enablers)).toBe(true);
    expect(sheet.display.total_readiness).toBe("5.8");
    expect(sheet.display.total_aspiration).toBe("8.7");
    expect(sheet.display.total_threshold).toBe("3.5");
  });

  it("a save rejection carries per-row messages", async () => {
    const client = new ApiClient(BASE);
    const { assessments } = await client.getAssessments("RWW-demo");
    const broken = [...assessments, { ...assessments[0], enabler_id: "made-up" }];
    await expect(client.putAssessments("RWW-demo", broken)).rejects.toMatchObject({
      status: 400,
    });
  });
});

describe("radar panel against the running API", () => {
  it("series arrive in documented axis order with Standard at full radius", async () => {
    const client = new ApiClient(BASE);
    const report = await client.getUseCaseReport("RWW-demo");
    expect(AXES).toEqual(["Physical", "Operation", "Digital", "Connectivity", "Standard"]);
    const readiness = report.radar.find((s) => s.label === "Readiness")!;
    expect(readiness.values).toEqual([6, 3, 4.5, 6.5, 9]);
    expect(readiness.values[AXES.indexOf("Standard")]).toBe(9); // full scale
    const aspiration = report.radar.find((s) => s.label === "Aspiration")!;
    expect(aspiration.values).toEqual([9, 9, 9, 7.5, 9]);
  });
});

describe("what-if against the running API", () => {
  it("recomputes without persisting and issues no mutating requests", async () => {
    const client = new ApiClient(BASE);
    const before = fingerprint(projectDir);

    const baseline = await client.getUseCaseReport("RWW-demo");
    const overlay = await client.whatIf("RWW-demo", [
      { enabler_id: "response-plan", dimension: "readiness", level: "high" },
    ]);
    expect(baseline.total_readiness).toBeCloseTo(5.8, 9);
    expect(overlay.total_readiness).toBeCloseTo(7.0, 9);
    expect(overlay.categories.operation.readiness).toBe(9);

    expect(mutatingRequests(client.log)).toEqual([]);
    expect(fingerprint(projectDir)).toEqual(before);
  });
});
