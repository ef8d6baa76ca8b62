import { describe, expect, it } from "vitest";

import { AXES, renderRadarSvg, seriesPoints, vertex } from "../src/radar.js";
import type { RadarSeriesDto } from "../src/types.js";

const DEMO_SERIES: RadarSeriesDto[] = [
  { label: "Readiness", values: [6, 3, 4.5, 6.5, 9], absent: [false, false, false, false, false], style: "solid" },
  { label: "Aspiration", values: [9, 9, 9, 7.5, 9], absent: [false, false, false, false, false], style: "dashed" },
  { label: "Threshold", values: [3, 3, 4.5, 2.5, 4.5], absent: [false, false, false, false, false], style: "dotted" },
];

describe("axis order", () => {
  it("is the documented five categories, Physical first", () => {
    expect(AXES).toEqual(["Physical", "Operation", "Digital", "Connectivity", "Standard"]);
  });
});

describe("geometry", () => {
  it("puts a full-scale first axis straight up", () => {
    const p = vertex(9, 0, 9, 100);
    expect(p.x).toBeCloseTo(0, 9);
    expect(p.y).toBeCloseTo(100, 9);
  });

  it("runs clockwise: the second axis leans right", () => {
    const p = vertex(9, 1, 9, 100);
    expect(p.x).toBeGreaterThan(0);
    expect((Math.atan2(p.y, p.x) * 180) / Math.PI).toBeCloseTo(18, 6);
  });

  it("scales linearly with the value", () => {
    const half = vertex(4.5, 2, 9, 100);
    const full = vertex(9, 2, 9, 100);
    expect(Math.hypot(half.x, half.y)).toBeCloseTo(Math.hypot(full.x, full.y) / 2, 9);
  });

  it("puts zero at the center", () => {
    for (let k = 0; k < 5; k++) {
      const p = vertex(0, k, 9, 100);
      expect(Math.hypot(p.x, p.y)).toBeCloseTo(0, 12);
    }
  });
});

describe("svg rendering", () => {
  it("renders five labelled axes in order", () => {
    const svg = renderRadarSvg(DEMO_SERIES);
    const labels = [...svg.matchAll(/class="axis-label"[^>]*>([^<]+)</g)].map((m) => m[1]);
    expect(labels).toEqual(["Physical", "Operation", "Digital", "Connectivity", "Standard"]);
  });

  it("renders one polygon per series", () => {
    const svg = renderRadarSvg(DEMO_SERIES);
    expect(svg.match(/<polygon/g)).toHaveLength(3);
  });

  it("puts the demo Standard spoke at full radius", () => {
    const size = 320;
    const svg = renderRadarSvg(DEMO_SERIES, { size });
    const points = svg.match(/points="([^"]+)"/)![1]
      .split(" ")
      .map((pair) => pair.split(",").map(Number) as [number, number]);
    const standard = points[4]; // fifth axis
    const c = size / 2;
    const radius = size * 0.39;
    expect(Math.hypot(standard[0] - c, standard[1] - c)).toBeCloseTo(radius, 1);
    // Operation (readiness 3 of 9) sits at one third
    const operation = points[1];
    expect(Math.hypot(operation[0] - c, operation[1] - c)).toBeCloseTo(radius / 3, 1);
  });

  it("is deterministic", () => {
    expect(renderRadarSvg(DEMO_SERIES)).toBe(renderRadarSvg(DEMO_SERIES));
  });

  it("mirrors the server geometry for the series vertices", () => {
    // same rule as the backend: vertex k at 90 - 72k degrees, d = v/9 * R
    const values = [6, 3, 4.5, 6.5, 9];
    const pts = seriesPoints(values, 9, 140.4);
    values.forEach((v, k) => {
      const theta = ((90 - 72 * k) * Math.PI) / 180;
      const d = (v / 9) * 140.4;
      expect(pts[k].x).toBeCloseTo(d * Math.cos(theta), 9);
      expect(pts[k].y).toBeCloseTo(d * Math.sin(theta), 9);
    });
  });
});
