// Client-side radar rendering. Mirrors the server's geometry so on-screen
// charts and SVG exports agree: axes in the fixed category order, first
// axis pointing up, clockwise, vertex k at 90 - k*72 degrees, distance
// proportional to value / max.

import type { RadarSeriesDto } from "./types.js";

export const AXES: readonly string[] = [
  "Physical",
  "Operation",
  "Digital",
  "Connectivity",
  "Standard",
];

export interface Point {
  x: number;
  y: number;
}

/** Vertex for axis k in y-up coordinates around the origin. */
export function vertex(value: number, k: number, maxValue: number, radius: number): Point {
  const theta = ((90 - 72 * k) * Math.PI) / 180;
  const d = (value / maxValue) * radius;
  return { x: d * Math.cos(theta), y: d * Math.sin(theta) };
}

export function seriesPoints(values: number[], maxValue: number, radius: number): Point[] {
  return values.map((v, k) => vertex(v, k, maxValue, radius));
}

const f = (v: number) => v.toFixed(2);

export interface RadarOptions {
  size?: number;
  maxValue?: number;
  rings?: number[];
  axes?: readonly string[];
}

export function renderRadarSvg(series: RadarSeriesDto[], options: RadarOptions = {}): string {
  const size = options.size ?? 320;
  const maxValue = options.maxValue ?? 9;
  const rings = options.rings ?? [3, 6, 9];
  const axes = options.axes ?? AXES;
  const c = size / 2;
  const radius = size * 0.39;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${f(size)} ${f(size)}" class="radar">`,
  ];
  for (const r of rings) {
    parts.push(`<circle class="ring" cx="${f(c)}" cy="${f(c)}" r="${f((r / maxValue) * radius)}"/>`);
  }
  const outer = seriesPoints(Array(axes.length).fill(maxValue), maxValue, radius);
  outer.forEach((p, k) => {
    parts.push(`<line class="spoke" x1="${f(c)}" y1="${f(c)}" x2="${f(c + p.x)}" y2="${f(c - p.y)}"/>`);
    const anchor = Math.abs(p.x) < 1e-9 ? "middle" : p.x > 0 ? "start" : "end";
    parts.push(
      `<text class="axis-label" text-anchor="${anchor}" x="${f(c + p.x * 1.12)}" y="${f(c - p.y * 1.12)}">${axes[k]}</text>`,
    );
  });
  for (const s of series) {
    const pts = seriesPoints(s.values, maxValue, radius)
      .map((p) => `${f(c + p.x)},${f(c - p.y)}`)
      .join(" ");
    parts.push(`<polygon class="series ${s.style}" data-label="${s.label}" points="${pts}"/>`);
  }
  parts.push("</svg>");
  return parts.join("\n");
}

export function renderImpactSvg(impact: Record<string, number>, size = 320): string {
  const axes = ["Cost", "Safety", "Efficiency", "Environment", "Inclusion"];
  const values = ["cost", "safety", "efficiency", "environment", "inclusion"].map(
    (k) => impact[k] ?? 0,
  );
  return renderRadarSvg(
    [{ label: "Impact", values, absent: values.map(() => false), style: "solid" }],
    { size, maxValue: 3, rings: [1, 2, 3], axes },
  );
}
