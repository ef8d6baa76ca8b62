// Read-only panels: radar, progress bars, feasibility blockers, and the
// what-if comparison. All of them render API responses; none compute
// aggregates of record locally.

import { renderImpactSvg, renderRadarSvg } from "./radar.js";
import type {
  FeasibilityDto,
  RadarSeriesDto,
  ServiceReport,
  UseCaseReport,
} from "./types.js";

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function legend(series: RadarSeriesDto[]): string {
  return (
    '<div class="legend">' +
    series.map((s) => `<span class="key ${s.style}">${esc(s.label)}</span>`).join("") +
    "</div>"
  );
}

export function renderRadarPanel(title: string, series: RadarSeriesDto[]): string {
  return (
    `<div class="panel radar-panel"><h2>${esc(title)}</h2>` +
    renderRadarSvg(series) +
    legend(series) +
    "</div>"
  );
}

export function renderImpactPanel(impact: Record<string, number> | null): string {
  if (!impact) {
    return '<div class="panel"><h2>Impact</h2><p class="empty">No impact profile recorded.</p></div>';
  }
  return `<div class="panel"><h2>Impact</h2>${renderImpactSvg(impact)}</div>`;
}

export function renderProgressPanel(report: ServiceReport): string {
  const bar = (label: string, progress: number | null, considered: boolean, cls = "") => {
    const pct = progress === null ? 0 : Math.round(progress * 100);
    const text = progress === null ? "not scored" : `${pct}%`;
    const muted = considered ? "" : " muted";
    return (
      `<div class="bar-row${muted} ${cls}"><span class="bar-label">${esc(label)}</span>` +
      `<div class="bar"><div class="bar-fill" style="width:${pct}%"></div></div>` +
      `<span class="bar-value">${text}</span></div>`
    );
  };
  const rows = report.bars
    .map((b) => bar(b.use_case_id, b.progress, b.considered))
    .join("");
  return (
    `<div class="panel progress-panel"><h2>Service progress: ${esc(report.service_id)}</h2>` +
    rows +
    bar(`${report.service_id} (service)`, report.service_progress, true, "service-bar") +
    "</div>"
  );
}

export function renderBlockerPanel(feasibility: FeasibilityDto): string {
  if (feasibility.feasible) {
    return (
      '<div class="panel blocker-panel"><h2>Feasibility</h2>' +
      `<p class="feasible">Feasible — every enabler meets its threshold (margin ${feasibility.margin}).</p></div>`
    );
  }
  const items = feasibility.blockers
    .map(
      (b) =>
        `<li><span class="gap-badge">gap ${b.gap}</span> <strong>${esc(b.enabler_id)}</strong>` +
        ` <span class="cat">${esc(b.category)}</span>` +
        ` readiness ${b.readiness_score} &lt; threshold ${b.threshold_score}` +
        ` <span class="imp">${b.importance} importance</span></li>`,
    )
    .join("");
  return (
    '<div class="panel blocker-panel"><h2>Feasibility blockers</h2>' +
    `<ol class="blockers">${items}</ol></div>`
  );
}

export interface CategoryDelta {
  category: string;
  dimension: string;
  before: number;
  after: number;
  delta: number;
}

export function categoryDeltas(baseline: UseCaseReport, overlay: UseCaseReport): CategoryDelta[] {
  const out: CategoryDelta[] = [];
  for (const [cat, b] of Object.entries(baseline.categories)) {
    const o = overlay.categories[cat];
    if (!o) continue;
    for (const dim of ["readiness", "aspiration", "threshold"] as const) {
      if (Math.abs(o[dim] - b[dim]) > 1e-9) {
        out.push({ category: cat, dimension: dim, before: b[dim], after: o[dim], delta: o[dim] - b[dim] });
      }
    }
  }
  return out;
}

export function renderComparison(baseline: UseCaseReport, overlay: UseCaseReport): string {
  const deltas = categoryDeltas(baseline, overlay);
  const rows = deltas
    .map(
      (d) =>
        `<tr><td>${esc(d.category)}</td><td>${esc(d.dimension)}</td>` +
        `<td class="num">${d.before.toFixed(1)}</td><td class="num">${d.after.toFixed(1)}</td>` +
        `<td class="num ${d.delta >= 0 ? "up" : "down"}">${d.delta >= 0 ? "+" : ""}${d.delta.toFixed(1)}</td></tr>`,
    )
    .join("");
  const table = deltas.length
    ? `<table class="deltas"><thead><tr><th>Category</th><th>Dimension</th><th>Base</th><th>What-if</th><th>Delta</th></tr></thead><tbody>${rows}</tbody></table>`
    : '<p class="empty">No category changes.</p>';
  return (
    '<div class="comparison">' +
    `<div class="side"><h3>Baseline (${baseline.display.total_readiness})</h3>${renderRadarSvg(baseline.radar)}</div>` +
    `<div class="side"><h3>What-if (${overlay.display.total_readiness})</h3>${renderRadarSvg(overlay.radar)}</div>` +
    "</div>" +
    table
  );
}
