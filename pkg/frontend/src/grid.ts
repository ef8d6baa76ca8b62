// The editable score grid: level pickers per dimension, computed score
// cells echoed locally and reconciled against the server sheet on save.

import { computeCells, DIMENSIONS, IMPORTANCES, LEVELS } from "./scoring.js";
import type { Assessment, Dimension, EnablerScoreRow } from "./types.js";

export interface GridRow {
  assessment: Assessment;
  cells: ReturnType<typeof computeCells>;
  error?: string;
}

export function gridRows(buffer: Assessment[], rowErrors: Record<string, string> = {}): GridRow[] {
  return buffer.map((a) => ({
    assessment: a,
    cells: computeCells(a),
    error: rowErrors[a.enabler_id],
  }));
}

/** True when every locally computed cell equals the server's sheet. */
export function reconcile(rows: GridRow[], sheet: EnablerScoreRow[]): boolean {
  const byId = new Map(sheet.map((e) => [e.enabler_id, e]));
  return rows.every((row) => {
    const server = byId.get(row.assessment.enabler_id);
    return (
      server !== undefined &&
      server.readiness_score === row.cells.readiness_score &&
      server.aspiration_score === row.cells.aspiration_score &&
      server.threshold_score === row.cells.threshold_score &&
      server.cost_points === row.cells.cost_points
    );
  });
}

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");
}

function picker(enablerId: string, dimension: Dimension, current: string): string {
  const options = dimension === "importance" ? IMPORTANCES : LEVELS;
  const opts = options
    .map((l) => `<option value="${l}"${l === current ? " selected" : ""}>${l}</option>`)
    .join("");
  return `<select class="level" data-enabler="${esc(enablerId)}" data-dimension="${dimension}">${opts}</select>`;
}

export function renderGrid(
  rows: GridRow[],
  names: Record<string, string>,
  dirty: boolean,
): string {
  const header =
    "<tr><th>Enabler</th><th>Importance</th>" +
    "<th>Readiness</th><th class=\"num\">R</th>" +
    "<th>Aspiration</th><th class=\"num\">A</th>" +
    "<th>Threshold</th><th class=\"num\">T</th>" +
    "<th>Cost</th><th class=\"num\">C</th></tr>";
  const body = rows
    .map((row) => {
      const a = row.assessment;
      const name = names[a.enabler_id] ?? a.enabler_id;
      const err = row.error ? `<div class="row-error">${esc(row.error)}</div>` : "";
      return (
        `<tr data-enabler="${esc(a.enabler_id)}"${row.error ? ' class="invalid"' : ""}>` +
        `<td>${esc(name)}${err}</td>` +
        `<td>${picker(a.enabler_id, "importance", a.importance)}</td>` +
        `<td>${picker(a.enabler_id, "readiness", a.readiness)}</td>` +
        `<td class="num score">${row.cells.readiness_score}</td>` +
        `<td>${picker(a.enabler_id, "aspiration", a.aspiration)}</td>` +
        `<td class="num score">${row.cells.aspiration_score}</td>` +
        `<td>${picker(a.enabler_id, "threshold", a.threshold)}</td>` +
        `<td class="num score">${row.cells.threshold_score}</td>` +
        `<td>${picker(a.enabler_id, "cost", a.cost)}</td>` +
        `<td class="num score">${row.cells.cost_points}</td>` +
        "</tr>"
      );
    })
    .join("");
  const badge = dirty ? '<span class="unsaved">unsaved changes</span>' : '<span class="saved">saved</span>';
  return (
    `<div class="grid-head"><h2>Score grid</h2>${badge}` +
    '<button id="save-grid" type="button">Save</button></div>' +
    `<table class="score-grid"><thead>${header}</thead><tbody>${body}</tbody></table>`
  );
}

export { DIMENSIONS };
