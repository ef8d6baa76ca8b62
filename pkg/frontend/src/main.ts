// Bootstrap: wires the API client, view state, grid, and panels into the
// page. All DOM access lives here; the modules above stay testable without
// a browser.

import { ApiClient, ApiError } from "./api.js";
import { gridRows, reconcile, renderGrid } from "./grid.js";
import {
  renderBlockerPanel,
  renderComparison,
  renderImpactPanel,
  renderProgressPanel,
  renderRadarPanel,
} from "./panels.js";
import { DIMENSIONS, LEVELS } from "./scoring.js";
import { initialState, isDirty, removeOverride, setBufferValue, upsertOverride } from "./state.js";
import type { CatalogDto, Dimension, ProjectDto, WhatIfOverride } from "./types.js";

const client = new ApiClient("");
const state = initialState();
let catalog: CatalogDto;
let project: ProjectDto;
let enablerNames: Record<string, string> = {};

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

function setStatus(text: string, isError = false): void {
  const status = el("status");
  status.textContent = text;
  status.className = isError ? "status error" : "status";
}

async function selectUseCase(useCaseId: string): Promise<void> {
  state.selectedUseCase = useCaseId;
  state.selectedService = catalog.use_cases.find((u) => u.id === useCaseId)?.service_id ?? null;
  state.overlay = [];
  state.overlayReport = null;
  state.rowErrors = {};
  const { assessments } = await client.getAssessments(useCaseId);
  state.serverAssessments = assessments;
  state.buffer = assessments.map((a) => ({ ...a }));
  await refreshReports();
  renderAll();
}

async function refreshReports(): Promise<void> {
  if (!state.selectedUseCase) return;
  try {
    state.baseline = await client.getUseCaseReport(state.selectedUseCase);
  } catch (err) {
    state.baseline = null;
    if (!(err instanceof ApiError && err.status === 400)) throw err;
  }
}

function renderSidebar(): void {
  const items = project.considered_use_cases
    .map((id) => {
      const uc = catalog.use_cases.find((u) => u.id === id);
      const active = id === state.selectedUseCase ? " active" : "";
      return `<li><button class="uc-link${active}" data-usecase="${id}">${id}</button><span class="uc-name">${uc?.name ?? ""}</span></li>`;
    })
    .join("");
  el("sidebar").innerHTML = `<h2>${project.name}</h2><ul class="use-cases">${items}</ul>`;
}

function renderAll(): void {
  renderSidebar();
  const rows = gridRows(state.buffer, state.rowErrors);
  el("grid").innerHTML = renderGrid(rows, enablerNames, isDirty(state));
  if (state.baseline) {
    el("radar").innerHTML = renderRadarPanel(
      `Readiness radar: ${state.baseline.use_case_id}`,
      state.baseline.radar,
    );
    el("blockers").innerHTML = renderBlockerPanel(state.baseline.feasibility);
    el("impact").innerHTML = renderImpactPanel(state.baseline.impact);
    el("totals").innerHTML =
      `<span>Total readiness <strong>${state.baseline.display.total_readiness}</strong></span>` +
      `<span>Aspiration <strong>${state.baseline.display.total_aspiration}</strong></span>` +
      `<span>Threshold <strong>${state.baseline.display.total_threshold}</strong></span>` +
      `<span>Deployment cost <strong>${state.baseline.deployment_cost}</strong></span>`;
  } else {
    el("radar").innerHTML = '<div class="panel"><p class="empty">No assessments yet.</p></div>';
    el("blockers").innerHTML = "";
    el("impact").innerHTML = "";
    el("totals").innerHTML = "";
  }
  renderWhatIfControls();
  el("comparison").innerHTML =
    state.baseline && state.overlayReport
      ? renderComparison(state.baseline, state.overlayReport)
      : "";
}

function renderWhatIfControls(): void {
  const enablerOpts = state.buffer
    .map((a) => `<option value="${a.enabler_id}">${enablerNames[a.enabler_id] ?? a.enabler_id}</option>`)
    .join("");
  const dimOpts = DIMENSIONS.map((d) => `<option value="${d}">${d}</option>`).join("");
  const levelOpts = LEVELS.map((l) => `<option value="${l}">${l}</option>`).join("");
  const chips = state.overlay
    .map(
      (o) =>
        `<span class="chip" data-enabler="${o.enabler_id}" data-dimension="${o.dimension}">` +
        `${o.enabler_id} ${o.dimension}=${o.level} <button class="chip-remove" type="button">x</button></span>`,
    )
    .join("");
  el("whatif-controls").innerHTML =
    '<h2>What-if</h2><div class="whatif-row">' +
    `<select id="wi-enabler">${enablerOpts}</select>` +
    `<select id="wi-dimension">${dimOpts}</select>` +
    `<select id="wi-level">${levelOpts}</select>` +
    '<button id="wi-add" type="button">Add override</button>' +
    '<button id="wi-run" type="button">Run</button>' +
    '<button id="wi-clear" type="button">Clear</button>' +
    `</div><div class="chips">${chips}</div>`;
}

async function saveGrid(): Promise<void> {
  if (!state.selectedUseCase) return;
  try {
    const sheet = await client.putAssessments(state.selectedUseCase, state.buffer);
    state.serverAssessments = state.buffer.map((a) => ({ ...a }));
    state.rowErrors = {};
    const rows = gridRows(state.buffer);
    if (!reconcile(rows, sheet.enablers)) {
      // local echo disagrees with the server of record: trust the server
      setStatus("Saved, but local score echo diverged from the server sheet; reloading.", true);
      await selectUseCase(state.selectedUseCase);
      return;
    }
    setStatus(`Saved ${sheet.enablers.length} assessments; totals ${sheet.display.total_readiness} / ${sheet.display.total_aspiration} / ${sheet.display.total_threshold}.`);
    await refreshReports();
    renderAll();
  } catch (err) {
    if (err instanceof ApiError) {
      state.rowErrors = {};
      for (const issue of err.errors ?? []) {
        state.rowErrors[issue.entity_id] = issue.message;
      }
      if (err.status === 409) {
        setStatus("Another writer holds the project lock; reload and retry.", true);
      } else {
        setStatus(`Save rejected: ${err.message}`, true);
      }
      renderAll();
      return;
    }
    throw err;
  }
}

async function runWhatIf(): Promise<void> {
  if (!state.selectedUseCase) return;
  try {
    state.overlayReport = await client.whatIf(state.selectedUseCase, state.overlay);
    setStatus(
      `What-if computed with ${state.overlay.length} override(s); nothing was persisted.`,
    );
  } catch (err) {
    if (err instanceof ApiError) {
      setStatus(`What-if rejected: ${err.message}`, true);
      return;
    }
    throw err;
  }
  renderAll();
}

function wireEvents(): void {
  document.body.addEventListener("change", (ev) => {
    const target = ev.target as HTMLSelectElement;
    if (target.matches("select.level")) {
      const enabler = target.dataset.enabler!;
      const dimension = target.dataset.dimension as Dimension;
      state.buffer = setBufferValue(state.buffer, enabler, dimension, target.value);
      renderAll();
    }
  });
  document.body.addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    if (target.id === "save-grid") {
      void saveGrid();
    } else if (target.id === "wi-add") {
      const override: WhatIfOverride = {
        enabler_id: (el("wi-enabler") as HTMLSelectElement).value,
        dimension: (el("wi-dimension") as HTMLSelectElement).value as Dimension,
        level: (el("wi-level") as HTMLSelectElement).value,
      };
      if (override.dimension === "importance" && override.level === "none") {
        setStatus("Importance cannot be 'none'.", true);
        return;
      }
      state.overlay = upsertOverride(state.overlay, override);
      renderAll();
    } else if (target.id === "wi-run") {
      void runWhatIf();
    } else if (target.id === "wi-clear") {
      state.overlay = [];
      state.overlayReport = null;
      renderAll();
    } else if (target.classList.contains("chip-remove")) {
      const chip = target.closest(".chip") as HTMLElement;
      state.overlay = removeOverride(state.overlay, chip.dataset.enabler!, chip.dataset.dimension!);
      renderAll();
    } else if (target.classList.contains("uc-link")) {
      void selectUseCase((target as HTMLElement).dataset.usecase!).catch((err) =>
        setStatus(String(err), true),
      );
    }
  });
}

async function bootstrap(): Promise<void> {
  try {
    [catalog, project] = await Promise.all([client.getCatalog(), client.getProject()]);
    enablerNames = Object.fromEntries(catalog.enablers.map((e) => [e.id, e.name]));
    wireEvents();
    const first = project.considered_use_cases[0];
    if (first) {
      await selectUseCase(first);
      const svc = state.selectedService;
      if (svc) {
        el("progress").innerHTML = renderProgressPanel(await client.getServiceReport(svc));
      }
    } else {
      setStatus("No use cases considered yet — add some with the CLI.", true);
    }
  } catch (err) {
    setStatus(`Failed to load project: ${String(err)}`, true);
  }
}

void bootstrap();
