// View state: selection, the edit buffer, and the what-if comparison slot.
// The buffer is the only place local edits live until a save succeeds.

import type { Assessment, Dimension, UseCaseReport, WhatIfOverride } from "./types.js";

export interface ViewState {
  selectedService: string | null;
  selectedUseCase: string | null;
  serverAssessments: Assessment[];
  buffer: Assessment[];
  rowErrors: Record<string, string>;
  overlay: WhatIfOverride[];
  baseline: UseCaseReport | null;
  overlayReport: UseCaseReport | null;
}

export function initialState(): ViewState {
  return {
    selectedService: null,
    selectedUseCase: null,
    serverAssessments: [],
    buffer: [],
    rowErrors: {},
    overlay: [],
    baseline: null,
    overlayReport: null,
  };
}

export function isDirty(state: Pick<ViewState, "buffer" | "serverAssessments">): boolean {
  return JSON.stringify(state.buffer) !== JSON.stringify(state.serverAssessments);
}

export function setBufferValue(
  buffer: Assessment[],
  enablerId: string,
  dimension: Dimension,
  value: string,
): Assessment[] {
  return buffer.map((a) => (a.enabler_id === enablerId ? { ...a, [dimension]: value } : a));
}

export function upsertOverride(
  overlay: WhatIfOverride[],
  override: WhatIfOverride,
): WhatIfOverride[] {
  const rest = overlay.filter(
    (o) => !(o.enabler_id === override.enabler_id && o.dimension === override.dimension),
  );
  return [...rest, override];
}

export function removeOverride(
  overlay: WhatIfOverride[],
  enablerId: string,
  dimension: string,
): WhatIfOverride[] {
  return overlay.filter((o) => !(o.enabler_id === enablerId && o.dimension === dimension));
}
