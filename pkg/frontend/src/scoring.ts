// Local mirror of the server's scoring rule, used only for live cell
// echoes while editing. The server's score sheet remains the value of
// record; saves reconcile against it.

import type { Assessment, Dimension, ImportanceLevel, Level } from "./types.js";

export const LEVELS: readonly Level[] = ["none", "low", "medium", "high"];
export const IMPORTANCES: readonly ImportanceLevel[] = ["low", "medium", "high"];
export const DIMENSIONS: readonly Dimension[] = [
  "importance",
  "readiness",
  "aspiration",
  "threshold",
  "cost",
];

export const LEVEL_POINTS: Record<Level, number> = { none: 0, low: 1, medium: 2, high: 3 };
export const IMPORTANCE_WEIGHT: Record<ImportanceLevel, number> = { low: 1, medium: 2, high: 3 };

export function levelPoints(level: Level): number {
  return LEVEL_POINTS[level];
}

export function weightedScore(importance: ImportanceLevel, level: Level): number {
  return IMPORTANCE_WEIGHT[importance] * LEVEL_POINTS[level];
}

export interface ComputedCells {
  readiness_score: number;
  aspiration_score: number;
  threshold_score: number;
  cost_points: number;
}

export function computeCells(a: Assessment): ComputedCells {
  return {
    readiness_score: weightedScore(a.importance, a.readiness),
    aspiration_score: weightedScore(a.importance, a.aspiration),
    threshold_score: weightedScore(a.importance, a.threshold),
    cost_points: levelPoints(a.cost),
  };
}
