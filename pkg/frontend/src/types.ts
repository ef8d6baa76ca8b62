// Shapes of the documents the HTTP API serves. Kept in sync with the
// server's schema_version "1".

export type Level = "none" | "low" | "medium" | "high";
export type ImportanceLevel = "low" | "medium" | "high";
export type Dimension = "importance" | "readiness" | "aspiration" | "threshold" | "cost";

export interface Assessment {
  enabler_id: string;
  importance: ImportanceLevel;
  readiness: Level;
  aspiration: Level;
  threshold: Level;
  cost: Level;
  note?: string;
}

export interface EnablerScoreRow {
  enabler_id: string;
  category: string;
  importance: ImportanceLevel;
  readiness_score: number;
  aspiration_score: number;
  threshold_score: number;
  cost_points: number;
}

export interface CategoryTriple {
  readiness: number;
  aspiration: number;
  threshold: number;
}

export interface ScoreSheet {
  use_case_id: string;
  enablers: EnablerScoreRow[];
  categories: Record<string, CategoryTriple>;
  total_readiness: number;
  total_aspiration: number;
  total_threshold: number;
  deployment_cost: number;
  display: {
    total_readiness: string;
    total_aspiration: string;
    total_threshold: string;
    categories: Record<string, Record<string, string>>;
  };
}

export interface RadarSeriesDto {
  label: string;
  values: number[];
  absent: boolean[];
  style: string;
}

export interface BlockerDto {
  enabler_id: string;
  category: string;
  readiness_score: number;
  threshold_score: number;
  gap: number;
  importance: ImportanceLevel;
}

export interface FeasibilityDto {
  use_case_id: string;
  feasible: boolean;
  blockers: BlockerDto[];
  margin: number;
}

export interface UseCaseReport extends ScoreSheet {
  feasibility: FeasibilityDto;
  radar: RadarSeriesDto[];
  impact: Record<string, number> | null;
  scenario_id: string | null;
  enabler_universe: string[];
}

export interface ProgressBarDto {
  use_case_id: string;
  progress: number | null;
  considered: boolean;
}

export interface ServiceReport {
  service_id: string;
  bars: ProgressBarDto[];
  service_progress: number;
  display: string;
  impact: Record<string, number> | null;
}

export interface OverallReport {
  categories: Record<string, { readiness: number; aspiration: number }>;
  total_readiness: number;
  total_aspiration: number;
  gap: number;
  use_cases: string[];
  display: Record<string, string>;
  radar: RadarSeriesDto[];
}

export interface CatalogDto {
  version: string;
  services: { id: string; name: string; use_cases: string[]; incomplete: boolean }[];
  use_cases: { id: string; service_id: string; name: string; flows: string[]; default_enablers: string[] }[];
  enablers: { id: string; name: string; description: string; category: string }[];
  scenarios: { id: string; use_case_id: string; name: string; enabler_ids: string[] }[];
}

export interface ProjectDto {
  id: string;
  name: string;
  catalog_version: string;
  considered_use_cases: string[];
  active_scenarios: Record<string, string>;
  assessments: Record<string, Assessment[]>;
  impacts: Record<string, Record<string, number>>;
}

export interface WhatIfOverride {
  enabler_id: string;
  dimension: Dimension;
  level: string;
}

export interface ApiErrorBody {
  code: string;
  detail: string;
  errors?: { entity_id: string; rule: string; message: string }[];
}
