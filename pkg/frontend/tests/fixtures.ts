// The worked demo assessment (one row per enabler, in table order) and the
// published score columns it must reproduce.

import type { Assessment } from "../src/types.js";

export const DEMO_ASSESSMENTS: Assessment[] = [
  { enabler_id: "etsi-en-302-637-3", importance: "high", readiness: "high", aspiration: "high", threshold: "medium", cost: "none" },
  { enabler_id: "etsi-ts-102-894-2", importance: "high", readiness: "high", aspiration: "high", threshold: "low", cost: "none" },
  { enabler_id: "stationary-rsu", importance: "high", readiness: "medium", aspiration: "high", threshold: "low", cost: "medium" },
  { enabler_id: "mobile-rsu", importance: "high", readiness: "medium", aspiration: "high", threshold: "low", cost: "high" },
  { enabler_id: "response-plan", importance: "high", readiness: "low", aspiration: "high", threshold: "low", cost: "low" },
  { enabler_id: "r-its-s-system-profile", importance: "high", readiness: "medium", aspiration: "high", threshold: "medium", cost: "low" },
  { enabler_id: "v-its-s-system-profile", importance: "high", readiness: "low", aspiration: "high", threshold: "low", cost: "low" },
  { enabler_id: "cellular-connectivity", importance: "high", readiness: "high", aspiration: "high", threshold: "low", cost: "low" },
  { enabler_id: "short-range-its-g5", importance: "medium", readiness: "medium", aspiration: "high", threshold: "low", cost: "medium" },
];

export const EXPECTED_READINESS = [9, 9, 6, 6, 3, 6, 3, 9, 4];
export const EXPECTED_ASPIRATION = [9, 9, 9, 9, 9, 9, 9, 9, 6];
export const EXPECTED_THRESHOLD = [6, 3, 3, 3, 3, 6, 3, 3, 2];
export const EXPECTED_COST = [0, 0, 2, 3, 1, 1, 1, 1, 2];
