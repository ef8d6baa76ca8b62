"""Feasibility check: flag enablers whose readiness falls below the threshold.

An enabler blocks a use case when its weighted readiness score is strictly
below its weighted feasibility-threshold score; readiness equal to the
threshold is feasible. Blockers are ranked so the widest gaps and the most
important enablers come first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .catalog import Category
from .scoring import EnablerScores, Importance, importance_weight


@dataclass(frozen=True)
class Blocker:
    enabler_id: str
    category: Category
    readiness_score: int
    threshold_score: int
    gap: int
    importance: Importance

    def to_dict(self) -> dict:
        return {
            "enabler_id": self.enabler_id,
            "category": self.category.value,
            "readiness_score": self.readiness_score,
            "threshold_score": self.threshold_score,
            "gap": self.gap,
            "importance": self.importance.value,
        }


@dataclass(frozen=True)
class FeasibilityVerdict:
    use_case_id: str
    feasible: bool
    blockers: tuple[Blocker, ...]
    margin: int  # min over enablers of readiness - threshold

    def to_dict(self) -> dict:
        return {
            "use_case_id": self.use_case_id,
            "feasible": self.feasible,
            "blockers": [b.to_dict() for b in self.blockers],
            "margin": self.margin,
        }


def find_blockers(scores: Sequence[EnablerScores], use_case_id: str = "") -> FeasibilityVerdict:
    """Blockers sorted by gap descending, then importance descending, then id."""
    if not scores:
        raise ValueError("nothing to check: empty score list")
    blockers = [
        Blocker(
            enabler_id=s.enabler_id,
            category=s.category,
            readiness_score=s.readiness_score,
            threshold_score=s.threshold_score,
            gap=s.threshold_score - s.readiness_score,
            importance=s.importance,
        )
        for s in scores
        if s.readiness_score < s.threshold_score
    ]
    blockers.sort(key=lambda b: (-b.gap, -importance_weight(b.importance), b.enabler_id))
    margin = min(s.readiness_score - s.threshold_score for s in scores)
    return FeasibilityVerdict(
        use_case_id=use_case_id,
        feasible=not blockers,
        blockers=tuple(blockers),
        margin=margin,
    )
