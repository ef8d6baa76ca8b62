"""Likert scoring: level-to-points mapping, importance weighting, per-enabler scores.

All arithmetic here is exact integer. A level in {none, low, medium, high}
maps to {0, 1, 2, 3} points; importance (low/medium/high) weighs it by
{1, 2, 3}, so every weighted score lands in {0, 1, 2, 3, 4, 6, 9}.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .catalog import Catalog, Category
from .errors import ValidationError, ValidationIssue


class LikertLevel(str, Enum):
    NONE = "none"
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


# Cost shares the level vocabulary and point mapping.
CostLevel = LikertLevel


class Importance(str, Enum):
    """Weight of an enabler within its use case. 'none' is not permitted:
    a zero-importance enabler would contribute nothing and should simply be
    left out of the scenario."""

    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"


_POINTS = {
    LikertLevel.NONE: 0,
    LikertLevel.LOW: 1,
    LikertLevel.MEDIUM: 2,
    LikertLevel.HIGH: 3,
}

_WEIGHTS = {
    Importance.LOW: 1,
    Importance.MEDIUM: 2,
    Importance.HIGH: 3,
}

SCORE_DIMENSIONS = ("importance", "readiness", "aspiration", "threshold", "cost")


def level_points(level: LikertLevel) -> int:
    return _POINTS[LikertLevel(level)]


def importance_weight(importance: Importance) -> int:
    return _WEIGHTS[Importance(importance)]


def weighted_score(importance: Importance, level: LikertLevel) -> int:
    """Importance weight times level points; the [0, 9] readiness-style score."""
    return importance_weight(importance) * level_points(level)


@dataclass(frozen=True)
class EnablerAssessment:
    """One analyst's Likert inputs for one enabler within a use-case scenario."""

    enabler_id: str
    importance: Importance
    readiness: LikertLevel
    aspiration: LikertLevel
    threshold: LikertLevel
    cost: CostLevel
    note: str | None = None

    def to_dict(self) -> dict:
        d = {
            "enabler_id": self.enabler_id,
            "importance": self.importance.value,
            "readiness": self.readiness.value,
            "aspiration": self.aspiration.value,
            "threshold": self.threshold.value,
            "cost": self.cost.value,
        }
        if self.note is not None:
            d["note"] = self.note
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "EnablerAssessment":
        if d.get("importance") == "none":
            raise ValidationError(
                [
                    ValidationIssue(
                        d.get("enabler_id", ""),
                        "importance-none-forbidden",
                        "importance cannot be 'none'; drop the enabler from the scenario instead",
                    )
                ]
            )
        try:
            return cls(
                enabler_id=d["enabler_id"],
                importance=Importance(d["importance"]),
                readiness=LikertLevel(d["readiness"]),
                aspiration=LikertLevel(d["aspiration"]),
                threshold=LikertLevel(d["threshold"]),
                cost=CostLevel(d["cost"]),
                note=d.get("note"),
            )
        except KeyError as exc:
            raise ValidationError(
                [ValidationIssue(d.get("enabler_id", ""), "missing-field", f"assessment missing {exc}")]
            ) from exc
        except ValueError as exc:
            raise ValidationError(
                [ValidationIssue(d.get("enabler_id", ""), "level-invalid", str(exc))]
            ) from exc


@dataclass(frozen=True)
class EnablerScores:
    """Computed scores for one enabler. Importance is kept alongside so
    downstream ranking does not have to re-derive it from the products."""

    enabler_id: str
    category: Category
    importance: Importance
    readiness_score: int
    aspiration_score: int
    threshold_score: int
    cost_points: int

    def to_dict(self) -> dict:
        return {
            "enabler_id": self.enabler_id,
            "category": self.category.value,
            "importance": self.importance.value,
            "readiness_score": self.readiness_score,
            "aspiration_score": self.aspiration_score,
            "threshold_score": self.threshold_score,
            "cost_points": self.cost_points,
        }


def score_enabler(assessment: EnablerAssessment, catalog: Catalog) -> EnablerScores:
    """Weight the three Likert dimensions by importance; cost stays unweighted."""
    enabler = catalog.enabler(assessment.enabler_id)  # NotFoundError if unresolved
    return EnablerScores(
        enabler_id=assessment.enabler_id,
        category=enabler.category,
        importance=assessment.importance,
        readiness_score=weighted_score(assessment.importance, assessment.readiness),
        aspiration_score=weighted_score(assessment.importance, assessment.aspiration),
        threshold_score=weighted_score(assessment.importance, assessment.threshold),
        cost_points=level_points(assessment.cost),
    )


def score_assessments(
    assessments: list[EnablerAssessment], catalog: Catalog
) -> list[EnablerScores]:
    return [score_enabler(a, catalog) for a in assessments]


# Assessment file format: one JSON document keyed by use-case id, each value
# a list of assessment objects with lowercase level strings.

def assessments_to_dict(by_use_case: dict[str, list[EnablerAssessment]]) -> dict:
    return {uc: [a.to_dict() for a in items] for uc, items in by_use_case.items()}

def assessments_from_dict(doc: dict) -> dict[str, list[EnablerAssessment]]:
    return {uc: [EnablerAssessment.from_dict(a) for a in items] for uc, items in doc.items()}
