"""Rollups from enabler scores to category, use case, service, and overall level.

The rollup rule throughout is mean-of-means: enabler scores average into
category scores, and present categories average into totals. Categories with
no enablers are excluded from the mean, never zero-filled. Deployment cost is
the one exception: cost points are summed, since more enablers cost more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .catalog import CATEGORY_ORDER, Category
from .scoring import EnablerScores

IMPACT_FACTORS = ("cost", "safety", "efficiency", "environment", "inclusion")


@dataclass(frozen=True)
class CategoryScore:
    readiness: float
    aspiration: float
    threshold: float

    def to_dict(self) -> dict:
        return {
            "readiness": self.readiness,
            "aspiration": self.aspiration,
            "threshold": self.threshold,
        }


@dataclass(frozen=True)
class CategoryScores:
    """Per-category score triples. Only categories with at least one scored
    enabler are present; the rest are absent, not zero."""

    by_category: dict[Category, CategoryScore]

    def present(self) -> tuple[Category, ...]:
        return tuple(c for c in CATEGORY_ORDER if c in self.by_category)

    def get(self, category: Category) -> CategoryScore | None:
        return self.by_category.get(category)

    def to_dict(self) -> dict:
        return {c.value: self.by_category[c].to_dict() for c in self.present()}


@dataclass(frozen=True)
class UseCaseScores:
    use_case_id: str
    categories: CategoryScores
    total_readiness: float
    total_aspiration: float
    total_threshold: float
    deployment_cost: int

    def to_dict(self) -> dict:
        return {
            "use_case_id": self.use_case_id,
            "categories": self.categories.to_dict(),
            "total_readiness": self.total_readiness,
            "total_aspiration": self.total_aspiration,
            "total_threshold": self.total_threshold,
            "deployment_cost": self.deployment_cost,
        }


@dataclass(frozen=True)
class ImpactProfile:
    """Five-factor ordinal characterization of a use case's effects.
    Each factor is scored 1 (low), 2 (medium), or 3 (high)."""

    cost: int
    safety: int
    efficiency: int
    environment: int
    inclusion: int

    def __post_init__(self):
        for factor in IMPACT_FACTORS:
            v = getattr(self, factor)
            if v not in (1, 2, 3):
                raise ValueError(f"impact factor '{factor}' must be 1, 2 or 3, got {v!r}")

    def to_dict(self) -> dict:
        return {f: getattr(self, f) for f in IMPACT_FACTORS}

    @classmethod
    def from_dict(cls, d: dict) -> "ImpactProfile":
        return cls(**{f: int(d[f]) for f in IMPACT_FACTORS})


@dataclass(frozen=True)
class ServiceProgress:
    service_id: str
    use_case_progress: dict[str, float]
    progress: float

    def to_dict(self) -> dict:
        return {
            "service_id": self.service_id,
            "use_case_progress": dict(self.use_case_progress),
            "progress": self.progress,
        }


@dataclass(frozen=True)
class OverallCategory:
    readiness: float
    aspiration: float

    def to_dict(self) -> dict:
        return {"readiness": self.readiness, "aspiration": self.aspiration}


@dataclass(frozen=True)
class OverallScores:
    """Readiness and aspiration aggregated across all considered use cases.
    The gap (aspiration minus readiness) measures how far the authority is
    from its aspired level of support."""

    categories: dict[Category, OverallCategory]
    total_readiness: float
    total_aspiration: float
    gap: float

    def present(self) -> tuple[Category, ...]:
        return tuple(c for c in CATEGORY_ORDER if c in self.categories)

    def to_dict(self) -> dict:
        return {
            "categories": {c.value: self.categories[c].to_dict() for c in self.present()},
            "total_readiness": self.total_readiness,
            "total_aspiration": self.total_aspiration,
            "gap": self.gap,
        }


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def category_rollup(scores: Sequence[EnablerScores]) -> CategoryScores:
    """Arithmetic mean of member enabler scores, per category and dimension."""
    if not scores:
        raise ValueError("nothing to aggregate: empty score list")
    by_cat: dict[Category, CategoryScore] = {}
    for cat in CATEGORY_ORDER:
        members = [s for s in scores if s.category is cat]
        if not members:
            continue
        by_cat[cat] = CategoryScore(
            readiness=_mean([s.readiness_score for s in members]),
            aspiration=_mean([s.aspiration_score for s in members]),
            threshold=_mean([s.threshold_score for s in members]),
        )
    return CategoryScores(by_cat)


def use_case_rollup(
    categories: CategoryScores,
    scores: Sequence[EnablerScores],
    use_case_id: str = "",
) -> UseCaseScores:
    """Totals are the mean over present categories (mean of category means,
    not the mean over all enablers); deployment cost is the sum of cost points."""
    present = categories.present()
    if not present:
        raise ValueError("nothing to aggregate: all categories absent")
    triples = [categories.by_category[c] for c in present]
    return UseCaseScores(
        use_case_id=use_case_id,
        categories=categories,
        total_readiness=_mean([t.readiness for t in triples]),
        total_aspiration=_mean([t.aspiration for t in triples]),
        total_threshold=_mean([t.threshold for t in triples]),
        deployment_cost=sum(s.cost_points for s in scores),
    )


def use_case_progress(totals: UseCaseScores) -> float:
    """Readiness as a fraction of aspiration, clamped to [0, 1].
    Zero aspiration counts as fully progressed (nothing left to aspire to)."""
    if totals.total_aspiration == 0:
        return 1.0
    return min(1.0, max(0.0, totals.total_readiness / totals.total_aspiration))


def service_progress(
    service_id: str, per_use_case: Mapping[str, float]
) -> ServiceProgress:
    """Unweighted mean: each use case contributes equally to the service."""
    if not per_use_case:
        raise ValueError(f"no considered use cases in service '{service_id}'")
    return ServiceProgress(
        service_id=service_id,
        use_case_progress=dict(per_use_case),
        progress=_mean(list(per_use_case.values())),
    )


def overall_rollup(use_cases: Sequence[UseCaseScores]) -> OverallScores:
    """Per category, the mean of that category's value across the use cases
    where it is present; totals are the mean of those category means."""
    if not use_cases:
        raise ValueError("nothing to aggregate: no use cases")
    categories: dict[Category, OverallCategory] = {}
    for cat in CATEGORY_ORDER:
        triples = [uc.categories.get(cat) for uc in use_cases]
        triples = [t for t in triples if t is not None]
        if not triples:
            continue
        categories[cat] = OverallCategory(
            readiness=_mean([t.readiness for t in triples]),
            aspiration=_mean([t.aspiration for t in triples]),
        )
    values = list(categories.values())
    total_readiness = _mean([v.readiness for v in values])
    total_aspiration = _mean([v.aspiration for v in values])
    return OverallScores(
        categories=categories,
        total_readiness=total_readiness,
        total_aspiration=total_aspiration,
        gap=total_aspiration - total_readiness,
    )


def service_impact(profiles: Sequence[ImpactProfile]) -> dict[str, float]:
    """Per-factor arithmetic mean over use-case impact profiles."""
    if not profiles:
        raise ValueError("nothing to aggregate: no impact profiles")
    return {
        f: _mean([getattr(p, f) for p in profiles]) for f in IMPACT_FACTORS
    }
