"""Demonstration seed: the fully scored Nordic Way road works warning pilot.

`init --demo` starts a project from this data so new users (and the golden
tests) begin with a complete worked example: one considered use case, its
pilot scenario, all nine enablers assessed, and an assumed impact profile.
"""

from __future__ import annotations

from .aggregation import ImpactProfile
from .catalog import Catalog, builtin_croads_catalog, with_demo_use_case
from .scoring import CostLevel, EnablerAssessment, Importance, LikertLevel
from .store import Project

DEMO_USE_CASE = "RWW-demo"
DEMO_SCENARIO = "RWW-demo-nordic-way"

_L = LikertLevel
_I = Importance

# (enabler, importance, readiness, aspiration, threshold, cost)
_DEMO_ROWS = (
    ("etsi-en-302-637-3", _I.HIGH, _L.HIGH, _L.HIGH, _L.MEDIUM, _L.NONE),
    ("etsi-ts-102-894-2", _I.HIGH, _L.HIGH, _L.HIGH, _L.LOW, _L.NONE),
    ("stationary-rsu", _I.HIGH, _L.MEDIUM, _L.HIGH, _L.LOW, _L.MEDIUM),
    ("mobile-rsu", _I.HIGH, _L.MEDIUM, _L.HIGH, _L.LOW, _L.HIGH),
    ("response-plan", _I.HIGH, _L.LOW, _L.HIGH, _L.LOW, _L.LOW),
    ("r-its-s-system-profile", _I.HIGH, _L.MEDIUM, _L.HIGH, _L.MEDIUM, _L.LOW),
    ("v-its-s-system-profile", _I.HIGH, _L.LOW, _L.HIGH, _L.LOW, _L.LOW),
    ("cellular-connectivity", _I.HIGH, _L.HIGH, _L.HIGH, _L.LOW, _L.LOW),
    ("short-range-its-g5", _I.MEDIUM, _L.MEDIUM, _L.HIGH, _L.LOW, _L.MEDIUM),
)


def demo_assessments() -> list[EnablerAssessment]:
    return [
        EnablerAssessment(
            enabler_id=eid,
            importance=imp,
            readiness=r,
            aspiration=a,
            threshold=t,
            cost=CostLevel(c),
        )
        for eid, imp, r, a, t, c in _DEMO_ROWS
    ]


def demo_catalog() -> Catalog:
    return with_demo_use_case(builtin_croads_catalog())


def demo_project(project_id: str = "rww-demo", name: str = "RWW demo") -> Project:
    """Project seeded with the worked pilot assessment. Impact values are
    assumed, not measured: a safety-first warning service at moderate cost."""
    return Project(
        id=project_id,
        name=name,
        catalog_version=demo_catalog().version,
        considered_use_cases=[DEMO_USE_CASE],
        active_scenarios={DEMO_USE_CASE: DEMO_SCENARIO},
        assessments={DEMO_USE_CASE: demo_assessments()},
        impacts={
            DEMO_USE_CASE: ImpactProfile(cost=2, safety=3, efficiency=2, environment=1, inclusion=1)
        },
    )
