from __future__ import annotations

import random

import pytest

from crf.catalog import CATEGORY_ORDER, Catalog, Enabler, Scenario, Service, UseCase
from crf.demo import demo_assessments, demo_catalog, demo_project
from crf.scoring import CostLevel, EnablerAssessment, Importance, LikertLevel
from crf.store import ProjectStore

LEVELS = list(LikertLevel)
IMPORTANCES = list(Importance)


@pytest.fixture
def dcat():
    return demo_catalog()


@pytest.fixture
def dassess():
    return demo_assessments()


@pytest.fixture
def dproject():
    return demo_project()


@pytest.fixture
def demo_dir(tmp_path):
    """A demo project directory on disk."""
    root = tmp_path / "proj"
    ProjectStore(root).initialize(demo_project(), demo_catalog())
    return root


def synth_catalog(n_enablers: int = 20) -> Catalog:
    """A throwaway catalog with one scoreable use case and n enablers
    cycling through the five categories."""
    enablers = tuple(
        Enabler(f"e{i:02d}", f"Enabler {i:02d}", "", CATEGORY_ORDER[i % len(CATEGORY_ORDER)])
        for i in range(n_enablers)
    )
    ids = tuple(e.id for e in enablers)
    return Catalog(
        version="synth-1",
        services=(Service("SVC", "Synthetic service", use_cases=("SVC-UC",)),),
        use_cases=(UseCase("SVC-UC", "SVC", "Synthetic use case", default_enablers=ids),),
        enablers=enablers,
        scenarios=(Scenario("SVC-UC-all", "SVC-UC", "All enablers", enabler_ids=ids),),
    )


def random_assessments(rng: random.Random, catalog: Catalog, max_n: int = 20) -> list[EnablerAssessment]:
    """Assessments for a random non-empty subset of the catalog's enablers."""
    pool = list(catalog.enablers)
    n = rng.randint(1, min(max_n, len(pool)))
    chosen = rng.sample(pool, n)
    return [
        EnablerAssessment(
            enabler_id=e.id,
            importance=rng.choice(IMPORTANCES),
            readiness=rng.choice(LEVELS),
            aspiration=rng.choice(LEVELS),
            threshold=rng.choice(LEVELS),
            cost=CostLevel(rng.choice(LEVELS)),
        )
        for e in chosen
    ]


def dir_fingerprint(root) -> dict[str, bytes]:
    """Relative path -> content for every file under root."""
    return {
        str(p.relative_to(root)): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }
