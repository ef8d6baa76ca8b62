"""Readiness scoring and planning for C-ITS infrastructure.

Models services, use cases, scenarios, and enablers; computes weighted
Likert readiness/aspiration/feasibility scores with hierarchical rollups;
flags feasibility blockers; and emits radar, progress, cost, and impact
reports through a library API, a CLI, and an HTTP service.
"""

__version__ = "0.1.0"

from .aggregation import (
    CategoryScore,
    CategoryScores,
    ImpactProfile,
    OverallScores,
    ServiceProgress,
    UseCaseScores,
    category_rollup,
    overall_rollup,
    service_impact,
    service_progress,
    use_case_progress,
    use_case_rollup,
)
from .catalog import (
    Catalog,
    Category,
    Enabler,
    FlowStep,
    MessageFlow,
    Scenario,
    Service,
    UseCase,
    builtin_croads_catalog,
    resolve_scenario,
    trace_enablers,
    validate_catalog,
)
from .errors import (
    CrfError,
    LockError,
    NotFoundError,
    StorageError,
    ValidationError,
    ValidationIssue,
)
from .feasibility import Blocker, FeasibilityVerdict, find_blockers
from .scoring import (
    CostLevel,
    EnablerAssessment,
    EnablerScores,
    Importance,
    LikertLevel,
    level_points,
    score_enabler,
    weighted_score,
)
from .store import Project, ProjectStore, Snapshot, load_project, save_project, validate_project
