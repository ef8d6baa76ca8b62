"""Project persistence: a directory of JSON files plus timestamped snapshots.

Layout:
    <root>/project.json
    <root>/catalog.json
    <root>/snapshots/<YYYYMMDDTHHMMSSZ>-<label>.json
    <root>/.lock            (single-writer lock, held only while mutating)

Files are UTF-8 JSON with stable key order and LF endings, so saving the
same state twice is byte-identical and project directories diff cleanly
under version control. Snapshots are write-once.
"""

from __future__ import annotations

import json
import os
import re
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from . import aggregation, scoring
from .aggregation import ImpactProfile, UseCaseScores
from .catalog import Catalog, catalog_to_json, effective_enabler_ids, stable_json, validate_catalog
from .errors import LockError, NotFoundError, StorageError, ValidationError, ValidationIssue
from .scoring import EnablerAssessment

PROJECT_FILE = "project.json"
CATALOG_FILE = "catalog.json"
SNAPSHOT_DIR = "snapshots"
LOCK_FILE = ".lock"


@dataclass
class Project:
    """Everything an authority edits: which use cases it considers, which
    scenario variant is active per use case, the Likert assessments, and the
    per-use-case impact profiles."""

    id: str
    name: str
    catalog_version: str
    considered_use_cases: list[str] = field(default_factory=list)
    active_scenarios: dict[str, str] = field(default_factory=dict)
    assessments: dict[str, list[EnablerAssessment]] = field(default_factory=dict)
    impacts: dict[str, ImpactProfile] = field(default_factory=dict)

    def scenario_for(self, use_case_id: str) -> str | None:
        return self.active_scenarios.get(use_case_id)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "catalog_version": self.catalog_version,
            "considered_use_cases": list(self.considered_use_cases),
            "active_scenarios": dict(self.active_scenarios),
            "assessments": scoring.assessments_to_dict(self.assessments),
            "impacts": {uc: p.to_dict() for uc, p in self.impacts.items()},
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Project":
        try:
            return cls(
                id=d["id"],
                name=d["name"],
                catalog_version=d["catalog_version"],
                considered_use_cases=list(d.get("considered_use_cases", ())),
                active_scenarios=dict(d.get("active_scenarios", {})),
                assessments=scoring.assessments_from_dict(d.get("assessments", {})),
                impacts={
                    uc: ImpactProfile.from_dict(p) for uc, p in d.get("impacts", {}).items()
                },
            )
        except KeyError as exc:
            raise ValidationError(f"project document missing key {exc}") from exc
        except ValueError as exc:
            raise ValidationError(f"project document malformed: {exc}") from exc

    def copy(self) -> "Project":
        return Project.from_dict(self.to_dict())


@dataclass(frozen=True)
class Snapshot:
    id: str
    label: str
    timestamp: str  # UTC, second precision
    project: Project

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "timestamp": self.timestamp,
            "project": self.project.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Snapshot":
        return cls(
            id=d["id"],
            label=d["label"],
            timestamp=d["timestamp"],
            project=Project.from_dict(d["project"]),
        )


def validate_project(project: Project, catalog: Catalog) -> list[ValidationIssue]:
    """Check the project against its catalog; empty list means valid."""
    issues: list[ValidationIssue] = []

    def issue(entity_id: str, rule: str, message: str) -> None:
        issues.append(ValidationIssue(entity_id, rule, message))

    if project.catalog_version != catalog.version:
        issue(
            project.id,
            "catalog-version-mismatch",
            f"project expects catalog '{project.catalog_version}', loaded '{catalog.version}'",
        )

    seen: set[str] = set()
    for ucid in project.considered_use_cases:
        if ucid in seen:
            issue(ucid, "duplicate-id", f"use case '{ucid}' considered twice")
        seen.add(ucid)
        if ucid not in catalog._use_cases:
            issue(ucid, "dangling-reference", f"considered use case '{ucid}' not in catalog")

    for ucid, scid in project.active_scenarios.items():
        if ucid not in catalog._use_cases:
            issue(ucid, "dangling-reference", f"scenario selection names unknown use case '{ucid}'")
        if scid not in catalog._scenarios:
            issue(scid, "dangling-reference", f"active scenario '{scid}' not in catalog")
        elif catalog.scenario(scid).use_case_id != ucid:
            issue(scid, "scenario-mismatch", f"scenario '{scid}' does not belong to use case '{ucid}'")

    for ucid, items in project.assessments.items():
        if ucid not in project.considered_use_cases:
            issue(ucid, "not-considered", f"assessments present for non-considered use case '{ucid}'")
        if ucid not in catalog._use_cases:
            issue(ucid, "dangling-reference", f"assessments name unknown use case '{ucid}'")
            continue
        try:
            allowed = set(effective_enabler_ids(catalog, ucid, project.scenario_for(ucid)))
        except NotFoundError:
            allowed = set()
        assessed: set[str] = set()
        for a in items:
            if a.enabler_id in assessed:
                issue(a.enabler_id, "duplicate-id", f"enabler '{a.enabler_id}' assessed twice in '{ucid}'")
            assessed.add(a.enabler_id)
            if a.enabler_id not in allowed:
                issue(
                    a.enabler_id,
                    "enabler-not-in-scenario",
                    f"enabler '{a.enabler_id}' is not in the enabler list for use case '{ucid}'",
                )

    for ucid in project.impacts:
        if ucid not in catalog._use_cases:
            issue(ucid, "dangling-reference", f"impact profile names unknown use case '{ucid}'")

    return issues


# ---------------------------------------------------------------------------
# Snapshot diffing

@dataclass(frozen=True)
class AssessmentChange:
    use_case_id: str
    enabler_id: str
    dimension: str
    before: str | None  # level string; None when the assessment was absent
    after: str | None

    def to_dict(self) -> dict:
        return {
            "use_case_id": self.use_case_id,
            "enabler_id": self.enabler_id,
            "dimension": self.dimension,
            "before": self.before,
            "after": self.after,
        }


@dataclass(frozen=True)
class DiffReport:
    a: str
    b: str
    changes: tuple[AssessmentChange, ...]
    use_case_deltas: dict  # use case -> {categories, totals, deployment_cost}
    overall_gap_delta: float | None

    def is_empty(self) -> bool:
        return not self.changes and not self.use_case_deltas and not self.overall_gap_delta

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "changes": [c.to_dict() for c in self.changes],
            "use_case_deltas": self.use_case_deltas,
            "overall_gap_delta": self.overall_gap_delta,
        }


def _use_case_totals(project: Project, catalog: Catalog, use_case_id: str) -> UseCaseScores | None:
    items = project.assessments.get(use_case_id)
    if not items:
        return None
    scores = scoring.score_assessments(items, catalog)
    cats = aggregation.category_rollup(scores)
    return aggregation.use_case_rollup(cats, scores, use_case_id=use_case_id)


def _assessment_changes(a: Project, b: Project) -> list[AssessmentChange]:
    changes: list[AssessmentChange] = []
    for ucid in sorted(set(a.assessments) | set(b.assessments)):
        before = {x.enabler_id: x for x in a.assessments.get(ucid, [])}
        after = {x.enabler_id: x for x in b.assessments.get(ucid, [])}
        for eid in sorted(set(before) | set(after)):
            av, bv = before.get(eid), after.get(eid)
            for dim in scoring.SCORE_DIMENSIONS:
                x = getattr(av, dim).value if av else None
                y = getattr(bv, dim).value if bv else None
                if x != y:
                    changes.append(AssessmentChange(ucid, eid, dim, x, y))
    return changes


def diff_projects(a: Project, b: Project, catalog: Catalog, a_id: str = "a", b_id: str = "b") -> DiffReport:
    changes = _assessment_changes(a, b)

    use_case_deltas: dict = {}
    a_totals: dict[str, UseCaseScores] = {}
    b_totals: dict[str, UseCaseScores] = {}
    for ucid in sorted(set(a.considered_use_cases) | set(b.considered_use_cases)):
        ta = _use_case_totals(a, catalog, ucid)
        tb = _use_case_totals(b, catalog, ucid)
        if ta:
            a_totals[ucid] = ta
        if tb:
            b_totals[ucid] = tb
        if ta is None or tb is None:
            continue
        cat_deltas = {}
        for cat in ta.categories.present():
            ca, cb = ta.categories.get(cat), tb.categories.get(cat)
            if cb is None:
                continue
            d = {
                "readiness": cb.readiness - ca.readiness,
                "aspiration": cb.aspiration - ca.aspiration,
                "threshold": cb.threshold - ca.threshold,
            }
            if any(abs(v) > 1e-12 for v in d.values()):
                cat_deltas[cat.value] = d
        totals = {
            "readiness": tb.total_readiness - ta.total_readiness,
            "aspiration": tb.total_aspiration - ta.total_aspiration,
            "threshold": tb.total_threshold - ta.total_threshold,
        }
        cost_delta = tb.deployment_cost - ta.deployment_cost
        if cat_deltas or cost_delta or any(abs(v) > 1e-12 for v in totals.values()):
            use_case_deltas[ucid] = {
                "categories": cat_deltas,
                "totals": totals,
                "deployment_cost": cost_delta,
            }

    gap_delta: float | None = None
    if a_totals and b_totals:
        ga = aggregation.overall_rollup(list(a_totals.values())).gap
        gb = aggregation.overall_rollup(list(b_totals.values())).gap
        gap_delta = gb - ga
        if abs(gap_delta) < 1e-12:
            gap_delta = 0.0

    return DiffReport(
        a=a_id,
        b=b_id,
        changes=tuple(changes),
        use_case_deltas=use_case_deltas,
        overall_gap_delta=gap_delta,
    )


# ---------------------------------------------------------------------------
# The on-disk store

def _slug(text: str) -> str:
    s = re.sub(r"[^a-z0-9]+", "-", text.lower()).strip("-")
    return s or "snapshot"


class ProjectStore:
    """Owns one project directory. Mutations take the directory lock;
    reads do not."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    @property
    def project_path(self) -> Path:
        return self.root / PROJECT_FILE

    @property
    def catalog_path(self) -> Path:
        return self.root / CATALOG_FILE

    @property
    def snapshots_dir(self) -> Path:
        return self.root / SNAPSHOT_DIR

    @property
    def lock_path(self) -> Path:
        return self.root / LOCK_FILE

    def exists(self) -> bool:
        return self.project_path.is_file()

    @contextmanager
    def lock(self):
        try:
            fd = os.open(self.lock_path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise LockError(f"project directory '{self.root}' is locked (remove {LOCK_FILE} if stale)") from None
        except OSError as exc:
            raise StorageError(f"cannot create lock file: {exc}") from exc
        try:
            os.write(fd, f"{os.getpid()}\n".encode())
            os.close(fd)
            yield
        finally:
            try:
                self.lock_path.unlink()
            except OSError:
                pass

    def _write(self, path: Path, text: str) -> None:
        tmp = path.with_suffix(path.suffix + ".tmp")
        try:
            tmp.write_text(text, encoding="utf-8")
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageError(f"cannot write {path}: {exc}") from exc

    def _read_json(self, path: Path, kind: str) -> dict:
        if not path.is_file():
            raise NotFoundError(f"no {kind} at '{path}'")
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise StorageError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise StorageError(f"{path} is not valid JSON: {exc}") from exc

    def initialize(self, project: Project, catalog: Catalog) -> None:
        if self.exists():
            raise StorageError(f"project already exists at '{self.root}'")
        issues = validate_catalog(catalog)
        issues += validate_project(project, catalog)
        if issues:
            raise ValidationError(issues)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            self.snapshots_dir.mkdir(exist_ok=True)
        except OSError as exc:
            raise StorageError(f"cannot create project directory: {exc}") from exc
        self._write(self.catalog_path, catalog_to_json(catalog))
        self._write(self.project_path, stable_json(project.to_dict()))

    def load_catalog(self) -> Catalog:
        return Catalog.from_dict(self._read_json(self.catalog_path, "catalog"))

    def load(self) -> Project:
        return Project.from_dict(self._read_json(self.project_path, "project"))

    def save(self, project: Project) -> None:
        catalog = self.load_catalog()
        issues = validate_project(project, catalog)
        if issues:
            raise ValidationError(issues)
        with self.lock():
            self._write(self.project_path, stable_json(project.to_dict()))

    def take_snapshot(self, label: str, now: datetime | None = None) -> Snapshot:
        project = self.load()
        now = now or datetime.now(timezone.utc)
        stamp = now.strftime("%Y%m%dT%H%M%SZ")
        snap = Snapshot(
            id=f"{stamp}-{_slug(label)}",
            label=label,
            timestamp=now.strftime("%Y-%m-%dT%H:%M:%SZ"),
            project=project,
        )
        path = self.snapshots_dir / f"{snap.id}.json"
        if path.exists():
            raise StorageError(f"snapshot '{snap.id}' already exists (snapshots are write-once)")
        with self.lock():
            self.snapshots_dir.mkdir(exist_ok=True)
            self._write(path, stable_json(snap.to_dict()))
        return snap

    def list_snapshots(self) -> list[Snapshot]:
        if not self.snapshots_dir.is_dir():
            return []
        out = []
        for p in sorted(self.snapshots_dir.glob("*.json")):
            out.append(Snapshot.from_dict(self._read_json(p, "snapshot")))
        return out

    def load_snapshot(self, snapshot_id: str) -> Snapshot:
        path = self.snapshots_dir / f"{snapshot_id}.json"
        if not path.is_file():
            raise NotFoundError(f"unknown snapshot id '{snapshot_id}'")
        return Snapshot.from_dict(self._read_json(path, "snapshot"))

    def diff_snapshots(self, a_id: str, b_id: str) -> DiffReport:
        a, b = self.load_snapshot(a_id), self.load_snapshot(b_id)
        catalog = self.load_catalog()
        versions = {a.project.catalog_version, b.project.catalog_version, catalog.version}
        if len(versions) > 1:
            raise ValidationError(
                [
                    ValidationIssue(
                        f"{a_id}..{b_id}",
                        "catalog-version-mismatch",
                        f"snapshots are incomparable across catalog versions {sorted(versions)}",
                    )
                ]
            )
        return diff_projects(a.project, b.project, catalog, a_id=a_id, b_id=b_id)


def save_project(project: Project, root: str | Path) -> None:
    ProjectStore(root).save(project)


def load_project(root: str | Path) -> Project:
    return ProjectStore(root).load()
