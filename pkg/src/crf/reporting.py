"""Report assembly and rendering: radar/impact SVG, CSV tables, JSON bundles.

Renderers are pure text builders; identical input yields byte-identical
output. Radar axes follow the fixed category order (Physical, Operation,
Digital, Connectivity, Standard), first axis pointing up, clockwise.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace
from typing import Sequence

from .aggregation import (
    CategoryScores,
    ImpactProfile,
    IMPACT_FACTORS,
    OverallScores,
    UseCaseScores,
    category_rollup,
    overall_rollup,
    service_impact,
    service_progress,
    use_case_progress,
    use_case_rollup,
)
from .catalog import CATEGORY_ORDER, Catalog, effective_enabler_ids
from .errors import ValidationError, ValidationIssue
from .feasibility import find_blockers
from .scoring import (
    CostLevel,
    EnablerAssessment,
    EnablerScores,
    Importance,
    LikertLevel,
    SCORE_DIMENSIONS,
    score_assessments,
    score_enabler,
)
from .store import Project

SCHEMA_VERSION = "1"

AXIS_LABELS = tuple(c.label for c in CATEGORY_ORDER)

RADAR_MAX = 9.0
RADAR_RINGS = (3.0, 6.0, 9.0)
IMPACT_MAX = 3.0
IMPACT_RINGS = (1.0, 2.0, 3.0)

_SERIES_STYLES = {"readiness": "solid", "aspiration": "dashed", "threshold": "dotted"}


def fmt1(x: float) -> str:
    """Display rounding: one decimal place. Internal math stays full precision."""
    return f"{x:.1f}"


def fmt_pct(p: float) -> str:
    return f"{p:.0%}"


@dataclass(frozen=True)
class RadarSeries:
    """One polygon on the five-axis radar. Absent categories are drawn at
    zero but flagged so renderers can mark them."""

    label: str
    values: tuple[float, ...]
    absent: tuple[bool, ...]
    style: str

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "values": list(self.values),
            "absent": list(self.absent),
            "style": self.style,
        }


def radar_series(categories: CategoryScores) -> list[RadarSeries]:
    """Readiness, aspiration, and threshold series over the five fixed axes."""
    out = []
    for dim in ("readiness", "aspiration", "threshold"):
        values = []
        absent = []
        for cat in CATEGORY_ORDER:
            triple = categories.get(cat)
            values.append(getattr(triple, dim) if triple else 0.0)
            absent.append(triple is None)
        out.append(
            RadarSeries(
                label=dim.capitalize(),
                values=tuple(values),
                absent=tuple(absent),
                style=_SERIES_STYLES[dim],
            )
        )
    return out


def overall_radar_series(overall: OverallScores) -> list[RadarSeries]:
    """Overall charts carry readiness and aspiration only."""
    out = []
    for dim in ("readiness", "aspiration"):
        values = []
        absent = []
        for cat in CATEGORY_ORDER:
            oc = overall.categories.get(cat)
            values.append(getattr(oc, dim) if oc else 0.0)
            absent.append(oc is None)
        out.append(
            RadarSeries(
                label=dim.capitalize(),
                values=tuple(values),
                absent=tuple(absent),
                style=_SERIES_STYLES[dim],
            )
        )
    return out


def radar_geometry(series: RadarSeries, radius_px: float) -> list[tuple[float, float]]:
    """Planar vertices for one series, y-up coordinates around the origin.

    Vertex k sits at angle 90 deg - k*72 deg (first axis up, clockwise), at
    distance (value / 9) * radius_px from the center.
    """
    if radius_px <= 0:
        raise ValueError("radius_px must be positive")
    return _vertices(series.values, RADAR_MAX, radius_px)


def _vertices(values: Sequence[float], max_value: float, radius: float) -> list[tuple[float, float]]:
    pts = []
    for k, v in enumerate(values):
        theta = math.radians(90.0 - 72.0 * k)
        d = (v / max_value) * radius
        pts.append((d * math.cos(theta), d * math.sin(theta)))
    return pts


_SVG_STYLE = (
    "  <style>\n"
    "    .ring { fill: none; stroke: #c8c8c8; stroke-width: 1; }\n"
    "    .spoke { stroke: #c8c8c8; stroke-width: 1; }\n"
    "    .axis-label { font: 12px sans-serif; fill: #333333; }\n"
    "    .ring-label { font: 9px sans-serif; fill: #888888; }\n"
    "    .series { fill-opacity: 0.12; stroke-width: 2; }\n"
    "    .solid { stroke: #1f6fb2; fill: #1f6fb2; }\n"
    "    .dashed { stroke: #d97706; fill: #d97706; stroke-dasharray: 6 3; }\n"
    "    .dotted { stroke: #22863a; fill: #22863a; stroke-dasharray: 2 3; }\n"
    "  </style>\n"
)


def _f(v: float) -> str:
    return f"{v:.2f}"


def _radar_svg(
    axes: Sequence[str],
    series: Sequence[RadarSeries],
    max_value: float,
    rings: Sequence[float],
    size: float,
) -> str:
    c = size / 2.0
    radius = size * 0.39  # leave margin for the axis labels
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(size)}" height="{_f(size)}" '
        f'viewBox="0 0 {_f(size)} {_f(size)}">\n',
        _SVG_STYLE,
    ]
    for r in rings:
        parts.append(f'  <circle class="ring" cx="{_f(c)}" cy="{_f(c)}" r="{_f(r / max_value * radius)}"/>\n')
        parts.append(
            f'  <text class="ring-label" x="{_f(c + 3)}" y="{_f(c - r / max_value * radius - 2)}">{r:g}</text>\n'
        )
    outer = _vertices([max_value] * len(axes), max_value, radius)
    for k, (x, y) in enumerate(outer):
        parts.append(
            f'  <line class="spoke" x1="{_f(c)}" y1="{_f(c)}" x2="{_f(c + x)}" y2="{_f(c - y)}"/>\n'
        )
        lx, ly = c + x * 1.12, c - y * 1.12
        anchor = "middle" if abs(x) < 1e-9 else ("start" if x > 0 else "end")
        parts.append(
            f'  <text class="axis-label" text-anchor="{anchor}" x="{_f(lx)}" y="{_f(ly)}">{axes[k]}</text>\n'
        )
    for s in series:
        pts = _vertices(s.values, max_value, radius)
        coords = " ".join(f"{_f(c + x)},{_f(c - y)}" for x, y in pts)
        parts.append(f'  <polygon class="series {s.style}" data-label="{s.label}" points="{coords}"/>\n')
    parts.append("</svg>\n")
    return "".join(parts)


def render_radar_svg(series: Sequence[RadarSeries], size: float = 360.0) -> str:
    """Five-spoke radar with grid rings at 3, 6, 9 and one polygon per series."""
    if not series:
        raise ValueError("no series to render")
    return _radar_svg(AXIS_LABELS, series, RADAR_MAX, RADAR_RINGS, size)


def render_impact_svg(profile: ImpactProfile, size: float = 360.0, style: str = "radar") -> str:
    """Impact chart over cost/safety/efficiency/environment/inclusion, scale 0..3.

    Radar by default; ``style="bars"`` renders the bar-chart variant.
    """
    axes = tuple(f.capitalize() for f in IMPACT_FACTORS)
    values = tuple(float(getattr(profile, f)) for f in IMPACT_FACTORS)
    if style == "radar":
        series = (RadarSeries("Impact", values, (False,) * 5, "solid"),)
        return _radar_svg(axes, series, IMPACT_MAX, IMPACT_RINGS, size)
    if style != "bars":
        raise ValueError(f"unknown impact chart style '{style}'")
    w = size / 7.0
    base = size * 0.82
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_f(size)}" height="{_f(size)}" '
        f'viewBox="0 0 {_f(size)} {_f(size)}">\n',
        _SVG_STYLE,
    ]
    for i, v in enumerate(values):
        h = (v / IMPACT_MAX) * size * 0.7
        x = w * (0.75 + 1.2 * i)
        parts.append(
            f'  <rect class="series solid" x="{_f(x)}" y="{_f(base - h)}" width="{_f(w)}" height="{_f(h)}"/>\n'
        )
        parts.append(
            f'  <text class="axis-label" text-anchor="middle" x="{_f(x + w / 2)}" y="{_f(base + 14)}">{axes[i]}</text>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


# ---------------------------------------------------------------------------
# CSV export / import

CSV_HEADER = (
    "enabler_id,name,category,importance,readiness,readiness_score,"
    "aspiration,aspiration_score,threshold,threshold_score,cost"
)


def export_csv(assessments: Sequence[EnablerAssessment], catalog: Catalog) -> str:
    """One row per enabler, RFC 4180 quoting, LF endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for a in assessments:
        enabler = catalog.enabler(a.enabler_id)
        s = score_enabler(a, catalog)
        writer.writerow(
            [
                a.enabler_id,
                enabler.name,
                enabler.category.value,
                a.importance.value,
                a.readiness.value,
                s.readiness_score,
                a.aspiration.value,
                s.aspiration_score,
                a.threshold.value,
                s.threshold_score,
                a.cost.value,
            ]
        )
    return buf.getvalue()


def assessments_from_csv(text: str) -> list[EnablerAssessment]:
    """Rebuild the level/importance inputs from an exported table."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        out.append(
            EnablerAssessment(
                enabler_id=row["enabler_id"],
                importance=Importance(row["importance"]),
                readiness=LikertLevel(row["readiness"]),
                aspiration=LikertLevel(row["aspiration"]),
                threshold=LikertLevel(row["threshold"]),
                cost=CostLevel(row["cost"]),
            )
        )
    return out


# ---------------------------------------------------------------------------
# Score sheets and reports

@dataclass(frozen=True)
class ScoreSheet:
    """Per-enabler and rolled-up scores for one use case."""

    use_case_id: str
    enablers: tuple[EnablerScores, ...]
    scores: UseCaseScores

    def to_dict(self) -> dict:
        u = self.scores
        return {
            "use_case_id": self.use_case_id,
            "enablers": [e.to_dict() for e in self.enablers],
            "categories": u.categories.to_dict(),
            "total_readiness": u.total_readiness,
            "total_aspiration": u.total_aspiration,
            "total_threshold": u.total_threshold,
            "deployment_cost": u.deployment_cost,
            "display": _display_totals(u),
        }


def _display_totals(u: UseCaseScores) -> dict:
    return {
        "total_readiness": fmt1(u.total_readiness),
        "total_aspiration": fmt1(u.total_aspiration),
        "total_threshold": fmt1(u.total_threshold),
        "categories": {
            c.value: {
                "readiness": fmt1(u.categories.by_category[c].readiness),
                "aspiration": fmt1(u.categories.by_category[c].aspiration),
                "threshold": fmt1(u.categories.by_category[c].threshold),
            }
            for c in u.categories.present()
        },
    }


def score_sheet(
    use_case_id: str, assessments: Sequence[EnablerAssessment], catalog: Catalog
) -> ScoreSheet:
    if not assessments:
        raise ValidationError(
            [ValidationIssue(use_case_id, "no-assessments", f"no assessments for use case '{use_case_id}'")]
        )
    scores = score_assessments(list(assessments), catalog)
    cats = category_rollup(scores)
    totals = use_case_rollup(cats, scores, use_case_id=use_case_id)
    return ScoreSheet(use_case_id=use_case_id, enablers=tuple(scores), scores=totals)


@dataclass(frozen=True)
class Override:
    """One what-if patch: set a single dimension of one enabler's assessment."""

    enabler_id: str
    dimension: str
    level: str

    @classmethod
    def from_dict(cls, d: dict) -> "Override":
        try:
            return cls(enabler_id=d["enabler_id"], dimension=d["dimension"], level=d["level"])
        except KeyError as exc:
            raise ValidationError(f"override missing key {exc}") from exc


def apply_overrides(
    assessments: Sequence[EnablerAssessment], overrides: Sequence[Override]
) -> list[EnablerAssessment]:
    """Return patched copies; the input assessments are never mutated."""
    by_id = {a.enabler_id: a for a in assessments}
    for o in overrides:
        if o.dimension not in SCORE_DIMENSIONS:
            raise ValidationError(
                [ValidationIssue(o.enabler_id, "dimension-invalid", f"unknown dimension '{o.dimension}'")]
            )
        if o.enabler_id not in by_id:
            raise ValidationError(
                [
                    ValidationIssue(
                        o.enabler_id,
                        "no-assessment",
                        f"no existing assessment for enabler '{o.enabler_id}' to override",
                    )
                ]
            )
        if o.dimension == "importance":
            if o.level == "none":
                raise ValidationError(
                    [
                        ValidationIssue(
                            o.enabler_id,
                            "importance-none-forbidden",
                            "importance cannot be 'none'",
                        )
                    ]
                )
            try:
                value = Importance(o.level)
            except ValueError:
                raise ValidationError(
                    [ValidationIssue(o.enabler_id, "level-invalid", f"invalid importance '{o.level}'")]
                ) from None
        else:
            try:
                value = LikertLevel(o.level)
            except ValueError:
                raise ValidationError(
                    [ValidationIssue(o.enabler_id, "level-invalid", f"invalid level '{o.level}'")]
                ) from None
        by_id[o.enabler_id] = replace(by_id[o.enabler_id], **{o.dimension: value})
    return [by_id[a.enabler_id] for a in assessments]


def _require_considered(project: Project, catalog: Catalog, use_case_id: str) -> None:
    catalog.use_case(use_case_id)  # NotFoundError on unknown id
    if use_case_id not in project.considered_use_cases:
        raise ValidationError(
            [ValidationIssue(use_case_id, "not-considered", f"use case '{use_case_id}' is not considered")]
        )


def use_case_report(
    project: Project,
    catalog: Catalog,
    use_case_id: str,
    overrides: Sequence[Override] = (),
) -> dict:
    """Score sheet + feasibility verdict + radar series for one use case.

    Pure: computes from in-memory state, optionally overlaid with what-if
    overrides, and never persists anything.
    """
    _require_considered(project, catalog, use_case_id)
    assessments = project.assessments.get(use_case_id, [])
    if overrides:
        assessments = apply_overrides(assessments, overrides)
    sheet = score_sheet(use_case_id, assessments, catalog)
    verdict = find_blockers(list(sheet.enablers), use_case_id=use_case_id)
    impact = project.impacts.get(use_case_id)
    doc = sheet.to_dict()
    doc["feasibility"] = verdict.to_dict()
    doc["radar"] = [s.to_dict() for s in radar_series(sheet.scores.categories)]
    doc["impact"] = impact.to_dict() if impact else None
    doc["scenario_id"] = project.scenario_for(use_case_id)
    doc["enabler_universe"] = list(
        effective_enabler_ids(catalog, use_case_id, project.scenario_for(use_case_id))
    )
    return doc


@dataclass(frozen=True)
class ProgressBar:
    use_case_id: str
    progress: float | None  # None when considered but not yet scored
    considered: bool

    def to_dict(self) -> dict:
        return {
            "use_case_id": self.use_case_id,
            "progress": self.progress,
            "considered": self.considered,
        }


@dataclass(frozen=True)
class ProgressReport:
    service_id: str
    bars: tuple[ProgressBar, ...]
    service: float

    def to_dict(self) -> dict:
        return {
            "service_id": self.service_id,
            "bars": [b.to_dict() for b in self.bars],
            "service_progress": self.service,
            "display": fmt_pct(self.service),
        }


def _scored_use_cases(project: Project, catalog: Catalog) -> dict[str, ScoreSheet]:
    sheets = {}
    for ucid in project.considered_use_cases:
        items = project.assessments.get(ucid)
        if items:
            sheets[ucid] = score_sheet(ucid, items, catalog)
    return sheets


def progress_report(project: Project, catalog: Catalog, service_id: str) -> ProgressReport:
    service = catalog.service(service_id)
    sheets = _scored_use_cases(project, catalog)
    fractions: dict[str, float] = {}
    bars = []
    for ucid in service.use_cases:
        considered = ucid in project.considered_use_cases
        progress = None
        if ucid in sheets:
            progress = use_case_progress(sheets[ucid].scores)
            fractions[ucid] = progress
        bars.append(ProgressBar(ucid, progress, considered))
    sp = service_progress(service_id, fractions)  # ValueError when nothing scored
    return ProgressReport(service_id=service_id, bars=tuple(bars), service=sp.progress)


def service_report(project: Project, catalog: Catalog, service_id: str) -> dict:
    try:
        report = progress_report(project, catalog, service_id)
    except ValueError as exc:
        raise ValidationError(
            [ValidationIssue(service_id, "no-scored-use-cases", str(exc))]
        ) from exc
    doc = report.to_dict()
    profiles = [
        project.impacts[b.use_case_id]
        for b in report.bars
        if b.progress is not None and b.use_case_id in project.impacts
    ]
    doc["impact"] = service_impact(profiles) if profiles else None
    return doc


def overall_report(project: Project, catalog: Catalog) -> dict:
    sheets = _scored_use_cases(project, catalog)
    if not sheets:
        raise ValidationError(
            [ValidationIssue(project.id, "no-scored-use-cases", "no considered use case has assessments")]
        )
    overall = overall_rollup([s.scores for s in sheets.values()])
    doc = overall.to_dict()
    doc["use_cases"] = sorted(sheets)
    doc["display"] = {
        "total_readiness": fmt1(overall.total_readiness),
        "total_aspiration": fmt1(overall.total_aspiration),
        "gap": fmt1(overall.gap),
    }
    doc["radar"] = [s.to_dict() for s in overall_radar_series(overall)]
    return doc


def report_bundle(
    project: Project,
    catalog: Catalog,
    use_cases: Sequence[str] | None = None,
    services: Sequence[str] | None = None,
) -> dict:
    """The full report document: per-use-case scores, service progress,
    overall rollup, impacts, and feasibility blockers.

    use_cases / services scope the per-entity sections; the overall section
    always spans every considered use case with assessments.
    """
    sheets = _scored_use_cases(project, catalog)
    if not sheets:
        raise ValidationError(
            [ValidationIssue(project.id, "no-scored-use-cases", "no considered use case has assessments")]
        )
    selected = list(sheets) if use_cases is None else list(use_cases)
    for ucid in selected:
        _require_considered(project, catalog, ucid)
        if ucid not in sheets:
            raise ValidationError(
                [ValidationIssue(ucid, "no-assessments", f"no assessments for use case '{ucid}'")]
            )

    if services is None:
        service_ids = sorted({catalog.use_case(u).service_id for u in selected})
    else:
        service_ids = list(services)

    bundle: dict = {"schema_version": SCHEMA_VERSION}
    bundle["use_case_scores"] = {u: sheets[u].to_dict() for u in selected}
    bundle["feasibility"] = {
        u: find_blockers(list(sheets[u].enablers), use_case_id=u).to_dict() for u in selected
    }
    bundle["impacts"] = {
        u: project.impacts[u].to_dict() for u in selected if u in project.impacts
    }
    progress = {}
    for sid in service_ids:
        try:
            progress[sid] = service_report(project, catalog, sid)
        except ValidationError:
            continue  # service with nothing scored: omitted from the bundle
    bundle["service_progress"] = progress
    bundle["overall"] = overall_report(project, catalog)
    return bundle


# JSON Schema for the bundle; report --format json output validates against it.
_CATEGORY_TRIPLE = {
    "type": "object",
    "required": ["readiness", "aspiration", "threshold"],
    "additionalProperties": False,
    "properties": {
        "readiness": {"type": "number", "minimum": 0, "maximum": 9},
        "aspiration": {"type": "number", "minimum": 0, "maximum": 9},
        "threshold": {"type": "number", "minimum": 0, "maximum": 9},
    },
}

_RADAR_SERIES = {
    "type": "object",
    "required": ["label", "values", "absent", "style"],
    "properties": {
        "label": {"type": "string"},
        "values": {"type": "array", "minItems": 5, "maxItems": 5, "items": {"type": "number"}},
        "absent": {"type": "array", "minItems": 5, "maxItems": 5, "items": {"type": "boolean"}},
        "style": {"enum": ["solid", "dashed", "dotted"]},
    },
}

_USE_CASE_SCORES = {
    "type": "object",
    "required": [
        "use_case_id",
        "enablers",
        "categories",
        "total_readiness",
        "total_aspiration",
        "total_threshold",
        "deployment_cost",
        "display",
    ],
    "properties": {
        "use_case_id": {"type": "string"},
        "enablers": {"type": "array", "items": {"type": "object"}},
        "categories": {"type": "object", "additionalProperties": _CATEGORY_TRIPLE},
        "total_readiness": {"type": "number", "minimum": 0, "maximum": 9},
        "total_aspiration": {"type": "number", "minimum": 0, "maximum": 9},
        "total_threshold": {"type": "number", "minimum": 0, "maximum": 9},
        "deployment_cost": {"type": "integer", "minimum": 0},
        "display": {"type": "object"},
    },
}

_FEASIBILITY = {
    "type": "object",
    "required": ["use_case_id", "feasible", "blockers", "margin"],
    "properties": {
        "feasible": {"type": "boolean"},
        "blockers": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["enabler_id", "category", "readiness_score", "threshold_score", "gap", "importance"],
                "properties": {"gap": {"type": "integer", "minimum": 1}},
            },
        },
        "margin": {"type": "integer"},
    },
}

REPORT_BUNDLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema_version", "use_case_scores", "service_progress", "overall", "impacts", "feasibility"],
    "properties": {
        "schema_version": {"type": "string"},
        "use_case_scores": {"type": "object", "additionalProperties": _USE_CASE_SCORES},
        "feasibility": {"type": "object", "additionalProperties": _FEASIBILITY},
        "impacts": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": list(IMPACT_FACTORS),
                "additionalProperties": False,
                "properties": {f: {"enum": [1, 2, 3]} for f in IMPACT_FACTORS},
            },
        },
        "service_progress": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["service_id", "bars", "service_progress", "display"],
                "properties": {
                    "service_id": {"type": "string"},
                    "bars": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["use_case_id", "progress", "considered"],
                            "properties": {
                                "progress": {"type": ["number", "null"], "minimum": 0, "maximum": 1},
                                "considered": {"type": "boolean"},
                            },
                        },
                    },
                    "service_progress": {"type": "number", "minimum": 0, "maximum": 1},
                },
            },
        },
        "overall": {
            "type": "object",
            "required": ["categories", "total_readiness", "total_aspiration", "gap", "display", "radar"],
            "properties": {
                "categories": {
                    "type": "object",
                    "additionalProperties": {
                        "type": "object",
                        "required": ["readiness", "aspiration"],
                        "properties": {
                            "readiness": {"type": "number", "minimum": 0, "maximum": 9},
                            "aspiration": {"type": "number", "minimum": 0, "maximum": 9},
                        },
                    },
                },
                "total_readiness": {"type": "number", "minimum": 0, "maximum": 9},
                "total_aspiration": {"type": "number", "minimum": 0, "maximum": 9},
                "gap": {"type": "number"},
                "radar": {"type": "array", "items": _RADAR_SERIES},
            },
        },
    },
}
