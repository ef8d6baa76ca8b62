"""Command-line entry point: project lifecycle, scoring, reports, what-if, serve.

Exit codes are machine-parsable: 0 ok, 1 validation error, 2 usage error,
3 I/O error. Human-readable messages go to stderr; machine output (JSON,
CSV, SVG, tables) goes to stdout only.
"""

from __future__ import annotations

import argparse
import os
import sys
from enum import IntEnum
from pathlib import Path

from . import demo, reporting
from .catalog import Catalog, builtin_croads_catalog, catalog_from_json, stable_json, validate_catalog
from .errors import CrfError, LockError, NotFoundError, StorageError, ValidationError
from .reporting import Override, fmt1, fmt_pct
from .scoring import CostLevel, EnablerAssessment, Importance, LikertLevel
from .store import Project, ProjectStore, validate_project

PROJECT_DIR_ENV = "CRF_PROJECT_DIR"

LEVELS = [l.value for l in LikertLevel]
IMPORTANCES = [i.value for i in Importance]


class ExitStatus(IntEnum):
    OK = 0
    VALIDATION = 1
    USAGE = 2
    IO = 3


class UsageError(CrfError):
    pass


def _err(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _store(args) -> ProjectStore:
    directory = getattr(args, "dir", None) or os.environ.get(PROJECT_DIR_ENV)
    if not directory:
        raise UsageError(f"no project directory: pass --dir or set {PROJECT_DIR_ENV}")
    return ProjectStore(directory)


def _load(args) -> tuple[ProjectStore, Project, Catalog]:
    store = _store(args)
    return store, store.load(), store.load_catalog()


# ---------------------------------------------------------------------------
# Subcommands

def cmd_init(args) -> int:
    store = ProjectStore(args.dir)
    if args.demo:
        catalog = demo.demo_catalog()
        project = demo.demo_project(project_id=args.id or Path(args.dir).name, name=args.name or "RWW demo")
    else:
        if args.catalog == "builtin":
            catalog = builtin_croads_catalog()
        else:
            catalog = catalog_from_json(Path(args.catalog).read_text(encoding="utf-8"))
        project = Project(
            id=args.id or Path(args.dir).name,
            name=args.name or Path(args.dir).name,
            catalog_version=catalog.version,
        )
    store.initialize(project, catalog)
    _err(f"initialized project '{project.id}' in {store.root}")
    return ExitStatus.OK


def cmd_validate(args) -> int:
    store = ProjectStore(args.dir)
    catalog = store.load_catalog()
    issues = validate_catalog(catalog)
    issues += validate_project(store.load(), catalog)
    doc = {"schema_version": reporting.SCHEMA_VERSION, "issues": [i.to_dict() for i in issues]}
    sys.stdout.write(stable_json(doc))
    if issues:
        _err(f"{len(issues)} validation issue(s)")
        return ExitStatus.VALIDATION
    _err("project valid")
    return ExitStatus.OK


def cmd_consider(args) -> int:
    store, project, catalog = _load(args)
    for ucid in args.use_cases:
        catalog.use_case(ucid)  # NotFoundError on unknown id
        if ucid not in project.considered_use_cases:
            project.considered_use_cases.append(ucid)
    store.save(project)
    _err(f"considering {len(project.considered_use_cases)} use case(s)")
    return ExitStatus.OK


def cmd_score_set(args) -> int:
    store, project, _catalog = _load(args)
    assessment = EnablerAssessment(
        enabler_id=args.enabler,
        importance=Importance(args.importance),
        readiness=LikertLevel(args.readiness),
        aspiration=LikertLevel(args.aspiration),
        threshold=LikertLevel(args.threshold),
        cost=CostLevel(args.cost),
        note=args.note,
    )
    items = project.assessments.setdefault(args.use_case, [])
    for i, existing in enumerate(items):
        if existing.enabler_id == args.enabler:
            items[i] = assessment
            break
    else:
        items.append(assessment)
    store.save(project)
    _err(f"scored {args.enabler} in {args.use_case}")
    return ExitStatus.OK


def _report_table(kind: str, doc: dict) -> str:
    lines: list[str] = []
    if kind == "usecase":
        uc = next(iter(doc["use_case_scores"].values()))
        verdict = doc["feasibility"][uc["use_case_id"]]
        lines.append(f"Use case {uc['use_case_id']}")
        header = f"{'ENABLER':<24} {'CATEGORY':<13} {'IMP':<7} {'RDY':>4} {'ASP':>4} {'THR':>4} {'COST':>5}"
        lines.append(header)
        lines.append("-" * len(header))
        for e in uc["enablers"]:
            lines.append(
                f"{e['enabler_id']:<24} {e['category']:<13} {e['importance']:<7} "
                f"{e['readiness_score']:>4} {e['aspiration_score']:>4} {e['threshold_score']:>4} {e['cost_points']:>5}"
            )
        lines.append("")
        lines.append(f"{'CATEGORY':<14} {'READINESS':>9} {'ASPIRATION':>10} {'THRESHOLD':>9}")
        for cat, triple in uc["categories"].items():
            lines.append(
                f"{cat:<14} {fmt1(triple['readiness']):>9} {fmt1(triple['aspiration']):>10} {fmt1(triple['threshold']):>9}"
            )
        lines.append(
            f"{'TOTAL':<14} {uc['display']['total_readiness']:>9} "
            f"{uc['display']['total_aspiration']:>10} {uc['display']['total_threshold']:>9}"
        )
        lines.append(f"Deployment cost: {uc['deployment_cost']}")
        status = "feasible" if verdict["feasible"] else f"{len(verdict['blockers'])} blocker(s)"
        lines.append(f"Feasibility: {status} (margin {verdict['margin']})")
        for b in verdict["blockers"]:
            lines.append(
                f"  blocker {b['enabler_id']} ({b['category']}): readiness {b['readiness_score']} < threshold {b['threshold_score']}, gap {b['gap']}"
            )
    elif kind == "service":
        svc = next(iter(doc["service_progress"].values()))
        lines.append(f"Service {svc['service_id']}")
        lines.append(f"{'USE CASE':<14} {'PROGRESS':>9}  CONSIDERED")
        for bar in svc["bars"]:
            p = fmt_pct(bar["progress"]) if bar["progress"] is not None else "-"
            lines.append(f"{bar['use_case_id']:<14} {p:>9}  {'yes' if bar['considered'] else 'no'}")
        lines.append(f"{'SERVICE':<14} {svc['display']:>9}")
    else:
        ov = doc["overall"]
        lines.append("Overall readiness")
        lines.append(f"{'CATEGORY':<14} {'READINESS':>9} {'ASPIRATION':>10}")
        for cat, pair in ov["categories"].items():
            lines.append(f"{cat:<14} {fmt1(pair['readiness']):>9} {fmt1(pair['aspiration']):>10}")
        lines.append(f"{'TOTAL':<14} {ov['display']['total_readiness']:>9} {ov['display']['total_aspiration']:>10}")
        lines.append(f"Gap to aspiration: {ov['display']['gap']}")
    return "\n".join(lines) + "\n"


def _report_csv(kind: str, doc: dict, project, catalog) -> str:
    if kind == "usecase":
        ucid = next(iter(doc["use_case_scores"]))
        return reporting.export_csv(project.assessments[ucid], catalog)
    import csv as _csv
    import io as _io

    buf = _io.StringIO()
    w = _csv.writer(buf, lineterminator="\n")
    if kind == "service":
        svc = next(iter(doc["service_progress"].values()))
        w.writerow(["use_case_id", "progress", "considered"])
        for bar in svc["bars"]:
            w.writerow([bar["use_case_id"], "" if bar["progress"] is None else bar["progress"], bar["considered"]])
        w.writerow(["service", svc["service_progress"], ""])
    else:
        ov = doc["overall"]
        w.writerow(["category", "readiness", "aspiration"])
        for cat, pair in ov["categories"].items():
            w.writerow([cat, pair["readiness"], pair["aspiration"]])
        w.writerow(["total", ov["total_readiness"], ov["total_aspiration"]])
    return buf.getvalue()


def _report_svg(kind: str, doc: dict, chart: str) -> str:
    if kind == "service":
        raise UsageError("svg output is not available for service reports (use csv or table)")
    if kind == "overall":
        series = [reporting.RadarSeries(s["label"], tuple(s["values"]), tuple(s["absent"]), s["style"]) for s in doc["overall"]["radar"]]
        return reporting.render_radar_svg(series)
    uc = next(iter(doc["use_case_scores"].values()))
    if chart.startswith("impact"):
        profile = doc["impacts"].get(uc["use_case_id"])
        if not profile:
            raise ValidationError(f"no impact profile recorded for '{uc['use_case_id']}'")
        from .aggregation import ImpactProfile

        style = "bars" if chart == "impact-bars" else "radar"
        return reporting.render_impact_svg(ImpactProfile.from_dict(profile), style=style)
    series = [
        reporting.RadarSeries(s["label"], tuple(s["values"]), tuple(s["absent"]), s["style"])
        for s in doc["use_case_scores"][uc["use_case_id"]].get("radar", [])
    ]
    if not series:
        sheet = doc["use_case_scores"][uc["use_case_id"]]
        raise ValidationError(f"no radar series for '{sheet['use_case_id']}'")
    return reporting.render_radar_svg(series)


def _save_figures(kind: str, doc: dict, figures_dir: str) -> list[Path]:
    from . import figures  # keeps matplotlib out of non-figure runs
    from .aggregation import ImpactProfile
    from .reporting import ProgressBar, ProgressReport, RadarSeries

    out_dir = Path(figures_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    def _series(raw) -> list[RadarSeries]:
        return [RadarSeries(s["label"], tuple(s["values"]), tuple(s["absent"]), s["style"]) for s in raw]

    if kind == "usecase":
        ucid = next(iter(doc["use_case_scores"]))
        uc = doc["use_case_scores"][ucid]
        written.append(figures.save_radar_png(_series(uc["radar"]), out_dir / f"{ucid}_radar.png", title=ucid))
        profile = doc["impacts"].get(ucid)
        if profile:
            written.append(
                figures.save_impact_png(ImpactProfile.from_dict(profile), out_dir / f"{ucid}_impact.png", title=f"{ucid} impact")
            )
    elif kind == "service":
        svc = next(iter(doc["service_progress"].values()))
        report = ProgressReport(
            service_id=svc["service_id"],
            bars=tuple(ProgressBar(b["use_case_id"], b["progress"], b["considered"]) for b in svc["bars"]),
            service=svc["service_progress"],
        )
        written.append(figures.save_progress_png(report, out_dir / f"{svc['service_id']}_progress.png", title=svc["service_id"]))
    else:
        written.append(figures.save_radar_png(_series(doc["overall"]["radar"]), out_dir / "overall_radar.png", title="Overall"))
    return written


def _bundle_for(kind: str, ident: str | None, project, catalog) -> dict:
    if kind == "usecase":
        if not ident:
            raise UsageError("report usecase requires a use-case id")
        doc = reporting.report_bundle(project, catalog, use_cases=[ident])
        doc["use_case_scores"][ident]["radar"] = reporting.use_case_report(project, catalog, ident)["radar"]
        return doc
    if kind == "service":
        if not ident:
            raise UsageError("report service requires a service id")
        considered = [u for u in project.considered_use_cases if catalog.use_case(u).service_id == ident and project.assessments.get(u)]
        return reporting.report_bundle(project, catalog, use_cases=considered, services=[ident])
    return reporting.report_bundle(project, catalog)


def cmd_report(args) -> int:
    _store_obj, project, catalog = _load(args)
    doc = _bundle_for(args.kind, args.id, project, catalog)
    if args.format == "json":
        text = stable_json(doc)
    elif args.format == "table":
        text = _report_table(args.kind, doc)
    elif args.format == "csv":
        text = _report_csv(args.kind, doc, project, catalog)
    else:
        text = _report_svg(args.kind, doc, args.chart)
    _emit(text, args.out)
    if args.figures:
        for path in _save_figures(args.kind, doc, args.figures):
            _err(f"wrote {path}")
    return ExitStatus.OK


def cmd_whatif(args) -> int:
    _store_obj, project, catalog = _load(args)
    overrides = []
    for pair in args.overrides:
        if "=" not in pair:
            raise UsageError(f"override '{pair}' is not of the form dimension=level")
        dim, _, level = pair.partition("=")
        overrides.append(Override(enabler_id=args.enabler, dimension=dim, level=level))
    doc = reporting.use_case_report(project, catalog, args.use_case, overrides=overrides)
    doc["schema_version"] = reporting.SCHEMA_VERSION
    if args.format == "json":
        text = stable_json(doc)
    elif args.format == "table":
        wrapped = {
            "use_case_scores": {doc["use_case_id"]: doc},
            "feasibility": {doc["use_case_id"]: doc["feasibility"]},
        }
        text = _report_table("usecase", wrapped)
    elif args.format == "csv":
        patched = reporting.apply_overrides(project.assessments.get(args.use_case, []), overrides)
        text = reporting.export_csv(patched, catalog)
    else:
        series = [
            reporting.RadarSeries(s["label"], tuple(s["values"]), tuple(s["absent"]), s["style"])
            for s in doc["radar"]
        ]
        text = reporting.render_radar_svg(series)
    _emit(text, args.out)
    return ExitStatus.OK


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    store = _store(args)
    app = create_app(store.root, dev=args.dev, static_dir=Path(args.static) if args.static else None)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="warning")
    return ExitStatus.OK


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crf",
        description="Readiness scoring and planning for C-ITS infrastructure.",
    )
    sub = parser.add_subparsers(dest="command", metavar="<command>")

    def add_dir(p):
        p.add_argument("--dir", help=f"project directory (default: ${PROJECT_DIR_ENV})")

    p = sub.add_parser("init", help="create a project directory")
    p.add_argument("dir")
    p.add_argument("--catalog", default="builtin", help="'builtin' or a catalog JSON file")
    p.add_argument("--demo", action="store_true", help="seed the worked RWW pilot example")
    p.add_argument("--name")
    p.add_argument("--id")
    p.set_defaults(func=cmd_init)

    p = sub.add_parser("validate", help="validate catalog and project files")
    p.add_argument("dir")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("consider", help="add use cases to the considered set")
    p.add_argument("use_cases", nargs="+", metavar="use-case-id")
    add_dir(p)
    p.set_defaults(func=cmd_consider)

    p = sub.add_parser("score", help="enter assessment scores")
    score_sub = p.add_subparsers(dest="score_command", metavar="<action>")
    ps = score_sub.add_parser("set", help="set one enabler's assessment")
    ps.add_argument("use_case", metavar="use-case-id")
    ps.add_argument("enabler", metavar="enabler-id")
    ps.add_argument("--importance", required=True, choices=IMPORTANCES)
    ps.add_argument("--readiness", required=True, choices=LEVELS)
    ps.add_argument("--aspiration", required=True, choices=LEVELS)
    ps.add_argument("--threshold", required=True, choices=LEVELS)
    ps.add_argument("--cost", required=True, choices=LEVELS)
    ps.add_argument("--note")
    add_dir(ps)
    ps.set_defaults(func=cmd_score_set)

    p = sub.add_parser("report", help="compute and emit a report")
    p.add_argument("kind", choices=("usecase", "service", "overall"))
    p.add_argument("id", nargs="?")
    p.add_argument("--format", default="table", choices=("table", "json", "csv", "svg"))
    p.add_argument("--chart", default="radar", choices=("radar", "impact", "impact-bars"),
                   help="which chart --format svg renders for a use case")
    p.add_argument("--out", help="write output to a file instead of stdout")
    p.add_argument("--figures", metavar="DIR", help="also render matplotlib PNG figures into DIR")
    add_dir(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("whatif", help="recompute a use case with overrides, without persisting")
    p.add_argument("use_case", metavar="use-case-id")
    p.add_argument("enabler", metavar="enabler-id")
    p.add_argument("overrides", nargs="+", metavar="dimension=level")
    p.add_argument("--format", default="json", choices=("table", "json", "csv", "svg"))
    p.add_argument("--out")
    add_dir(p)
    p.set_defaults(func=cmd_whatif)

    p = sub.add_parser("serve", help="serve the HTTP API (and dashboard, if built)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--bind", default="127.0.0.1")
    p.add_argument("--static", help="directory with the dashboard bundle to serve at /")
    p.add_argument("--dev", action="store_true", help="enable permissive CORS for dashboard development")
    add_dir(p)
    p.set_defaults(func=cmd_serve)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ExitStatus.USAGE if exc.code else ExitStatus.OK
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return ExitStatus.USAGE
    try:
        return int(args.func(args))
    except UsageError as exc:
        _err(f"usage error: {exc}")
        return ExitStatus.USAGE
    except ValidationError as exc:
        for issue in exc.issues:
            _err(f"validation error [{issue.rule}] {issue.entity_id}: {issue.message}")
        return ExitStatus.VALIDATION
    except NotFoundError as exc:
        _err(f"not found: {exc}")
        return ExitStatus.VALIDATION
    except (LockError, StorageError) as exc:
        _err(f"storage error: {exc}")
        return ExitStatus.IO
    except OSError as exc:
        _err(f"i/o error: {exc}")
        return ExitStatus.IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
