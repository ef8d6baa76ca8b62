"""Static taxonomy of C-ITS services, use cases, enablers, and scenarios.

The catalog is the reference data every other module scores against. It is
immutable after load; edits happen by loading a replacement version. Ships
with a built-in catalog covering the C-ROADS service list and the Road Works
Warning breakdown piloted in Nordic Way 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import cached_property

from .errors import NotFoundError, ValidationError, ValidationIssue


class Category(str, Enum):
    """Infrastructure category of an enabler. Closed set; radar geometry depends on it."""

    PHYSICAL = "physical"
    OPERATION = "operation"
    DIGITAL = "digital"
    CONNECTIVITY = "connectivity"
    STANDARD = "standard"

    @property
    def label(self) -> str:
        return self.value.capitalize()


# Fixed axis/rollup order used everywhere categories are enumerated.
CATEGORY_ORDER: tuple[Category, ...] = tuple(Category)

PROVIDER_TAGS = ("public", "private")


@dataclass(frozen=True)
class Enabler:
    """Lowest building block: one infrastructure element required by a use case."""

    id: str
    name: str
    description: str
    category: Category

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "description": self.description,
            "category": self.category.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Enabler":
        return cls(
            id=d["id"],
            name=d["name"],
            description=d.get("description", ""),
            category=Category(d["category"]),
        )


@dataclass(frozen=True)
class FlowStep:
    index: int
    actor: str
    action: str
    required_enablers: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "actor": self.actor,
            "action": self.action,
            "required_enablers": list(self.required_enablers),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FlowStep":
        return cls(
            index=int(d["index"]),
            actor=d["actor"],
            action=d.get("action", ""),
            required_enablers=tuple(d.get("required_enablers", ())),
        )


@dataclass(frozen=True)
class MessageFlow:
    """Message path from triggering event to end user; each step names its enablers."""

    id: str
    description: str
    steps: tuple[FlowStep, ...]

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "steps": [s.to_dict() for s in self.steps],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "MessageFlow":
        return cls(
            id=d["id"],
            description=d.get("description", ""),
            steps=tuple(FlowStep.from_dict(s) for s in d.get("steps", ())),
        )


@dataclass(frozen=True)
class UseCase:
    id: str
    service_id: str
    name: str
    flow_ids: tuple[str, ...] = ()
    default_enablers: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "service_id": self.service_id,
            "name": self.name,
            "flows": list(self.flow_ids),
            "default_enablers": list(self.default_enablers),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "UseCase":
        return cls(
            id=d["id"],
            service_id=d["service_id"],
            name=d["name"],
            flow_ids=tuple(d.get("flows", ())),
            default_enablers=tuple(d.get("default_enablers", ())),
        )


@dataclass(frozen=True)
class Service:
    """A clustering of use cases with a shared objective (e.g. road works awareness).

    Services the source taxonomy names without enumerating use cases are kept
    as stubs flagged ``incomplete``; the non-empty use-case rule is waived for
    those.
    """

    id: str
    name: str
    use_cases: tuple[str, ...] = ()
    incomplete: bool = False

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "use_cases": list(self.use_cases),
            "incomplete": self.incomplete,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Service":
        return cls(
            id=d["id"],
            name=d["name"],
            use_cases=tuple(d.get("use_cases", ())),
            incomplete=bool(d.get("incomplete", False)),
        )


@dataclass(frozen=True)
class Scenario:
    """One implementation variant of a use case: the enabler subset it needs.

    provider_map tags enablers as publicly or privately provided; metadata
    only, scores do not consume it.
    """

    id: str
    use_case_id: str
    name: str
    enabler_ids: tuple[str, ...]
    provider_map: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "use_case_id": self.use_case_id,
            "name": self.name,
            "enabler_ids": list(self.enabler_ids),
            "provider_map": dict(self.provider_map),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Scenario":
        return cls(
            id=d["id"],
            use_case_id=d["use_case_id"],
            name=d["name"],
            enabler_ids=tuple(d.get("enabler_ids", ())),
            provider_map=dict(d.get("provider_map", {})),
        )


@dataclass(frozen=True)
class Catalog:
    version: str
    services: tuple[Service, ...] = ()
    use_cases: tuple[UseCase, ...] = ()
    enablers: tuple[Enabler, ...] = ()
    scenarios: tuple[Scenario, ...] = ()
    flows: tuple[MessageFlow, ...] = ()

    # Lookup indices; first entry wins on duplicate ids (duplicates are
    # reported by validate_catalog, not silently resolved here).
    @cached_property
    def _services(self) -> dict[str, Service]:
        return _index(self.services)

    @cached_property
    def _use_cases(self) -> dict[str, UseCase]:
        return _index(self.use_cases)

    @cached_property
    def _enablers(self) -> dict[str, Enabler]:
        return _index(self.enablers)

    @cached_property
    def _scenarios(self) -> dict[str, Scenario]:
        return _index(self.scenarios)

    @cached_property
    def _flows(self) -> dict[str, MessageFlow]:
        return _index(self.flows)

    def service(self, service_id: str) -> Service:
        return _lookup(self._services, service_id, "service")

    def use_case(self, use_case_id: str) -> UseCase:
        return _lookup(self._use_cases, use_case_id, "use case")

    def enabler(self, enabler_id: str) -> Enabler:
        return _lookup(self._enablers, enabler_id, "enabler")

    def scenario(self, scenario_id: str) -> Scenario:
        return _lookup(self._scenarios, scenario_id, "scenario")

    def flow(self, flow_id: str) -> MessageFlow:
        return _lookup(self._flows, flow_id, "flow")

    def has_enabler(self, enabler_id: str) -> bool:
        return enabler_id in self._enablers

    def use_case_flows(self, use_case_id: str) -> list[MessageFlow]:
        return [self.flow(fid) for fid in self.use_case(use_case_id).flow_ids]

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "services": [s.to_dict() for s in self.services],
            "use_cases": [u.to_dict() for u in self.use_cases],
            "enablers": [e.to_dict() for e in self.enablers],
            "scenarios": [s.to_dict() for s in self.scenarios],
            "flows": [f.to_dict() for f in self.flows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Catalog":
        try:
            return cls(
                version=d["version"],
                services=tuple(Service.from_dict(x) for x in d.get("services", ())),
                use_cases=tuple(UseCase.from_dict(x) for x in d.get("use_cases", ())),
                enablers=tuple(Enabler.from_dict(x) for x in d.get("enablers", ())),
                scenarios=tuple(Scenario.from_dict(x) for x in d.get("scenarios", ())),
                flows=tuple(MessageFlow.from_dict(x) for x in d.get("flows", ())),
            )
        except KeyError as exc:
            raise ValidationError(f"catalog document missing key {exc}") from exc
        except ValueError as exc:
            raise ValidationError(f"catalog document malformed: {exc}") from exc


def _index(entities) -> dict:
    out = {}
    for e in entities:
        out.setdefault(e.id, e)
    return out


def _lookup(index: dict, key: str, kind: str):
    try:
        return index[key]
    except KeyError:
        raise NotFoundError(f"unknown {kind} id '{key}'") from None


def stable_json(doc: dict) -> str:
    """Serialize a JSON document byte-stably: sorted keys, 2-space indent, LF."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def catalog_to_json(catalog: Catalog) -> str:
    return stable_json(catalog.to_dict())


def catalog_from_json(text: str) -> Catalog:
    return Catalog.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# Operations

def trace_enablers(flow: MessageFlow, catalog: Catalog) -> list[str]:
    """Deduplicated union of required enablers over the flow's steps.

    Order follows first occurrence, i.e. the point in the message path where
    an enabler is first needed. This list is the enabler set of the use case
    for that flow.
    """
    if not flow.steps:
        raise ValidationError(
            [ValidationIssue(flow.id, "empty-steps", f"flow '{flow.id}' has no steps")]
        )
    seen: dict[str, None] = {}
    for step in flow.steps:
        for eid in step.required_enablers:
            if not catalog.has_enabler(eid):
                raise ValidationError(
                    [
                        ValidationIssue(
                            flow.id,
                            "dangling-reference",
                            f"flow '{flow.id}' step {step.index} requires unknown enabler '{eid}'",
                        )
                    ]
                )
            seen.setdefault(eid)
    return list(seen)


def trace_use_case_enablers(use_case: UseCase, catalog: Catalog) -> list[str]:
    """Trace over the concatenation of all the use case's flows."""
    seen: dict[str, None] = {}
    for fid in use_case.flow_ids:
        for eid in trace_enablers(catalog.flow(fid), catalog):
            seen.setdefault(eid)
    return list(seen)


def resolve_scenario(scenario: Scenario, catalog: Catalog) -> list[Enabler]:
    """Full enabler records for the scenario, in scenario order."""
    records = []
    for eid in scenario.enabler_ids:
        if not catalog.has_enabler(eid):
            raise ValidationError(
                [
                    ValidationIssue(
                        scenario.id,
                        "dangling-reference",
                        f"scenario '{scenario.id}' references unknown enabler '{eid}'",
                    )
                ]
            )
        records.append(catalog.enabler(eid))
    return records


def effective_enabler_ids(
    catalog: Catalog, use_case_id: str, scenario_id: str | None = None
) -> tuple[str, ...]:
    """Enabler universe for scoring a use case.

    The active scenario's list when one is selected, otherwise the use case's
    default enablers (traced from its flows).
    """
    if scenario_id is not None:
        return catalog.scenario(scenario_id).enabler_ids
    return catalog.use_case(use_case_id).default_enablers


def validate_catalog(catalog: Catalog) -> list[ValidationIssue]:
    """Check every referential-integrity and shape rule; empty list means valid."""
    issues: list[ValidationIssue] = []

    def issue(entity_id: str, rule: str, message: str) -> None:
        issues.append(ValidationIssue(entity_id, rule, message))

    for kind, entities in (
        ("service", catalog.services),
        ("use case", catalog.use_cases),
        ("enabler", catalog.enablers),
        ("scenario", catalog.scenarios),
        ("flow", catalog.flows),
    ):
        seen: set[str] = set()
        for e in entities:
            if e.id in seen:
                issue(e.id, "duplicate-id", f"{kind} id '{e.id}' appears more than once")
            seen.add(e.id)

    use_case_owners: dict[str, str] = {}
    for svc in catalog.services:
        if not svc.use_cases and not svc.incomplete:
            issue(svc.id, "empty-use-cases", f"service '{svc.id}' has no use cases")
        listed: set[str] = set()
        for ucid in svc.use_cases:
            if ucid in listed:
                issue(svc.id, "duplicate-id", f"service '{svc.id}' lists use case '{ucid}' twice")
            listed.add(ucid)
            if ucid not in catalog._use_cases:
                issue(svc.id, "dangling-reference", f"service '{svc.id}' lists unknown use case '{ucid}'")
            elif ucid in use_case_owners:
                issue(
                    ucid,
                    "duplicate-membership",
                    f"use case '{ucid}' is listed by services '{use_case_owners[ucid]}' and '{svc.id}'",
                )
            else:
                use_case_owners[ucid] = svc.id

    for uc in catalog.use_cases:
        if uc.service_id not in catalog._services:
            issue(uc.id, "dangling-reference", f"use case '{uc.id}' names unknown service '{uc.service_id}'")
        elif uc.id not in catalog.service(uc.service_id).use_cases:
            issue(
                uc.id,
                "membership-mismatch",
                f"use case '{uc.id}' names service '{uc.service_id}' which does not list it",
            )
        for fid in uc.flow_ids:
            if fid not in catalog._flows:
                issue(uc.id, "dangling-reference", f"use case '{uc.id}' references unknown flow '{fid}'")
        for eid in uc.default_enablers:
            if eid not in catalog._enablers:
                issue(uc.id, "dangling-reference", f"use case '{uc.id}' defaults unknown enabler '{eid}'")
        # default_enablers must equal the traced union when flows are present
        if uc.flow_ids and all(fid in catalog._flows for fid in uc.flow_ids):
            try:
                traced = trace_use_case_enablers(uc, catalog)
            except ValidationError:
                traced = None  # dangling step enablers reported via the flow checks
            if traced is not None and tuple(traced) != tuple(uc.default_enablers):
                issue(
                    uc.id,
                    "default-enablers-mismatch",
                    f"use case '{uc.id}' default_enablers do not match its traced flows",
                )

    for flow in catalog.flows:
        if not flow.steps:
            issue(flow.id, "empty-steps", f"flow '{flow.id}' has no steps")
        if [s.index for s in flow.steps] != list(range(1, len(flow.steps) + 1)):
            issue(flow.id, "step-index", f"flow '{flow.id}' step indices are not contiguous from 1")
        for step in flow.steps:
            for eid in step.required_enablers:
                if eid not in catalog._enablers:
                    issue(
                        flow.id,
                        "dangling-reference",
                        f"flow '{flow.id}' step {step.index} requires unknown enabler '{eid}'",
                    )

    for sc in catalog.scenarios:
        if not sc.enabler_ids:
            issue(sc.id, "empty-enabler-ids", f"scenario '{sc.id}' selects no enablers")
        if sc.use_case_id not in catalog._use_cases:
            issue(sc.id, "dangling-reference", f"scenario '{sc.id}' names unknown use case '{sc.use_case_id}'")
        for eid in sc.enabler_ids:
            if eid not in catalog._enablers:
                issue(sc.id, "dangling-reference", f"scenario '{sc.id}' references unknown enabler '{eid}'")
        for eid, tag in sc.provider_map.items():
            if eid not in sc.enabler_ids:
                issue(sc.id, "provider-map-key", f"scenario '{sc.id}' tags '{eid}' which is not in its enabler list")
            if tag not in PROVIDER_TAGS:
                issue(sc.id, "provider-tag-invalid", f"scenario '{sc.id}' uses provider tag '{tag}'")

    return issues


# ---------------------------------------------------------------------------
# Built-in catalog (C-ROADS service list; RWW breakdown from the Nordic Way 2
# road works warning pilot).

BUILTIN_VERSION = "croads-2023"

_ENABLERS = (
    Enabler(
        "etsi-en-302-637-3",
        "ETSI EN 302 637-3 for DENM messaging",
        "Standard for interoperability V2X LTE",
        Category.STANDARD,
    ),
    Enabler(
        "etsi-ts-102-894-2",
        "ETSI TS 102 894-2",
        "Standard for sharing",
        Category.STANDARD,
    ),
    Enabler(
        "stationary-rsu",
        "Stationary RSU (R-ITS-S)",
        "Stationary roadside unit",
        Category.PHYSICAL,
    ),
    Enabler(
        "mobile-rsu",
        "Mobile RSU (V-ITS-S)",
        "TMA vehicle",
        Category.PHYSICAL,
    ),
    Enabler(
        "response-plan",
        "Response plan",
        "NRA procedure for triggering information exchange",
        Category.OPERATION,
    ),
    Enabler(
        "r-its-s-system-profile",
        "R-ITS-S System Profile",
        "System profile",
        Category.DIGITAL,
    ),
    Enabler(
        "v-its-s-system-profile",
        "V-ITS-S system profile",
        "System profile",
        Category.DIGITAL,
    ),
    Enabler(
        "cellular-connectivity",
        "Cellular connectivity",
        "Information from RSU to cloud",
        Category.CONNECTIVITY,
    ),
    Enabler(
        "short-range-its-g5",
        "Short-range ITS-G5",
        "Information from TMA to RSU",
        Category.CONNECTIVITY,
    ),
)

# Enabler ids in the category-grouped order used by scoring tables.
TABLE_ENABLER_ORDER = tuple(e.id for e in _ENABLERS)

NORDIC_WAY_FLOW_ID = "nordic-way-rww"

_NORDIC_WAY_FLOW = MessageFlow(
    id=NORDIC_WAY_FLOW_ID,
    description=(
        "Road works warning message path from the works vehicle to the driver, "
        "as piloted in Nordic Way 2."
    ),
    steps=(
        FlowStep(
            1,
            "TMA vehicle",
            "Works crew activates the warning unit mounted on the attenuator vehicle "
            "per the response plan; the unit issues the warning as a DENM message over "
            "short-range ITS-G5.",
            ("response-plan", "mobile-rsu", "v-its-s-system-profile", "etsi-en-302-637-3", "short-range-its-g5"),
        ),
        FlowStep(
            2,
            "RSU",
            "Roadside unit receives the short-range warning and forwards it in DENM and "
            "DATEX II format towards the interchange node.",
            ("stationary-rsu", "r-its-s-system-profile", "etsi-en-302-637-3", "etsi-ts-102-894-2", "cellular-connectivity"),
        ),
        FlowStep(
            3,
            "Interchange node",
            "Relays the message to the OEM cloud.",
            ("etsi-ts-102-894-2", "cellular-connectivity"),
        ),
        FlowStep(
            4,
            "Traffic authority",
            "Publishes roadwork information messages to the OEM clouds in DATEX II format.",
            ("response-plan", "etsi-ts-102-894-2", "cellular-connectivity"),
        ),
        FlowStep(
            5,
            "OEM cloud",
            "Delivers the warning to subscribed vehicles.",
            ("cellular-connectivity",),
        ),
    ),
)

# First-occurrence order of enablers along the Nordic Way message path.
FLOW_ENABLER_ORDER = (
    "response-plan",
    "mobile-rsu",
    "v-its-s-system-profile",
    "etsi-en-302-637-3",
    "short-range-its-g5",
    "stationary-rsu",
    "r-its-s-system-profile",
    "etsi-ts-102-894-2",
    "cellular-connectivity",
)

_RWW_USE_CASES = (
    UseCase("RWW-LC", "RWW", "Lane closure"),
    UseCase("RWW-RC", "RWW", "Road closure"),
    UseCase(
        "RWW-RM",
        "RWW",
        "Road works - Mobile",
        flow_ids=(NORDIC_WAY_FLOW_ID,),
        default_enablers=FLOW_ENABLER_ORDER,
    ),
    UseCase("RWW-WM", "RWW", "Winter maintenance"),
)

_SERVICES = (
    Service("IVS", "In-Vehicle Signage", incomplete=True),
    Service("HLN", "Hazardous Location Notification", incomplete=True),
    Service("RWW", "Road Works Warning", use_cases=tuple(u.id for u in _RWW_USE_CASES)),
    Service("SI", "Signalized Intersections", incomplete=True),
    Service("AVG", "Automated Vehicle Guidance", incomplete=True),
    Service("PVD", "Probe Vehicle Data", incomplete=True),
)


def builtin_croads_catalog() -> Catalog:
    """The built-in taxonomy: six services, the four RWW use cases, the nine
    RWW enablers, and the Nordic Way message flow on the mobile road works
    use case. Services whose use cases the source taxonomy does not enumerate
    are stubs flagged incomplete."""
    return Catalog(
        version=BUILTIN_VERSION,
        services=_SERVICES,
        use_cases=_RWW_USE_CASES,
        enablers=_ENABLERS,
        flows=(_NORDIC_WAY_FLOW,),
    )


def with_demo_use_case(catalog: Catalog) -> Catalog:
    """Extend a catalog with the RWW-demo use case and its pilot scenario.

    RWW-demo mirrors the Nordic Way pilot as a self-contained, scoreable use
    case so a fresh project can start from a fully worked example.
    """
    demo_uc = UseCase(
        "RWW-demo",
        "RWW",
        "Road works warning (Nordic Way pilot demo)",
        flow_ids=(NORDIC_WAY_FLOW_ID,),
        default_enablers=FLOW_ENABLER_ORDER,
    )
    demo_scenario = Scenario(
        id="RWW-demo-nordic-way",
        use_case_id="RWW-demo",
        name="Nordic Way pilot scenario",
        enabler_ids=TABLE_ENABLER_ORDER,
        provider_map={
            "stationary-rsu": "public",
            "mobile-rsu": "private",
            "cellular-connectivity": "private",
        },
    )
    services = tuple(
        replace(s, use_cases=s.use_cases + (demo_uc.id,)) if s.id == "RWW" else s
        for s in catalog.services
    )
    return Catalog(
        version=catalog.version + "+demo",
        services=services,
        use_cases=catalog.use_cases + (demo_uc,),
        enablers=catalog.enablers,
        scenarios=catalog.scenarios + (demo_scenario,),
        flows=catalog.flows,
    )
