from __future__ import annotations

import json

import pytest
from fastapi.testclient import TestClient

from conftest import dir_fingerprint
from crf.api import create_app


@pytest.fixture
def client(demo_dir):
    return TestClient(create_app(demo_dir))


def _assessment(enabler_id="response-plan", **kw):
    doc = {
        "enabler_id": enabler_id,
        "importance": "high",
        "readiness": "low",
        "aspiration": "high",
        "threshold": "low",
        "cost": "low",
    }
    doc.update(kw)
    return doc


class TestReads:
    def test_catalog(self, client):
        r = client.get("/api/catalog")
        assert r.status_code == 200
        doc = r.json()
        assert doc["schema_version"] == "1"
        assert len(doc["enablers"]) == 9
        assert len(doc["services"]) == 6

    def test_project(self, client):
        r = client.get("/api/project")
        assert r.status_code == 200
        assert r.json()["considered_use_cases"] == ["RWW-demo"]

    def test_assessments(self, client):
        r = client.get("/api/assessments/RWW-demo")
        assert r.status_code == 200
        assert len(r.json()["assessments"]) == 9

    def test_usecase_report_totals(self, client):
        r = client.get("/api/reports/usecase/RWW-demo")
        assert r.status_code == 200
        doc = r.json()
        assert doc["total_readiness"] == pytest.approx(5.8)
        assert doc["display"]["total_readiness"] == "5.8"
        assert doc["feasibility"]["feasible"] is True
        assert len(doc["radar"]) == 3

    def test_service_report(self, client):
        r = client.get("/api/reports/service/RWW")
        assert r.status_code == 200
        assert r.json()["service_progress"] == pytest.approx(5.8 / 8.7)

    def test_overall_report(self, client):
        r = client.get("/api/reports/overall")
        assert r.status_code == 200
        doc = r.json()
        assert doc["gap"] == pytest.approx(2.9, abs=1e-9)
        assert doc["display"]["gap"] == "2.9"

    def test_reads_leave_directory_untouched(self, client, demo_dir):
        before = dir_fingerprint(demo_dir)
        for url in (
            "/api/catalog",
            "/api/project",
            "/api/assessments/RWW-demo",
            "/api/reports/usecase/RWW-demo",
            "/api/reports/service/RWW",
            "/api/reports/overall",
            "/api/snapshots",
        ):
            assert client.get(url).status_code == 200
        assert dir_fingerprint(demo_dir) == before

    def test_unknown_ids_are_404(self, client):
        for url in (
            "/api/reports/usecase/RWW-XX",
            "/api/reports/service/XYZ",
            "/api/assessments/RWW-XX",
        ):
            r = client.get(url)
            assert r.status_code == 404
            assert r.json()["code"] == "not-found"


class TestPutAssessments:
    def test_put_then_get_round_trips(self, client):
        r = client.get("/api/assessments/RWW-demo")
        items = r.json()["assessments"]
        r = client.put("/api/assessments/RWW-demo", json=items)
        assert r.status_code == 200
        again = client.get("/api/assessments/RWW-demo").json()["assessments"]
        assert again == items

    def test_put_returns_recomputed_sheet(self, client):
        items = client.get("/api/assessments/RWW-demo").json()["assessments"]
        for item in items:
            if item["enabler_id"] == "response-plan":
                item["readiness"] = "high"
        r = client.put("/api/assessments/RWW-demo", json=items)
        assert r.status_code == 200
        sheet = r.json()
        assert sheet["display"]["total_readiness"] == "7.0"
        assert sheet["categories"]["operation"]["readiness"] == 9

    def test_put_persists(self, client, demo_dir):
        items = client.get("/api/assessments/RWW-demo").json()["assessments"]
        for item in items:
            item["aspiration"] = "medium"
        client.put("/api/assessments/RWW-demo", json=items)
        stored = json.loads((demo_dir / "project.json").read_text())
        assert all(a["aspiration"] == "medium" for a in stored["assessments"]["RWW-demo"])

    def test_importance_none_is_400(self, client):
        r = client.put(
            "/api/assessments/RWW-demo", json=[_assessment(importance="none")]
        )
        assert r.status_code == 400
        assert r.json()["code"] == "importance-none-forbidden"

    def test_enabler_outside_scenario_is_400(self, client):
        r = client.put("/api/assessments/RWW-demo", json=[_assessment("made-up-enabler")])
        assert r.status_code == 400
        assert any(e["rule"] == "enabler-not-in-scenario" for e in r.json()["errors"])

    def test_unknown_use_case_is_404(self, client):
        r = client.put("/api/assessments/RWW-XX", json=[_assessment()])
        assert r.status_code == 404

    def test_non_list_body_is_400(self, client):
        r = client.put("/api/assessments/RWW-demo", json={"assessments": "zap"})
        assert r.status_code == 400

    def test_invalid_json_is_400(self, client):
        r = client.put(
            "/api/assessments/RWW-demo",
            content=b"{nope",
            headers={"content-type": "application/json"},
        )
        assert r.status_code == 400

    def test_lock_conflict_is_409(self, client, demo_dir):
        (demo_dir / ".lock").write_text("777\n")
        items = client.get("/api/assessments/RWW-demo").json()["assessments"]
        r = client.put("/api/assessments/RWW-demo", json=items)
        assert r.status_code == 409
        assert r.json()["code"] == "lock-conflict"


class TestWhatIf:
    def test_empty_overrides_matches_get_report(self, client):
        get_doc = client.get("/api/reports/usecase/RWW-demo").json()
        post_doc = client.post(
            "/api/whatif", json={"use_case_id": "RWW-demo", "overrides": []}
        ).json()
        post_doc.pop("overrides_applied")
        assert post_doc == get_doc

    def test_overlay_recomputes(self, client):
        r = client.post(
            "/api/whatif",
            json={
                "use_case_id": "RWW-demo",
                "overrides": [
                    {"enabler_id": "response-plan", "dimension": "readiness", "level": "high"}
                ],
            },
        )
        assert r.status_code == 200
        doc = r.json()
        assert doc["total_readiness"] == pytest.approx(7.0, abs=1e-12)
        assert doc["overrides_applied"] == 1

    def test_leaves_directory_byte_identical(self, client, demo_dir):
        before = dir_fingerprint(demo_dir)
        client.post(
            "/api/whatif",
            json={
                "use_case_id": "RWW-demo",
                "overrides": [
                    {"enabler_id": "response-plan", "dimension": "readiness", "level": "high"},
                    {"enabler_id": "mobile-rsu", "dimension": "cost", "level": "none"},
                ],
            },
        )
        assert dir_fingerprint(demo_dir) == before

    def test_missing_use_case_id_is_400(self, client):
        assert client.post("/api/whatif", json={"overrides": []}).status_code == 400

    def test_importance_none_is_400(self, client):
        r = client.post(
            "/api/whatif",
            json={
                "use_case_id": "RWW-demo",
                "overrides": [
                    {"enabler_id": "response-plan", "dimension": "importance", "level": "none"}
                ],
            },
        )
        assert r.status_code == 400
        assert r.json()["code"] == "importance-none-forbidden"


class TestSnapshots:
    def test_create_list_diff(self, client):
        r = client.post("/api/snapshots", json={"label": "baseline"})
        assert r.status_code == 201
        a = r.json()["id"]
        items = client.get("/api/assessments/RWW-demo").json()["assessments"]
        for item in items:
            if item["enabler_id"] == "response-plan":
                item["readiness"] = "medium"
        client.put("/api/assessments/RWW-demo", json=items)
        r = client.post("/api/snapshots", json={"label": "after-upgrade"})
        assert r.status_code == 201
        b = r.json()["id"]

        listing = client.get("/api/snapshots").json()["snapshots"]
        assert {s["id"] for s in listing} >= {a, b}

        diff = client.get("/api/snapshots/diff", params={"a": a, "b": b}).json()
        assert len(diff["changes"]) == 1
        assert diff["changes"][0]["dimension"] == "readiness"
        assert diff["use_case_deltas"]["RWW-demo"]["totals"]["readiness"] == pytest.approx(0.6)

    def test_identical_diff_is_empty(self, client):
        a = client.post("/api/snapshots", json={"label": "one"}).json()["id"]
        import time

        time.sleep(1.1)  # ids carry second precision
        b = client.post("/api/snapshots", json={"label": "two"}).json()["id"]
        diff = client.get("/api/snapshots/diff", params={"a": a, "b": b}).json()
        assert diff["changes"] == []
        assert diff["use_case_deltas"] == {}

    def test_missing_label_is_400(self, client):
        assert client.post("/api/snapshots", json={}).status_code == 400

    def test_unknown_snapshot_is_404(self, client):
        r = client.get(
            "/api/snapshots/diff", params={"a": "20000101T000000Z-x", "b": "20000101T000000Z-y"}
        )
        assert r.status_code == 404


class TestStorageFailures:
    def test_corrupt_project_is_500(self, client, demo_dir):
        (demo_dir / "project.json").write_text("{broken")
        r = client.get("/api/project")
        assert r.status_code == 500
        assert r.json()["code"] == "io-error"
