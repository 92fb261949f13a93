import pytest
from fastapi.testclient import TestClient

from outbreak_dss.builder import default_measures, prevention_metadata
from outbreak_dss.inference import posterior
from outbreak_dss.scenarios import emit_report, run_scenario, scenario_by_id
from outbreak_dss.service import create_app

ALL_BEHAVIORS_OFF = {
    "HandWash": "No", "HandSanitizer": "No", "AvoidCommonAreas": "No",
    "FaceCover": "No", "WorkspaceCleaning": "No", "BerthCleaning": "No",
    "KeepingDistance": "No",
}


def test_model_descriptor_lists_variables_and_groups(client):
    body = client.get("/model").json()
    assert body["name"] == "roosevelt-outbreak"
    assert len(body["variables"]) == 15
    by_name = {v["name"]: v for v in body["variables"]}
    assert by_name["HasCovid"]["parents"] == [
        "InfectionRate", "PreventionIndex", "Vulnerable"]
    assert by_name["HasCovid"]["group"] == "inferred"
    assert by_name["Symptoms"]["states"] == ["0", "1-3", "4-5", "6-8", ">8"]
    assert by_name["HandWash"]["group"] == "prior"


def test_model_descriptor_carries_exact_prevention_table(client):
    served = client.get("/model").json()["prevention"]
    exact = prevention_metadata(default_measures())
    assert served["order"] == exact["order"]
    assert len(served["cumulative"]) == 128
    # the served table went through the 6-decimal file format once
    for got, want in zip(served["cumulative"], exact["cumulative"]):
        assert got == pytest.approx(want, abs=5e-7)


def test_query_returns_posteriors_for_each_target(client, bundled):
    response = client.post("/query", json={
        "evidence": {"Symptoms": ">8"},
        "targets": ["HasCovid", "Vulnerable"],
    })
    assert response.status_code == 200
    posteriors = response.json()["posteriors"]
    assert set(posteriors) == {"HasCovid", "Vulnerable"}
    direct = posterior(bundled.network, {"Symptoms": ">8"}, "HasCovid")
    assert posteriors["HasCovid"]["Yes"] == pytest.approx(
        direct.prob("Yes"), abs=1e-12)
    assert sum(posteriors["HasCovid"].values()) == pytest.approx(1.0, abs=1e-9)


def test_identical_queries_return_identical_bytes(client):
    body = {"evidence": {"Test": "positive"}, "targets": ["HasCovid"]}
    first = client.post("/query", json=body)
    second = client.post("/query", json=body)
    assert first.content == second.content
    assert first.headers["content-type"] == "application/json"


def test_model_bytes_stable_across_app_instances(tmp_path):
    contents = []
    for k in range(2):
        app = create_app(session_path=tmp_path / f"s{k}.jsonl")
        with TestClient(app) as client:
            contents.append(client.get("/model").content)
    assert contents[0] == contents[1]


def test_query_error_codes(client):
    cases = [
        ({"evidence": {"Symptoms": "lots"}, "targets": ["HasCovid"]},
         "EVIDENCE_UNKNOWN_STATE"),
        ({"evidence": {"Weather": "bad"}, "targets": ["HasCovid"]},
         "UNKNOWN_VARIABLE"),
        ({"evidence": {}, "targets": ["Mood"]}, "UNKNOWN_VARIABLE"),
        ({"evidence": {"HasCovid": "Yes"}, "targets": ["HasCovid"]},
         "TARGET_IN_EVIDENCE"),
    ]
    for body, code in cases:
        response = client.post("/query", json=body)
        assert response.status_code == 400
        assert response.json()["code"] == code
        assert response.json()["message"]


def test_contradictory_evidence_reports_impossible(client):
    evidence = dict(ALL_BEHAVIORS_OFF, PreventionIndex="2.3")
    response = client.post("/query", json={
        "evidence": evidence, "targets": ["HasCovid"]})
    assert response.status_code == 400
    assert response.json()["code"] == "IMPOSSIBLE_EVIDENCE"


def test_malformed_body_is_a_422_invalid_request(client):
    response = client.post("/query", json={"evidence": {}})
    assert response.status_code == 422
    assert response.json()["code"] == "INVALID_REQUEST"
    response = client.post("/query", json={"targets": "HasCovid"})
    assert response.status_code == 422


def test_risk_endpoint_reproduces_worked_example(client):
    response = client.post("/risk", json={"fpr": 0.01, "fnr": 0.20})
    assert response.status_code == 200
    assert response.json() == {"risk_p": 3.2, "risk_n": 1.01}


def test_risk_endpoint_accepts_custom_impacts(client):
    response = client.post("/risk", json={
        "fpr": 0.5, "fnr": 0.5,
        "impacts": {"undetected": 1, "detected": 1, "quarantined": 1, "cleared": 1},
    })
    assert response.json() == {"risk_p": 1.0, "risk_n": 1.0}


def test_risk_endpoint_rejects_rates_outside_unit_interval(client):
    response = client.post("/risk", json={"fpr": 1.5, "fnr": 0.2})
    assert response.status_code == 400
    assert response.json()["code"] == "RATE_OUT_OF_RANGE"


def test_scenario_run_matches_library_output(client, bundled):
    response = client.post("/scenarios/3/run")
    assert response.status_code == 200
    body = response.json()
    assert body["id"] == 3
    assert body["name"] == "vulnerability-by-status"
    assert body["columns"] == ["has_covid", "computed", "reference", "abs_diff"]
    result = run_scenario(bundled.network, scenario_by_id(3))
    assert body["csv"] == emit_report(result, "csv")
    assert len(body["rows"]) == 3
    first = body["rows"][0]
    assert first[0] == "Yes"
    assert first[1] == pytest.approx(result.rows[0].computed, abs=1e-12)
    assert first[2] == 84.36


def test_unknown_scenario_is_404(client):
    response = client.post("/scenarios/9/run")
    assert response.status_code == 404
    assert response.json()["code"] == "SCENARIO_NOT_FOUND"


def test_session_crud_round_trip(client):
    assert client.get("/sessions").json() == {"sessions": []}

    created = client.post("/sessions", json={
        "label": "ward A", "evidence": {"Symptoms": "4-5"}})
    assert created.status_code == 201
    session = created.json()
    assert session["label"] == "ward A"
    assert session["evidence"] == {"Symptoms": "4-5"}
    sid = session["id"]

    listed = client.get("/sessions").json()["sessions"]
    assert [s["id"] for s in listed] == [sid]
    assert "evidence" not in listed[0]

    fetched = client.get(f"/sessions/{sid}").json()
    assert fetched == session

    updated = client.post(f"/sessions/{sid}", json={"evidence": {"Test": "negative"}})
    assert updated.status_code == 200
    assert updated.json()["evidence"] == {"Test": "negative"}
    assert updated.json()["label"] == "ward A"

    deleted = client.delete(f"/sessions/{sid}")
    assert deleted.status_code == 204
    assert deleted.content == b""
    assert client.get(f"/sessions/{sid}").status_code == 404
    assert client.get(f"/sessions/{sid}").json()["code"] == "SESSION_NOT_FOUND"


def test_session_evidence_is_validated_against_the_model(client):
    response = client.post("/sessions", json={
        "label": "bad", "evidence": {"Symptoms": "many"}})
    assert response.status_code == 400
    assert response.json()["code"] == "EVIDENCE_UNKNOWN_STATE"
    assert client.get("/sessions").json() == {"sessions": []}

    created = client.post("/sessions", json={"label": "ok"}).json()
    response = client.post(f"/sessions/{created['id']}", json={
        "evidence": {"Ghost": "Yes"}})
    assert response.status_code == 400
    assert response.json()["code"] == "UNKNOWN_VARIABLE"


def test_update_and_delete_missing_session_is_404(client):
    assert client.post("/sessions/absent", json={"label": "x"}).status_code == 404
    assert client.delete("/sessions/absent").status_code == 404


def test_unwritable_session_log_maps_to_503(tmp_path):
    blocker = tmp_path / "occupied"
    blocker.write_text("not a directory\n")
    app = create_app(session_path=blocker / "sessions.jsonl")
    with TestClient(app) as client:
        response = client.post("/sessions", json={"label": "x"})
        assert response.status_code == 503
        assert response.json()["code"] == "STORAGE_UNAVAILABLE"


def test_sessions_order_by_modification_time(client):
    ids = [client.post("/sessions", json={"label": str(k)}).json()["id"]
           for k in range(3)]
    client.post(f"/sessions/{ids[0]}", json={"label": "touched"})
    listed = [s["id"] for s in client.get("/sessions").json()["sessions"]]
    assert listed == [ids[1], ids[2], ids[0]]
