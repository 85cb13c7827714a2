import time

import numpy as np
import pytest
from fastapi.testclient import TestClient

from conexsys import ConsultSession, TruthValue, VerdictKind
from conexsys.service import create_app

from helpers import random_kb


@pytest.fixture()
def toy_client(toy):
    return TestClient(create_app(toy))


@pytest.fixture()
def lemonade_client(pretrained):
    return TestClient(create_app(pretrained))


class TestHealth:
    def test_reports_dimensions_and_fingerprint(self, lemonade_client):
        response = lemonade_client.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["inputs"] == 8
        assert body["goals"] == 9
        assert len(body["fingerprint"]) == 12

    def test_no_kb_gives_503(self):
        client = TestClient(create_app(None))
        assert client.get("/health").status_code == 503
        assert client.post("/sessions").status_code == 503


class TestCreateSession:
    def test_fresh_session_all_goals_at_bias(self, lemonade_client, pretrained):
        response = lemonade_client.post("/sessions")
        assert response.status_code == 201
        body = response.json()
        assert len(body["viable"]) == 9
        sums = {entry["goal"]: entry["sum"] for entry in body["viable"]}
        for g, name in enumerate(pretrained.goal_names):
            assert sums[name] == int(pretrained.weights[g, 0])
        assert body["status"] == "needs_input"

    def test_first_question_matches_engine(self, toy_client, toy):
        body = toy_client.post("/sessions").json()
        engine_question = ConsultSession(toy).next_question()
        assert body["question"] == toy.input_names[engine_question]

    def test_ids_are_distinct(self, toy_client):
        first = toy_client.post("/sessions").json()["id"]
        second = toy_client.post("/sessions").json()["id"]
        assert first != second


class TestAnswers:
    def test_worked_flow_concludes_g1(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        mid = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V2", "value": "true"}
        )
        assert mid.status_code == 200
        body = mid.json()
        assert body["status"] == "needs_input"
        assert body["question"] == "V3"
        assert {e["goal"] for e in body["viable"]} == {"G1", "G3"}

        final = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V3", "value": "true"}
        ).json()
        assert final["status"] == "concluded"
        assert final["conclusion"] == "G1"

    def test_unavailable_everywhere_is_unconfirmed(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        toy_client.post(f"/sessions/{sid}/answers", json={"variable": "V2", "value": "true"})
        toy_client.post(f"/sessions/{sid}/answers", json={"variable": "V3", "value": "unavailable"})
        body = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V1", "value": "unavailable"}
        ).json()
        assert body["status"] == "unconfirmed"
        assert body["conclusion"] == "G3"

    def test_double_answer_is_409(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        toy_client.post(f"/sessions/{sid}/answers", json={"variable": "V2", "value": "true"})
        response = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V2", "value": "false"}
        )
        assert response.status_code == 409

    def test_bad_value_token_is_422(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        response = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V2", "value": "perhaps"}
        )
        assert response.status_code == 422

    def test_unknown_variable_is_422(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        response = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V9", "value": "true"}
        )
        assert response.status_code == 422

    def test_unknown_session_is_404(self, toy_client):
        response = toy_client.post(
            "/sessions/deadbeef/answers", json={"variable": "V2", "value": "true"}
        )
        assert response.status_code == 404


class TestSnapshot:
    def test_get_matches_post_response(self, toy_client):
        created = toy_client.post("/sessions").json()
        sid = created["id"]
        after_answer = toy_client.post(
            f"/sessions/{sid}/answers", json={"variable": "V2", "value": "true"}
        ).json()
        snapshot = toy_client.get(f"/sessions/{sid}").json()
        for key in ("status", "question", "conclusion", "viable", "eliminated"):
            assert snapshot[key] == after_answer[key]
        assert snapshot["assignment"]["V2"] == "true"
        assert snapshot["assignment"]["V1"] == "unknown"
        events = [e["event"] for e in snapshot["transcript"]]
        assert events == ["answer", "eliminated"]

    def test_get_unknown_session_is_404(self, toy_client):
        assert toy_client.get("/sessions/idontexist").status_code == 404


class TestJustification:
    def test_rule_for_eliminated_goal(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        toy_client.post(f"/sessions/{sid}/answers", json={"variable": "V2", "value": "true"})
        response = toy_client.get(f"/sessions/{sid}/justification", params={"goal": "G2"})
        assert response.status_code == 200
        body = response.json()
        assert body["literals"] == [{"V2": "true"}]
        assert body["dominated_by"] == "G3"
        assert body["rule"] == "IF V2=True THEN not G2"

    def test_not_eliminated_is_409(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        response = toy_client.get(f"/sessions/{sid}/justification", params={"goal": "G1"})
        assert response.status_code == 409

    def test_unknown_goal_is_422(self, toy_client):
        sid = toy_client.post("/sessions").json()["id"]
        response = toy_client.get(f"/sessions/{sid}/justification", params={"goal": "G9"})
        assert response.status_code == 422


class TestPresets:
    def test_presets_apply_to_every_session(self, toy):
        client = TestClient(
            create_app(toy, presets=[(1, TruthValue.TRUE)])
        )
        body = client.post("/sessions").json()
        assert body["question"] == "V3"
        assert body["assignment"]["V2"] == "true"


class TestCors:
    def test_configured_origin_is_allowed(self, toy):
        client = TestClient(create_app(toy, cors_origins=["http://ui.example"]))
        response = client.get("/health", headers={"Origin": "http://ui.example"})
        assert response.headers["access-control-allow-origin"] == "http://ui.example"

    def test_preflight_allows_post(self, toy):
        client = TestClient(create_app(toy, cors_origins=["*"]))
        response = client.options(
            "/sessions",
            headers={
                "Origin": "http://anywhere.example",
                "Access-Control-Request-Method": "POST",
            },
        )
        assert response.status_code == 200


class TestExpiry:
    def test_idle_sessions_expire(self, toy):
        client = TestClient(create_app(toy, session_timeout=0.05))
        sid = client.post("/sessions").json()["id"]
        assert client.get(f"/sessions/{sid}").status_code == 200
        time.sleep(0.1)
        assert client.get(f"/sessions/{sid}").status_code == 404


class TestEngineParity:
    def test_random_walks_match_direct_engine(self):
        rng = np.random.default_rng(2718)
        status_map = {
            VerdictKind.CONCLUDED: "concluded",
            VerdictKind.NEEDS_INPUT: "needs_input",
            VerdictKind.UNCONFIRMED: "unconfirmed",
        }
        for _ in range(15):
            kb = random_kb(rng, int(rng.integers(2, 6)), int(rng.integers(1, 6)))
            client = TestClient(create_app(kb))
            session = ConsultSession(kb)
            sid = client.post("/sessions").json()["id"]
            order = rng.permutation(kb.n_inputs)
            for k in order:
                token = rng.choice(["true", "false", "unavailable"])
                http_body = client.post(
                    f"/sessions/{sid}/answers",
                    json={"variable": kb.input_names[k], "value": str(token)},
                ).json()
                verdict = session.answer(int(k), TruthValue(str(token)))
                assert http_body["status"] == status_map[verdict.kind]
                assert {e["goal"] for e in http_body["viable"]} == {
                    kb.goal_names[g] for g in session.viable
                }
                if verdict.kind is VerdictKind.CONCLUDED:
                    assert http_body["conclusion"] == kb.goal_names[verdict.goal]
                    break
