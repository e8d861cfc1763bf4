import pytest
from fastapi.testclient import TestClient

from story_frontend.config import FrontendConfig
from story_frontend.server import create_app

NEGATION_TEMPLATES = [
    ("X is close to Y", "X is not close to Y"),
    ("he is happy", "he is not happy"),
    ("the door is open", "the door is never open"),
    ("Bryan is angry", "Bryan is not angry"),
    ("the genie is confined", "the genie is no longer confined"),
    ("she has money", "she has no money"),
    ("they are ready", "they are not ready"),
    ("Jack is injured", "Jack is not injured"),
    ("the lamp glows", "the lamp never glows"),
    ("Hank is alive", "Hank is not alive"),
]


class TestEndpointSanity:
    def test_similarity_identity(self, client):
        for phrase in ("have money", "be close to Jack", "x"):
            response = client.post("/similarity", json={"a": phrase, "b": phrase})
            assert response.status_code == 200
            assert response.json()["score"] == pytest.approx(1.0, abs=1e-3)

    def test_similarity_symmetric(self, client):
        one = client.post("/similarity", json={"a": "have money", "b": "be rich"}).json()
        two = client.post("/similarity", json={"a": "be rich", "b": "have money"}).json()
        assert one["score"] == pytest.approx(two["score"], abs=1e-9)

    def test_nli_negation_templates(self, client):
        contradictions = 0
        for a, b in NEGATION_TEMPLATES:
            response = client.post("/nli", json={"a": a, "b": b})
            assert response.status_code == 200
            if response.json()["label"] == "contradiction":
                contradictions += 1
        assert contradictions >= 9

    def test_nli_entailment_on_equal(self, client):
        body = client.post("/nli", json={"a": "Jack is injured", "b": "Jack is injured"}).json()
        assert body["label"] == "entailment"

    def test_generate_car_repair_has_money_phrase(self, client):
        response = client.post(
            "/generate", json={"event": "X gets X's car repaired", "relation": "xNeed", "k": 6}
        )
        assert response.status_code == 200
        beam = response.json()
        assert any("have money" in item["phrase"] for item in beam)

    def test_generate_scores_normalized_over_beam(self, client):
        beam = client.post(
            "/generate", json={"event": "Bryan hits Jack in the face", "relation": "xNeed", "k": 6}
        ).json()
        assert len(beam) <= 6
        probs = [item["p"] for item in beam]
        assert probs == sorted(probs, reverse=True)
        assert sum(probs) <= 1.0 + 1e-6


class TestErrors:
    def test_malformed_request_is_400(self, client):
        assert client.post("/generate", json={"event": ""}).status_code == 400
        assert client.post("/similarity", json={"a": "x"}).status_code == 400

    def test_unknown_relation_is_400(self, client):
        response = client.post("/generate", json={"event": "x", "relation": "xWant", "k": 3})
        assert response.status_code == 400

    def test_503_before_models_load(self):
        app = create_app(FrontendConfig())
        bare = TestClient(app)  # no lifespan: startup never runs
        response = bare.post("/similarity", json={"a": "x", "b": "y"})
        assert response.status_code == 503

    def test_health(self, client):
        assert client.get("/health").json() == {"ready": True}


def test_config_validation():
    with pytest.raises(ValueError):
        FrontendConfig(beam_size=2)
    with pytest.raises(ValueError):
        FrontendConfig(port=0)
