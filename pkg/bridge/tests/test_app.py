import pytest
from fastapi.testclient import TestClient

from lm_bridge.app import create_app
from lm_bridge.scoring import MASK_PLACEHOLDER


@pytest.fixture
def masked_client(tiny_masked):
    return TestClient(create_app(tiny_masked))


@pytest.fixture
def auto_client(tiny_autoregressive):
    return TestClient(create_app(tiny_autoregressive))


class TestInfo:
    def test_masked_info(self, masked_client):
        info = masked_client.get("/info").json()
        assert info["model_name"] == "tiny-masked"
        assert info["mode"] == "masked"
        assert info["mask_token"] == "[MASK]"
        assert info["protocol_version"] == 1

    def test_autoregressive_has_no_mask_token(self, auto_client):
        info = auto_client.get("/info").json()
        assert info["mode"] == "autoregressive"
        assert info["mask_token"] is None


class TestScoreEndpoint:
    def test_empty_sentence_list_is_400(self, masked_client):
        resp = masked_client.post("/score", json={"sentences": []})
        assert resp.status_code == 400

    def test_empty_sentence_is_400(self, masked_client):
        resp = masked_client.post("/score", json={"sentences": ["ok", ""]})
        assert resp.status_code == 400

    def test_wrong_mode_is_400(self, masked_client):
        resp = masked_client.post(
            "/score", json={"sentences": ["word"], "mode": "autoregressive"})
        assert resp.status_code == 400

    def test_placeholder_without_mask_token_is_422(self, auto_client):
        resp = auto_client.post("/score", json={
            "sentences": [f"a {MASK_PLACEHOLDER} b"],
            "replace_placeholder": True,
        })
        assert resp.status_code == 422

    def test_scores_align_with_request_order(self, masked_client):
        sentences = ["word is to language", "cat", "word is to language"]
        body = masked_client.post("/score", json={"sentences": sentences}).json()
        scores = body["scores"]
        assert len(scores) == 3
        assert scores[0] == scores[2]  # duplicates score identically
        assert scores[0] != scores[1]

    def test_shuffled_duplicate_batch_preserves_order(self, auto_client):
        base = ["note is to music", "king queen", "cat dog tree"]
        first = auto_client.post("/score", json={"sentences": base}).json()["scores"]
        shuffled = [base[2], base[0], base[1], base[0]]
        second = auto_client.post("/score", json={"sentences": shuffled}).json()["scores"]
        assert second[0] == first[2]
        assert second[1] == first[0] == second[3]
        assert second[2] == first[1]

    def test_repeated_identical_batches_bitwise_identical(self, masked_client):
        payload = {"sentences": ["word is to language as note is to music",
                                 "paris is to france as rome is to italy"]}
        a = masked_client.post("/score", json=payload).json()["scores"]
        b = masked_client.post("/score", json=payload).json()["scores"]
        assert [r["perplexity"] for r in a] == [r["perplexity"] for r in b]
        assert [r["token_count"] for r in a] == [r["token_count"] for r in b]

    def test_score_records_carry_both_fields(self, masked_client):
        body = masked_client.post("/score", json={"sentences": ["word music"]}).json()
        (record,) = body["scores"]
        assert set(record) == {"perplexity", "token_count"}
        assert isinstance(record["perplexity"], float)
        assert isinstance(record["token_count"], int)
