import itertools
import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from analogykit.datasets import AnalogyProblem, Dataset, WordPair
from analogykit.scorers import ScorerIdentity, SentenceScore, check_sentences, clamp_perplexity


def make_problem(pid: str, n: int, word_iter) -> AnalogyProblem:
    """Problem whose words are all globally distinct (so every rendered
    sentence in the 24-permutation grid is unique)."""
    query = WordPair(next(word_iter), next(word_iter))
    candidates = tuple(WordPair(next(word_iter), next(word_iter)) for _ in range(n))
    return AnalogyProblem(id=pid, query=query, candidates=candidates, answer=0, group="g")


def word_stream(prefix: str = "w"):
    for i in itertools.count():
        yield f"{prefix}{i:04d}"


@pytest.fixture
def words():
    return word_stream()


@pytest.fixture
def problem3(words):
    return make_problem("p3", 3, words)


@pytest.fixture
def problem4(words):
    return make_problem("p4", 4, words)


def make_dataset(name: str, split: str, n_problems: int, n_candidates: int = 4,
                 prefix: str = "d") -> Dataset:
    it = word_stream(prefix)
    problems = [make_problem(f"{prefix}{i}", n_candidates, it) for i in range(n_problems)]
    return Dataset(name, split, problems)


class HashScorer:
    """Deterministic pseudo-random perplexities derived from the
    sentence text; counts how many sentences it actually scores."""

    def __init__(self, name="hash", salt=0):
        self.identity = ScorerIdentity("constant", f"{name}-{salt}", "autoregressive")
        self.salt = salt
        self.calls = 0

    def score_sentences(self, sentences):
        check_sentences(sentences)
        self.calls += len(sentences)
        out = []
        for s in sentences:
            h = (hash((self.salt, s)) % 9973) + 1
            out.append(SentenceScore(s, clamp_perplexity(1.0 + h / 100.0), max(1, len(s.split()))))
        return out


class GoldLeakScorer:
    """Assigns the lowest perplexity exactly to sentences containing a
    gold marker substring."""

    def __init__(self, marker: str):
        self.identity = ScorerIdentity("constant", f"goldleak-{marker}", "autoregressive")
        self.marker = marker

    def score_sentences(self, sentences):
        check_sentences(sentences)
        return [
            SentenceScore(s, 1.0 if self.marker in s else 50.0, max(1, len(s.split())))
            for s in sentences
        ]


# ---------------------------------------------------------------------------
# Stub bridge server for remote-scorer tests
# ---------------------------------------------------------------------------


class _StubHandler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"

    def log_message(self, *args):  # silence test output
        pass

    def _send(self, code, payload):
        body = json.dumps(payload).encode("utf-8")
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def do_GET(self):
        if self.path == "/info":
            self._send(200, self.server.info_payload)
        else:
            self._send(404, {"error": "not found"})

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        request = json.loads(self.rfile.read(length) or b"{}")
        if self.path != "/score":
            self._send(404, {"error": "not found"})
            return
        sentences = request.get("sentences")
        if not sentences:
            self._send(400, {"error": "empty sentence list"})
            return
        self.server.requests.append(request)
        if self.server.drop_last_score:
            sentences = sentences[:-1]
        # (len+1)/3 is a repeating binary fraction: exercises all 53
        # mantissa bits through the JSON round trip
        scores = [
            {"perplexity": (len(s) + 1) / 3.0, "token_count": max(1, len(s.split()))}
            for s in sentences
        ]
        self._send(200, {"scores": scores})


class StubBridge:
    """Minimal in-process server speaking the bridge wire protocol."""

    def __init__(self, protocol_version=1, mode="autoregressive", drop_last_score=False):
        self.server = ThreadingHTTPServer(("127.0.0.1", 0), _StubHandler)
        self.server.info_payload = {
            "model_name": "stub-model",
            "mode": mode,
            "mask_token": "[MASK]" if mode == "masked" else None,
            "protocol_version": protocol_version,
        }
        self.server.requests = []
        self.server.drop_last_score = drop_last_score
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def url(self) -> str:
        host, port = self.server.server_address
        return f"http://{host}:{port}"

    @property
    def requests(self):
        return self.server.requests

    def close(self):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture
def stub_bridge():
    bridge = StubBridge()
    yield bridge
    bridge.close()
