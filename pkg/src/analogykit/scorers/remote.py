"""HTTP client for the scoring bridge.

Wire protocol (version 1, JSON over HTTP):
    GET  /info   -> {"model_name", "mode", "mask_token", "protocol_version"}
    POST /score  {"sentences": [...], "mode": "...", "replace_placeholder": bool}
                 -> {"scores": [{"perplexity": float, "token_count": int}, ...]}

Perplexities travel as JSON numbers; Python emits/parses shortest
round-trip repr, so 64-bit floats survive bit-exactly.
"""

from __future__ import annotations

import time
from typing import Sequence

import requests

from ..errors import ProtocolError, TransportError
from .base import ScorerIdentity, SentenceScore, check_sentences, clamp_perplexity

PROTOCOL_VERSION = 1
DEFAULT_BATCH_SIZE = 64
_RETRIES = 3
_BACKOFF_S = 0.5


class RemoteScorer:
    """Scorer speaking the bridge protocol; batching is transparent."""

    def __init__(
        self,
        endpoint: str,
        mode: str | None = None,
        batch_size: int = DEFAULT_BATCH_SIZE,
        replace_placeholder: bool = False,
        timeout: float = 300.0,
        session: requests.Session | None = None,
    ):
        self.endpoint = endpoint.rstrip("/")
        self.batch_size = batch_size
        self.replace_placeholder = replace_placeholder
        self.timeout = timeout
        self.session = session or requests.Session()
        info = self.server_info()
        if info.get("protocol_version") != PROTOCOL_VERSION:
            raise ProtocolError(
                f"server speaks protocol {info.get('protocol_version')}, "
                f"client expects {PROTOCOL_VERSION}"
            )
        self.mode = mode or info["mode"]
        if self.mode != info["mode"]:
            raise ProtocolError(
                f"requested mode {self.mode!r} but server runs {info['mode']!r}"
            )
        self.mask_token = info.get("mask_token")
        # placeholder replacement changes what gets scored, so it must
        # split the cache key space
        name = str(info["model_name"]) + ("+maskfill" if replace_placeholder else "")
        self.identity = ScorerIdentity("remote", name, self.mode)

    def _request(self, method: str, path: str, payload=None) -> dict:
        url = f"{self.endpoint}{path}"
        last_exc: Exception | None = None
        for attempt in range(_RETRIES):
            try:
                resp = self.session.request(method, url, json=payload, timeout=self.timeout)
            except requests.RequestException as exc:
                last_exc = exc
                time.sleep(_BACKOFF_S * (attempt + 1))
                continue
            if resp.status_code >= 500:
                raise TransportError(f"{url}: server error {resp.status_code}: {resp.text[:200]}")
            if resp.status_code >= 400:
                raise ProtocolError(f"{url}: rejected ({resp.status_code}): {resp.text[:200]}")
            try:
                return resp.json()
            except ValueError:
                raise ProtocolError(f"{url}: non-JSON response") from None
        raise TransportError(f"{url}: unreachable after {_RETRIES} attempts: {last_exc}")

    def server_info(self) -> dict:
        return self._request("GET", "/info")

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        check_sentences(sentences)
        if not sentences:
            return []
        out: list[SentenceScore] = []
        for start in range(0, len(sentences), self.batch_size):
            batch = list(sentences[start : start + self.batch_size])
            body = self._request(
                "POST",
                "/score",
                {
                    "sentences": batch,
                    "mode": self.mode,
                    "replace_placeholder": self.replace_placeholder,
                },
            )
            scores = body.get("scores")
            if not isinstance(scores, list) or len(scores) != len(batch):
                got = len(scores) if isinstance(scores, list) else "none"
                raise ProtocolError(
                    f"server returned {got} scores for a batch of {len(batch)}"
                )
            for sentence, rec in zip(batch, scores):
                try:
                    ppl = clamp_perplexity(float(rec["perplexity"]))
                    m = int(rec["token_count"])
                except (KeyError, TypeError, ValueError):
                    raise ProtocolError(f"malformed score record: {rec!r}") from None
                out.append(SentenceScore(sentence, ppl, m))
        return out


def remote_score(endpoint: str, mode: str, sentences: Sequence[str]) -> list[SentenceScore]:
    """One-shot convenience wrapper around RemoteScorer."""
    if not sentences:
        return []
    return RemoteScorer(endpoint, mode=mode).score_sentences(sentences)
