"""Persistent score cache: append-only log keyed by
(scorer identity, exact sentence bytes).

Record layout (little-endian): identity sha256 (32 bytes), sentence
sha256 (32 bytes), perplexity float64, token_count uint32.  The
in-memory index is rebuilt on open; writes are serialized behind a
lock so many reader threads can share one cache.
"""

from __future__ import annotations

import hashlib
import struct
import threading
from pathlib import Path
from typing import Sequence

from ..errors import DataError
from .base import Scorer, ScorerIdentity, SentenceScore, check_sentences

_RECORD = struct.Struct("<32s32sdI")


def _identity_hash(identity: ScorerIdentity) -> bytes:
    return hashlib.sha256(identity.cache_key().encode("utf-8")).digest()


def _sentence_hash(sentence: str) -> bytes:
    return hashlib.sha256(sentence.encode("utf-8")).digest()


class ScoreCache:
    """Score store shared by any number of scorers (keys embed identity)."""

    def __init__(self, path=None, read_only: bool = False):
        self.path = Path(path) if path is not None else None
        self.read_only = read_only
        self._index: dict[tuple[bytes, bytes], tuple[float, int]] = {}
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    def _load(self) -> None:
        data = self.path.read_bytes()
        if len(data) % _RECORD.size:
            raise DataError(f"{self.path}: truncated cache record at byte {len(data)}")
        for off in range(0, len(data), _RECORD.size):
            ih, sh, ppl, m = _RECORD.unpack_from(data, off)
            self._index[(ih, sh)] = (ppl, m)

    def __len__(self) -> int:
        return len(self._index)

    def lookup(self, identity: ScorerIdentity, sentence: str) -> tuple[float, int] | None:
        return self._index.get((_identity_hash(identity), _sentence_hash(sentence)))

    def get_put(self, scorer: Scorer, sentences: Sequence[str]) -> list[SentenceScore]:
        """Return scores for all sentences, invoking the scorer only on
        cache misses (each distinct miss scored once per batch)."""
        check_sentences(sentences)
        ih = _identity_hash(scorer.identity)
        hashes = [_sentence_hash(s) for s in sentences]
        missing: dict[str, bytes] = {}
        for s, sh in zip(sentences, hashes):
            if (ih, sh) not in self._index and s not in missing:
                missing[s] = sh
        if missing:
            fresh = scorer.score_sentences(list(missing))
            if len(fresh) != len(missing):
                raise DataError("inner scorer returned wrong number of scores")
            with self._lock:
                new_records = []
                for score, sh in zip(fresh, missing.values()):
                    key = (ih, sh)
                    if key not in self._index:
                        self._index[key] = (score.perplexity, score.token_count)
                        new_records.append(
                            _RECORD.pack(ih, sh, score.perplexity, score.token_count)
                        )
                if new_records and self.path is not None and not self.read_only:
                    self.path.parent.mkdir(parents=True, exist_ok=True)
                    with open(self.path, "ab") as fh:
                        fh.write(b"".join(new_records))
        out = []
        for s, sh in zip(sentences, hashes):
            ppl, m = self._index[(ih, sh)]
            out.append(SentenceScore(s, ppl, m))
        return out


class CachedScorer:
    """Observationally equivalent wrapper that funnels all scoring
    through a ScoreCache."""

    def __init__(self, inner: Scorer, cache: ScoreCache | None = None):
        self.inner = inner
        self.cache = cache if cache is not None else ScoreCache()
        self.identity = inner.identity

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        return self.cache.get_put(self.inner, sentences)


def ensure_cached(scorer: Scorer) -> CachedScorer:
    if isinstance(scorer, CachedScorer):
        return scorer
    return CachedScorer(scorer)
