"""Additive-smoothing n-gram language model: a deterministic,
desk-scale stand-in for the transformer oracle.

Tokens are case-folded whitespace tokens.  Unknown words fall into a
single UNK class so scoring never fails on vocabulary gaps.  Orders
above 1 pad each line with BOS markers on the left; BOS is never
predicted and does not count toward the vocabulary size.
"""

from __future__ import annotations

import math
import struct
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import DataError
from .base import PPL_MAX, ScorerIdentity, SentenceScore, check_sentences, clamp_perplexity

MAGIC = b"NGLM"
VERSION = 1

_BOS = "<s>"
_UNK = "<unk>"


def tokenize(text: str) -> list[str]:
    return text.casefold().split()


class NgramScorer:
    """Perplexity oracle backed by smoothed n-gram counts.

    ngram_counts maps order-k tuples to counts; context_counts maps the
    (order-1)-token prefixes to their continuation totals, so
    P(w | ctx) = (c(ctx + w) + delta) / (c(ctx) + delta * V)
    with V = |vocabulary| + 1 for the UNK class.
    """

    def __init__(
        self,
        order: int,
        delta: float,
        vocabulary: Sequence[str],
        ngram_counts: dict[tuple[str, ...], int],
        context_counts: dict[tuple[str, ...], int],
        name: str = "ngram",
    ):
        self.order = order
        self.delta = delta
        self.vocabulary = tuple(vocabulary)
        self.vocab_set = set(self.vocabulary)
        self.ngram_counts = ngram_counts
        self.context_counts = context_counts
        self.identity = ScorerIdentity(
            "ngram", f"{name}-o{order}-d{delta:g}", "autoregressive"
        )

    @property
    def smoothed_vocab_size(self) -> int:
        return len(self.vocabulary) + 1  # + UNK

    def _map_token(self, token: str) -> str:
        return token if token in self.vocab_set else _UNK

    def token_probability(self, token: str, context: Sequence[str]) -> float:
        token = self._map_token(token)
        context = tuple(self._map_token(t) if t != _BOS else t for t in context)
        num = self.ngram_counts.get(context + (token,), 0) + self.delta
        den = self.context_counts.get(context, 0) + self.delta * self.smoothed_vocab_size
        if den == 0.0:
            return 0.0
        return num / den

    def sentence_perplexity(self, sentence: str) -> tuple[float, int]:
        tokens = tokenize(sentence)
        if not tokens:
            raise ValueError(f"sentence has no tokens: {sentence!r}")
        padded = [_BOS] * (self.order - 1) + tokens
        log_sum = 0.0
        for j in range(self.order - 1, len(padded)):
            p = self.token_probability(padded[j], padded[j - self.order + 1 : j])
            if p <= 0.0:
                return PPL_MAX, len(tokens)
            log_sum += math.log(p)
        return clamp_perplexity(math.exp(-log_sum)), len(tokens)

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        check_sentences(sentences)
        out = []
        for s in sentences:
            ppl, m = self.sentence_perplexity(s)
            out.append(SentenceScore(s, ppl, m))
        return out

    # -- persistence --------------------------------------------------

    def save(self, path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as fh:
            fh.write(MAGIC)
            fh.write(struct.pack("<IId", VERSION, self.order, self.delta))
            _write_str_list(fh, self.vocabulary)
            _write_count_table(fh, self.ngram_counts)
            _write_count_table(fh, self.context_counts)

    @classmethod
    def load(cls, path) -> "NgramScorer":
        path = Path(path)
        with open(path, "rb") as fh:
            magic = fh.read(4)
            if magic != MAGIC:
                raise DataError(f"{path}: not an n-gram model file (bad magic {magic!r})")
            version, order = struct.unpack("<II", fh.read(8))
            if version != VERSION:
                raise DataError(f"{path}: unsupported model version {version}")
            (delta,) = struct.unpack("<d", fh.read(8))
            vocab = _read_str_list(fh)
            ngram_counts = _read_count_table(fh)
            context_counts = _read_count_table(fh)
        return cls(order, delta, vocab, ngram_counts, context_counts, name=path.stem)


def train_ngram(corpus: Iterable[str] | str, order: int = 1, smoothing_delta: float = 0.0,
                name: str = "ngram") -> NgramScorer:
    """Count n-grams over case-folded whitespace tokens, one line at a time."""
    if not 1 <= order <= 3:
        raise DataError(f"order {order} outside [1, 3]")
    if smoothing_delta < 0:
        raise DataError("smoothing_delta must be nonnegative")
    if isinstance(corpus, str):
        corpus = corpus.splitlines() or [corpus]

    vocab: set[str] = set()
    ngram_counts: dict[tuple[str, ...], int] = {}
    context_counts: dict[tuple[str, ...], int] = {}
    n_tokens = 0
    for line in corpus:
        tokens = tokenize(line)
        if not tokens:
            continue
        n_tokens += len(tokens)
        vocab.update(tokens)
        padded = [_BOS] * (order - 1) + tokens
        for j in range(order - 1, len(padded)):
            gram = tuple(padded[j - order + 1 : j + 1])
            ngram_counts[gram] = ngram_counts.get(gram, 0) + 1
            ctx = gram[:-1]
            context_counts[ctx] = context_counts.get(ctx, 0) + 1
    if n_tokens == 0:
        raise DataError("empty corpus")
    return NgramScorer(order, smoothing_delta, sorted(vocab), ngram_counts, context_counts,
                       name=name)


def train_ngram_file(path, order: int = 1, smoothing_delta: float = 0.0) -> NgramScorer:
    path = Path(path)
    with open(path, encoding="utf-8") as fh:
        return train_ngram(fh, order, smoothing_delta, name=path.stem)


# -- binary helpers ----------------------------------------------------


def _write_str_list(fh, items: Sequence[str]) -> None:
    fh.write(struct.pack("<I", len(items)))
    for item in items:
        raw = item.encode("utf-8")
        fh.write(struct.pack("<H", len(raw)))
        fh.write(raw)


def _read_str_list(fh) -> list[str]:
    (count,) = struct.unpack("<I", fh.read(4))
    items = []
    for _ in range(count):
        (length,) = struct.unpack("<H", fh.read(2))
        items.append(fh.read(length).decode("utf-8"))
    return items


def _write_count_table(fh, table: dict[tuple[str, ...], int]) -> None:
    fh.write(struct.pack("<I", len(table)))
    for gram, count in sorted(table.items()):
        _write_str_list(fh, gram)
        fh.write(struct.pack("<Q", count))


def _read_count_table(fh) -> dict[tuple[str, ...], int]:
    (count,) = struct.unpack("<I", fh.read(4))
    table: dict[tuple[str, ...], int] = {}
    for _ in range(count):
        gram = tuple(_read_str_list(fh))
        (c,) = struct.unpack("<Q", fh.read(8))
        table[gram] = c
    return table
