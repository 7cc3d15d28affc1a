"""Sentence scoring contract shared by every perplexity oracle.

A scorer maps a sentence to its perplexity: the exponential of the
negative sum of token log-likelihoods.  There is deliberately no 1/m
length normalization in the default convention; a geometric-mean
variant is available through LengthNormalizedScorer because candidate
words tokenize to differing lengths.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Protocol, Sequence, runtime_checkable

# Perplexities are clamped before any ratio arithmetic.
PPL_MIN = 1e-30
PPL_MAX = 1e30


def clamp_perplexity(value: float) -> float:
    if value != value:  # NaN guard
        return PPL_MAX
    return min(max(value, PPL_MIN), PPL_MAX)


@dataclass(frozen=True)
class SentenceScore:
    sentence: str
    perplexity: float
    token_count: int

    def __post_init__(self):
        if self.token_count < 1:
            raise ValueError("token_count must be >= 1")
        if not PPL_MIN <= self.perplexity <= PPL_MAX:
            raise ValueError(f"perplexity {self.perplexity} outside clamp range")


@dataclass(frozen=True)
class ScorerIdentity:
    """Identity a cache key embeds: two scorers with equal identity must
    assign equal scores to equal sentences."""

    kind: str  # ngram | remote | cached | constant
    model_name: str
    mode: str  # autoregressive | masked

    def cache_key(self) -> str:
        return f"{self.kind}/{self.model_name}/{self.mode}"


@runtime_checkable
class Scorer(Protocol):
    identity: ScorerIdentity

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        """Score sentences order-preservingly; deterministic per identity."""
        ...


def check_sentences(sentences: Sequence[str]) -> None:
    for s in sentences:
        if not isinstance(s, str) or not s:
            raise ValueError(f"sentences must be non-empty strings, got {s!r}")


class LengthNormalizedScorer:
    """Geometric-mean wrapper: perplexity^(1/token_count).

    Wrap it around a cached scorer so the cache keeps raw values and
    both conventions share one set of oracle calls.
    """

    def __init__(self, inner: Scorer):
        self.inner = inner
        self.identity = replace(
            inner.identity, model_name=inner.identity.model_name + "+lennorm"
        )

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        out = []
        for score in self.inner.score_sentences(sentences):
            norm = clamp_perplexity(score.perplexity ** (1.0 / score.token_count))
            out.append(SentenceScore(score.sentence, norm, score.token_count))
        return out


class ConstantScorer:
    """Fixed per-sentence table with a default; handy in tests and docs."""

    def __init__(self, table: dict[str, float] | None = None, default: float = 1.0,
                 name: str = "constant"):
        self.table = dict(table or {})
        self.default = default
        self.identity = ScorerIdentity("constant", name, "autoregressive")

    def score_sentences(self, sentences: Sequence[str]) -> list[SentenceScore]:
        check_sentences(sentences)
        return [
            SentenceScore(s, clamp_perplexity(self.table.get(s, self.default)),
                          max(1, len(s.split())))
            for s in sentences
        ]
