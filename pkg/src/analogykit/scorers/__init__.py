"""Perplexity oracles: the scoring contract, an n-gram model, a remote
bridge client, and a persistent cache."""

from .base import (
    PPL_MAX,
    PPL_MIN,
    ConstantScorer,
    LengthNormalizedScorer,
    Scorer,
    ScorerIdentity,
    SentenceScore,
    check_sentences,
    clamp_perplexity,
)
from .cache import CachedScorer, ScoreCache, ensure_cached
from .ngram import NgramScorer, train_ngram, train_ngram_file
from .remote import PROTOCOL_VERSION, RemoteScorer, remote_score

__all__ = [
    "PPL_MAX",
    "PPL_MIN",
    "PROTOCOL_VERSION",
    "CachedScorer",
    "ConstantScorer",
    "LengthNormalizedScorer",
    "NgramScorer",
    "RemoteScorer",
    "ScoreCache",
    "Scorer",
    "ScorerIdentity",
    "SentenceScore",
    "check_sentences",
    "clamp_perplexity",
    "ensure_cached",
    "remote_score",
    "train_ngram",
    "train_ngram_file",
]
