"""Non-LM reference methods: word-embedding offset with cosine
similarity, corpus co-occurrence PMI, and the analytic random guesser.
"""

from __future__ import annotations

import math
import re
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .datasets import AnalogyProblem, Dataset, expected_random_accuracy
from .errors import DataError

_WORD_RE = re.compile(r"[^0-9a-z]+")

COOC_MAGIC = b"COOC"
COOC_VERSION = 1


# ---------------------------------------------------------------------------
# Word embeddings
# ---------------------------------------------------------------------------


@dataclass
class EmbeddingTable:
    name: str
    dimension: int
    entries: dict[str, np.ndarray]
    case_fold: bool = False

    def lookup(self, word: str) -> np.ndarray | None:
        if self.case_fold:
            word = word.casefold()
        return self.entries.get(word)


def load_embeddings(path, case_fold: bool = False) -> EmbeddingTable:
    """Read a word2vec-style text table (optional "count dim" header,
    then one word and its floats per line)."""
    path = Path(path)
    entries: dict[str, np.ndarray] = {}
    dimension: int | None = None
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.rstrip("\n").split(" ")
            parts = [p for p in parts if p != ""]
            if not parts:
                continue
            if lineno == 1 and len(parts) == 2:
                try:
                    declared_count, dimension = int(parts[0]), int(parts[1])
                    _ = declared_count
                    continue
                except ValueError:
                    pass  # not a header; fall through to a data row
            word = parts[0]
            if case_fold:
                word = word.casefold()
            try:
                vec = np.array([float(x) for x in parts[1:]], dtype=np.float64)
            except ValueError:
                raise DataError(f"{path}: line {lineno}: non-numeric vector component") from None
            if vec.size == 0:
                raise DataError(f"{path}: line {lineno}: row has no vector components")
            if dimension is None:
                dimension = vec.size
            if vec.size != dimension:
                raise DataError(
                    f"{path}: line {lineno}: expected {dimension} components, got {vec.size}"
                )
            if word in entries:
                raise DataError(f"{path}: line {lineno}: duplicate word {word!r}")
            entries[word] = vec
    if not entries:
        raise DataError(f"{path}: no embeddings")
    return EmbeddingTable(path.stem, int(dimension), entries, case_fold)


def _cosine(a: np.ndarray, b: np.ndarray) -> float:
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0.0 or nb == 0.0:
        return 0.0
    return float(np.dot(a, b) / (na * nb))


def embedding_predict(problem: AnalogyProblem, table: EmbeddingTable) -> tuple[int, bool]:
    """Pick the candidate whose tail-minus-head offset is most cosine-similar
    to the query's offset.

    Out-of-vocabulary candidates score -inf; an out-of-vocabulary query
    falls back to index 0 and flags the problem (second return value).
    """
    hq = table.lookup(problem.query.head)
    tq = table.lookup(problem.query.tail)
    if hq is None or tq is None:
        return 0, True
    query_diff = tq - hq
    best_idx, best_sim = 0, -math.inf
    for i, cand in enumerate(problem.candidates):
        hv = table.lookup(cand.head)
        tv = table.lookup(cand.tail)
        if hv is None or tv is None:
            continue
        sim = _cosine(query_diff, tv - hv)
        if sim > best_sim:
            best_idx, best_sim = i, sim
    return best_idx, False


# ---------------------------------------------------------------------------
# Corpus co-occurrence PMI
# ---------------------------------------------------------------------------


@dataclass
class CooccurrenceCounts:
    window: int
    token_counts: dict[str, int]
    pair_counts: dict[tuple[str, str], int]
    total_tokens: int
    total_pairs: int

    def merge(self, other: "CooccurrenceCounts") -> "CooccurrenceCounts":
        if other.window != self.window:
            raise DataError("cannot merge counts with different windows")
        tokens = dict(self.token_counts)
        for t, c in other.token_counts.items():
            tokens[t] = tokens.get(t, 0) + c
        pairs = dict(self.pair_counts)
        for p, c in other.pair_counts.items():
            pairs[p] = pairs.get(p, 0) + c
        return CooccurrenceCounts(
            self.window, tokens, pairs,
            self.total_tokens + other.total_tokens,
            self.total_pairs + other.total_pairs,
        )


def corpus_tokens(line: str) -> list[str]:
    """Counting tokenizer: case-fold, split on non-alphanumeric runs."""
    return [t for t in _WORD_RE.split(line.casefold()) if t]


def count_cooccurrence(corpus: Iterable[str] | str, window: int) -> CooccurrenceCounts:
    """Count unordered within-window co-occurrences, line-bounded.

    Every position pair (i, j) with 0 < j - i <= window inside one line
    increments its unordered word-pair count once.  Token positions are
    vectorized across the whole corpus with per-line ids so no pair
    crosses a line boundary.
    """
    if window < 1:
        raise DataError("window must be >= 1")
    if isinstance(corpus, str):
        corpus = corpus.splitlines()

    vocab: dict[str, int] = {}
    ids: list[int] = []
    line_ids: list[int] = []
    for line_no, line in enumerate(corpus):
        for tok in corpus_tokens(line):
            idx = vocab.setdefault(tok, len(vocab))
            ids.append(idx)
            line_ids.append(line_no)
    words = list(vocab)
    if not ids:
        return CooccurrenceCounts(window, {}, {}, 0, 0)

    id_arr = np.asarray(ids, dtype=np.int64)
    line_arr = np.asarray(line_ids, dtype=np.int64)
    token_ids, token_freq = np.unique(id_arr, return_counts=True)
    token_counts = {words[i]: int(c) for i, c in zip(token_ids, token_freq)}

    v = len(words)
    keys = []
    for d in range(1, window + 1):
        if d >= id_arr.size:
            break
        left, right = id_arr[:-d], id_arr[d:]
        same_line = line_arr[:-d] == line_arr[d:]
        lo = np.minimum(left[same_line], right[same_line])
        hi = np.maximum(left[same_line], right[same_line])
        keys.append(lo * v + hi)
    pair_counts: dict[tuple[str, str], int] = {}
    total_pairs = 0
    if keys:
        all_keys = np.concatenate(keys)
        total_pairs = int(all_keys.size)
        uniq, freq = np.unique(all_keys, return_counts=True)
        for key, c in zip(uniq.tolist(), freq.tolist()):
            pair_counts[_pair_key(words[key // v], words[key % v])] = int(c)
    return CooccurrenceCounts(window, token_counts, pair_counts, int(id_arr.size), total_pairs)


def count_cooccurrence_file(path, window: int) -> CooccurrenceCounts:
    with open(path, encoding="utf-8") as fh:
        return count_cooccurrence(fh, window)


def _pair_key(x: str, y: str) -> tuple[str, str]:
    return (x, y) if x <= y else (y, x)


def _normalize_word(word: str) -> str | None:
    toks = corpus_tokens(word)
    return toks[0] if len(toks) == 1 else None


def pair_pmi(counts: CooccurrenceCounts, x: str, y: str) -> float | None:
    """PMI of the unordered pair; None when the pair or either word is
    unseen (undefined, not an error)."""
    if counts.total_pairs == 0 or counts.total_tokens == 0:
        return None
    nx, ny = _normalize_word(x), _normalize_word(y)
    if nx is None or ny is None:
        return None
    cx = counts.token_counts.get(nx, 0)
    cy = counts.token_counts.get(ny, 0)
    cxy = counts.pair_counts.get(_pair_key(nx, ny), 0)
    if cx == 0 or cy == 0 or cxy == 0:
        return None
    p_pair = cxy / counts.total_pairs
    p_x = cx / counts.total_tokens
    p_y = cy / counts.total_tokens
    return math.log(p_pair / (p_x * p_y))


def pmi_predict(problem: AnalogyProblem, counts: CooccurrenceCounts) -> int:
    """Highest candidate-pair PMI wins; the query is deliberately ignored."""
    best_idx, best = 0, -math.inf
    for i, cand in enumerate(problem.candidates):
        value = pair_pmi(counts, cand.head, cand.tail)
        if value is not None and value > best:
            best_idx, best = i, value
    return best_idx


def save_cooccurrence(counts: CooccurrenceCounts, path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    words = sorted(counts.token_counts)
    index = {w: i for i, w in enumerate(words)}
    with open(path, "wb") as fh:
        fh.write(COOC_MAGIC)
        fh.write(struct.pack("<IIQQ", COOC_VERSION, counts.window,
                             counts.total_tokens, counts.total_pairs))
        fh.write(struct.pack("<I", len(words)))
        for w in words:
            raw = w.encode("utf-8")
            fh.write(struct.pack("<H", len(raw)))
            fh.write(raw)
            fh.write(struct.pack("<Q", counts.token_counts[w]))
        fh.write(struct.pack("<I", len(counts.pair_counts)))
        for (x, y), c in sorted(counts.pair_counts.items()):
            fh.write(struct.pack("<IIQ", index[x], index[y], c))


def load_cooccurrence(path) -> CooccurrenceCounts:
    path = Path(path)
    with open(path, "rb") as fh:
        if fh.read(4) != COOC_MAGIC:
            raise DataError(f"{path}: not a co-occurrence file")
        version, window, total_tokens, total_pairs = struct.unpack("<IIQQ", fh.read(24))
        if version != COOC_VERSION:
            raise DataError(f"{path}: unsupported version {version}")
        (n_words,) = struct.unpack("<I", fh.read(4))
        words: list[str] = []
        token_counts: dict[str, int] = {}
        for _ in range(n_words):
            (length,) = struct.unpack("<H", fh.read(2))
            w = fh.read(length).decode("utf-8")
            (c,) = struct.unpack("<Q", fh.read(8))
            words.append(w)
            token_counts[w] = c
        (n_pairs,) = struct.unpack("<I", fh.read(4))
        pair_counts: dict[tuple[str, str], int] = {}
        for _ in range(n_pairs):
            xi, yi, c = struct.unpack("<IIQ", fh.read(16))
            pair_counts[(words[xi], words[yi])] = c
    return CooccurrenceCounts(window, token_counts, pair_counts, total_tokens, total_pairs)


# ---------------------------------------------------------------------------
# Baseline adapters used by the evaluation loop
# ---------------------------------------------------------------------------


class EmbeddingBaseline:
    method = "embedding"

    def __init__(self, table: EmbeddingTable):
        self.table = table
        self.name = f"embedding:{table.name}"

    def predict(self, problem: AnalogyProblem) -> tuple[int, tuple[str, ...]]:
        idx, oov = embedding_predict(problem, self.table)
        return idx, (("query-oov",) if oov else ())


class PmiBaseline:
    method = "pmi"

    def __init__(self, counts: CooccurrenceCounts):
        self.counts = counts
        self.name = f"pmi:w{counts.window}"

    def predict(self, problem: AnalogyProblem) -> tuple[int, tuple[str, ...]]:
        return pmi_predict(problem, self.counts), ()


class RandomBaseline:
    """Analytic expectation; evaluate() reports the closed-form accuracy
    instead of sampling guesses."""

    method = "random"
    name = "random"

    @staticmethod
    def expected_accuracy(dataset: Dataset) -> float:
        return expected_random_accuracy(dataset)
