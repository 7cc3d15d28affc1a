"""Turn raw relation files into multiple-choice analogy problems.

Each query pair gets three controlled negatives: a pair of two head
words from its own relation, a pair of two tail words, and a pair from
a sibling relation of the same high-level category.  Relations that
would create accidental correct answers (country-of style relations and
multi-relation lexicographic families) can be excluded from sibling
sampling via ExclusionPolicy.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .datasets import AnalogyProblem, Dataset, WordPair
from .errors import DataError


@dataclass(frozen=True)
class RelationFile:
    relation_id: str
    category: str
    pairs: tuple[WordPair, ...]

    def __post_init__(self):
        if len(self.pairs) < 4:
            raise DataError(
                f"relation {self.relation_id}: needs >= 4 pairs, has {len(self.pairs)}"
            )
        keys = [p.key() for p in self.pairs]
        if len(set(keys)) != len(keys):
            raise DataError(f"relation {self.relation_id}: duplicate pairs")


@dataclass(frozen=True)
class ExclusionPolicy:
    """Relations never used as cross-relation negative sources."""

    excluded_relation_ids: frozenset[str] = field(default_factory=frozenset)

    @classmethod
    def of(cls, *ids: str) -> "ExclusionPolicy":
        return cls(frozenset(ids))


def _pick_two_distinct(words: Sequence[str], rng: random.Random, forbidden: set[str]) -> tuple[str, str]:
    pool = sorted({w for w in words if w.casefold() not in forbidden})
    if len(pool) < 2:
        raise DataError("insufficient distinct words for a negative pair")
    a, b = rng.sample(pool, 2)
    return a, b


def generate_negatives(
    query: WordPair,
    relation: RelationFile,
    siblings: Sequence[RelationFile],
    policy: ExclusionPolicy,
    seed: int,
) -> list[WordPair]:
    """Three negatives for one query, deterministic in the seed.

    All three are distinct from each other and from every correct pair
    of the relation (case-folded comparison); head/tail negatives avoid
    the query's own words.
    """
    rng = random.Random(seed)
    query_words = {query.head.casefold(), query.tail.casefold()}
    correct_keys = {p.key() for p in relation.pairs}

    eligible = [
        s for s in siblings
        if s.relation_id != relation.relation_id
        and s.category == relation.category
        and s.relation_id not in policy.excluded_relation_ids
    ]
    if not eligible:
        raise DataError(
            f"relation {relation.relation_id}: no eligible sibling relation for negatives"
        )
    sibling_pool = sorted(
        ((s.relation_id, p) for s in eligible for p in s.pairs),
        key=lambda item: (item[0], item[1].key()),
    )

    negatives: list[WordPair] = []
    taken: set[tuple[str, str]] = set()

    def admissible(pair: WordPair) -> bool:
        return pair.key() not in correct_keys and pair.key() not in taken

    for kind, words in (("head", [p.head for p in relation.pairs]),
                        ("tail", [p.tail for p in relation.pairs])):
        candidate = None
        for _ in range(64):
            a, b = _pick_two_distinct(words, rng, query_words)
            pair = WordPair(a, b)
            if admissible(pair):
                candidate = pair
                break
        if candidate is None:
            raise DataError(
                f"relation {relation.relation_id}: cannot build a {kind}-word negative"
            )
        negatives.append(candidate)
        taken.add(candidate.key())

    cross_choices = [p for _, p in sibling_pool if admissible(p)]
    if not cross_choices:
        raise DataError(
            f"relation {relation.relation_id}: sibling pool exhausted for cross negative"
        )
    cross = cross_choices[rng.randrange(len(cross_choices))]
    negatives.append(cross)
    return negatives


def build_problems(
    files: Sequence[RelationFile],
    policy: ExclusionPolicy,
    seed: int,
    name: str = "custom",
) -> Dataset:
    """One 4-candidate problem per (query pair, relation); pure in
    (files, policy, seed)."""
    problems: list[AnalogyProblem] = []
    for relation in files:
        for idx, query in enumerate(relation.pairs):
            problem_id = f"{relation.relation_id}/{idx}"
            # per-problem RNG so generation can be parallelized per relation
            rng = random.Random(f"{seed}:{problem_id}")
            gold_pool = [p for p in relation.pairs if p.key() != query.key()]
            if len(gold_pool) < 3:
                raise DataError(
                    f"relation {relation.relation_id}: query {query.as_list()} "
                    "has fewer than 3 sibling pairs"
                )
            gold = gold_pool[rng.randrange(len(gold_pool))]
            try:
                negatives = generate_negatives(
                    query, relation, files, policy, rng.getrandbits(63)
                )
            except DataError as exc:
                raise DataError(f"[{relation.relation_id}] {exc}") from None
            candidates = [gold] + negatives
            order = list(range(4))
            rng.shuffle(order)
            shuffled = [candidates[i] for i in order]
            problems.append(
                AnalogyProblem(
                    id=problem_id,
                    query=query,
                    candidates=tuple(shuffled),
                    answer=order.index(0),
                    group=relation.category,
                )
            )
    return Dataset(name=name, split="full", problems=problems)


# ---------------------------------------------------------------------------
# Ingestion
# ---------------------------------------------------------------------------


def _first_variant(slot: str) -> str:
    # BATS-style slash alternatives collapse to the first variant
    return slot.split("/")[0].strip()


def ingest_relation_file(path, relation_id: str | None = None, category: str = "") -> RelationFile:
    """Parse a tab-separated pair file (one "head<TAB>tail" per line)."""
    path = Path(path)
    pairs: list[WordPair] = []
    seen: set[tuple[str, str]] = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise DataError(
                    f"{path}: line {lineno}: expected 'head<TAB>tail', got {line!r}"
                )
            head, tail = _first_variant(parts[0]), _first_variant(parts[1])
            try:
                pair = WordPair(head, tail)
            except DataError as exc:
                raise DataError(f"{path}: line {lineno}: {exc}") from None
            if pair.key() in seen:
                continue  # tolerate exact repeats in raw files
            seen.add(pair.key())
            pairs.append(pair)
    if not pairs:
        raise DataError(f"{path}: empty relation file")
    return RelationFile(
        relation_id=relation_id or path.stem,
        category=category,
        pairs=tuple(pairs),
    )


def load_relation_corpus(manifest_path) -> list[RelationFile]:
    """Read a manifest (JSON list of {"relation_id", "category", "file"})
    and ingest every referenced relation file."""
    manifest_path = Path(manifest_path)
    with open(manifest_path, encoding="utf-8") as fh:
        manifest = json.load(fh)
    if isinstance(manifest, dict):
        manifest = [manifest]
    files: list[RelationFile] = []
    for entry in manifest:
        try:
            rel_path = Path(entry["file"])
        except (KeyError, TypeError):
            raise DataError(f"{manifest_path}: manifest entry missing 'file': {entry!r}") from None
        if not rel_path.is_absolute():
            rel_path = manifest_path.parent / rel_path
        files.append(
            ingest_relation_file(
                rel_path,
                relation_id=entry.get("relation_id"),
                category=entry.get("category", ""),
            )
        )
    return files
