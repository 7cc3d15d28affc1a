"""Canonical data model for multiple-choice analogy problems.

A problem gives a query word pair and n candidate pairs (3 <= n <= 5),
exactly one of which completes the proportion.  Datasets are stored as
JSON lines, one problem per line:

    {"id": str, "group": str, "query": [head, tail],
     "candidates": [[head, tail], ...], "answer": int,
     "difficulty": optional str}

Files live at <dataset>/<split>.jsonl with split in
{validation, test, full}.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .errors import DataError

DATASET_NAMES = ("sat", "u2", "u4", "google", "bats", "custom")
SPLITS = ("validation", "test", "full")

# Candidate-count set each shipped dataset declares (Table-style contract).
CANDIDATE_COUNTS = {
    "sat": {5},
    "u2": {3, 4, 5},
    "u4": {3, 4, 5},
    "google": {4},
    "bats": {4},
    "custom": {3, 4, 5},
}


@dataclass(frozen=True)
class WordPair:
    head: str
    tail: str

    def __post_init__(self):
        for name, word in (("head", self.head), ("tail", self.tail)):
            if not isinstance(word, str) or not word.strip():
                raise DataError(f"word pair {name} is empty")
            if "\t" in word or "\n" in word:
                raise DataError(f"word pair {name} contains tab/newline: {word!r}")

    def as_list(self) -> list[str]:
        return [self.head, self.tail]

    def key(self) -> tuple[str, str]:
        """Case-folded identity used for distinctness checks."""
        return (self.head.casefold(), self.tail.casefold())


@dataclass(frozen=True)
class AnalogyProblem:
    id: str
    query: WordPair
    candidates: tuple[WordPair, ...]
    answer: int
    group: str
    difficulty: str | None = None

    def __post_init__(self):
        n = len(self.candidates)
        if not 3 <= n <= 5:
            raise DataError(f"problem {self.id}: candidate count {n} outside [3, 5]")
        if not 0 <= self.answer < n:
            raise DataError(f"problem {self.id}: answer index {self.answer} out of range for {n} candidates")

    @property
    def n_candidates(self) -> int:
        return len(self.candidates)

    @property
    def gold(self) -> WordPair:
        return self.candidates[self.answer]

    def to_record(self) -> dict:
        rec = {
            "id": self.id,
            "group": self.group,
            "query": self.query.as_list(),
            "candidates": [c.as_list() for c in self.candidates],
            "answer": self.answer,
        }
        if self.difficulty is not None:
            rec["difficulty"] = self.difficulty
        return rec


@dataclass
class Dataset:
    name: str
    split: str
    problems: list[AnalogyProblem] = field(default_factory=list)

    def __post_init__(self):
        if self.name not in DATASET_NAMES:
            raise DataError(f"unknown dataset name {self.name!r}")
        if self.split not in SPLITS:
            raise DataError(f"unknown split {self.split!r}")

    def __len__(self) -> int:
        return len(self.problems)

    def groups(self) -> dict[str, list[AnalogyProblem]]:
        out: dict[str, list[AnalogyProblem]] = {}
        for p in self.problems:
            out.setdefault(p.group, []).append(p)
        return out


@dataclass(frozen=True)
class DatasetStats:
    name: str
    split: str
    size: int
    candidate_counts: dict[int, int]
    group_count: int
    group_sizes: dict[str, int]


def _problem_from_record(rec: dict, lineno: int) -> AnalogyProblem:
    try:
        query = WordPair(*rec["query"])
        candidates = tuple(WordPair(*c) for c in rec["candidates"])
        return AnalogyProblem(
            id=str(rec["id"]),
            query=query,
            candidates=candidates,
            answer=int(rec["answer"]),
            group=str(rec["group"]),
            difficulty=rec.get("difficulty"),
        )
    except DataError as exc:
        raise DataError(f"line {lineno}: {exc}") from None
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"line {lineno}: malformed problem record ({exc})") from None


def load_dataset(path, expected_name: str, split: str | None = None) -> Dataset:
    """Load and fully validate a JSON-lines dataset file.

    split defaults to the file stem when it names a known split,
    otherwise "full".
    """
    path = Path(path)
    if split is None:
        split = path.stem if path.stem in SPLITS else "full"
    problems: list[AnalogyProblem] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"{path}: line {lineno}: invalid JSON ({exc.msg})") from None
            problems.append(_problem_from_record(rec, lineno))
    if not problems:
        raise DataError(f"{path}: no problems")
    ds = Dataset(name=expected_name, split=split, problems=problems)
    violations = validate_dataset(ds)
    if violations:
        raise DataError(f"{path}: " + "; ".join(violations))
    return ds


def save_dataset(dataset: Dataset, path) -> None:
    """Write the dataset in the canonical JSON-lines format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        for p in dataset.problems:
            fh.write(json.dumps(p.to_record(), ensure_ascii=False) + "\n")


def validate_dataset(dataset: Dataset) -> list[str]:
    """Return one description per invariant violation (empty when valid)."""
    violations: list[str] = []
    allowed_counts = CANDIDATE_COUNTS[dataset.name]
    seen_ids: set[str] = set()
    for p in dataset.problems:
        if p.id in seen_ids:
            violations.append(f"duplicate problem id {p.id}")
        seen_ids.add(p.id)
        if p.n_candidates not in allowed_counts:
            violations.append(
                f"candidate count out of set in {p.id}: {p.n_candidates} not in {sorted(allowed_counts)}"
            )
        pairs = [c.as_list() for c in p.candidates]
        if len({tuple(x) for x in pairs}) != len(pairs):
            violations.append(f"duplicate candidate in {p.id}")
    return violations


def split_validation(dataset: Dataset, fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Partition into (validation, test) with a per-group sample.

    Each group contributes max(1, round(fraction * group size)) problems
    to validation (round half up).  The draw is seeded per group so the
    partition is deterministic and insensitive to group iteration order.
    """
    if not 0.0 < fraction < 1.0:
        raise DataError(f"fraction {fraction} outside (0, 1)")
    groups = dataset.groups()
    for label, members in groups.items():
        if len(members) < 2:
            raise DataError(f"group {label!r} has fewer than 2 problems; cannot split")
    val_ids: set[str] = set()
    for label in sorted(groups):
        members = groups[label]
        k = max(1, int(fraction * len(members) + 0.5))
        rng = random.Random(f"{seed}:{label}")
        chosen = rng.sample(range(len(members)), k)
        val_ids.update(members[i].id for i in chosen)
    val = [p for p in dataset.problems if p.id in val_ids]
    test = [p for p in dataset.problems if p.id not in val_ids]
    return (
        Dataset(dataset.name, "validation", val),
        Dataset(dataset.name, "test", test),
    )


def dataset_stats(dataset: Dataset) -> DatasetStats:
    counts = Counter(p.n_candidates for p in dataset.problems)
    group_sizes = {label: len(members) for label, members in dataset.groups().items()}
    return DatasetStats(
        name=dataset.name,
        split=dataset.split,
        size=len(dataset.problems),
        candidate_counts=dict(sorted(counts.items())),
        group_count=len(group_sizes),
        group_sizes=dict(sorted(group_sizes.items())),
    )


def expected_random_accuracy(dataset: Dataset) -> float:
    """Percentage a uniform random guesser scores in expectation."""
    if not dataset.problems:
        raise DataError("empty dataset")
    return 100.0 * sum(1.0 / p.n_candidates for p in dataset.problems) / len(dataset.problems)


# ---------------------------------------------------------------------------
# Shipped data access
# ---------------------------------------------------------------------------


def shipped_data_root() -> Path:
    return Path(str(resources.files("analogykit.resources").joinpath("data")))


def shipped_dataset_path(name: str, split: str) -> Path:
    if name not in DATASET_NAMES or name == "custom":
        raise DataError(f"no shipped dataset named {name!r}")
    if split not in ("validation", "test"):
        raise DataError(f"shipped splits are validation/test, not {split!r}")
    return shipped_data_root() / name / f"{split}.jsonl"


def load_shipped(name: str, split: str) -> Dataset:
    """Load one of the bundled datasets (split = validation | test | full)."""
    if split == "full":
        val = load_dataset(shipped_dataset_path(name, "validation"), name)
        test = load_dataset(shipped_dataset_path(name, "test"), name)
        return Dataset(name, "full", val.problems + test.problems)
    return load_dataset(shipped_dataset_path(name, split), name)


def iter_shipped_names() -> Iterable[str]:
    root = shipped_data_root()
    for name in DATASET_NAMES:
        if (root / name).is_dir():
            yield name
