"""Prompt templates and the permutation algebra of analogical proportions.

A problem candidate is judged by rendering the 4-tuple
(query head, query tail, candidate head, candidate tail) into natural
sentences.  Rendering is controlled by two independent choices:

* a template: a fixed sentence pattern with placeholders [w1]..[w4];
* a permutation: a reordering of the 4-tuple.  An analogical proportion
  is invariant under 8 of the 24 orderings (the "positive" ones); the
  remaining 16 are "negative" and should break the proportion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import permutations as _all_orderings
from typing import Iterable, Sequence

from .datasets import AnalogyProblem

# Placeholder used by the hypothesis-only ablation.  Scorers that lack a
# native mask token treat it as an ordinary unknown word.
MASK_PLACEHOLDER = "⟨MASK⟩"  # ⟨MASK⟩

_PLACEHOLDERS = ("[w1]", "[w2]", "[w3]", "[w4]")

# Canonical order of the bundled templates; grid enumeration follows it.
TEMPLATE_IDS = ("to-as", "to-what", "rel-same", "what-to", "she-as", "as-what")


@dataclass(frozen=True)
class PromptTemplate:
    """A sentence pattern containing [w1]..[w4] exactly once each, in order."""

    template_id: str
    pattern: str

    def __post_init__(self):
        pos = -1
        for ph in _PLACEHOLDERS:
            if self.pattern.count(ph) != 1:
                raise ValueError(
                    f"template {self.template_id!r}: placeholder {ph} must occur exactly once"
                )
            nxt = self.pattern.index(ph)
            if nxt < pos:
                raise ValueError(
                    f"template {self.template_id!r}: placeholders out of order"
                )
            pos = nxt


def _load_default_templates() -> dict[str, PromptTemplate]:
    raw = json.loads(
        resources.files("analogykit.resources").joinpath("templates.json").read_text("utf-8")
    )
    return {tid: PromptTemplate(tid, raw[tid]) for tid in TEMPLATE_IDS}


_DEFAULT_TEMPLATES: dict[str, PromptTemplate] | None = None


def default_templates() -> dict[str, PromptTemplate]:
    """The six bundled templates, keyed by template_id."""
    global _DEFAULT_TEMPLATES
    if _DEFAULT_TEMPLATES is None:
        _DEFAULT_TEMPLATES = _load_default_templates()
    return _DEFAULT_TEMPLATES


def get_template(template_id: str) -> PromptTemplate:
    try:
        return default_templates()[template_id]
    except KeyError:
        raise KeyError(f"unknown template id {template_id!r}; known: {TEMPLATE_IDS}") from None


def load_templates(path) -> dict[str, PromptTemplate]:
    """Read a user-supplied JSON map {template_id: pattern}."""
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    return {tid: PromptTemplate(tid, pattern) for tid, pattern in raw.items()}


def instantiate_template(template: PromptTemplate, words: Sequence[str]) -> str:
    """Substitute the four words into the template, left to right."""
    if len(words) != 4:
        raise ValueError(f"expected 4 words, got {len(words)}")
    sentence = template.pattern
    for ph, word in zip(_PLACEHOLDERS, words):
        if not word or not word.strip():
            raise ValueError(f"empty word for placeholder {ph}")
        sentence = sentence.replace(ph, word)
    return sentence


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

# The 8 orderings of (a, b, c, d) that preserve an analogical proportion,
# in canonical rank order.  Rank 1 is the identity; ranks 2 and 5 are the
# two named axioms (swap of means, exchange of pairs).  The list is
# closed under the three generators tested in test_prompting.
POSITIVE_ORDERS: tuple[tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3),
    (0, 2, 1, 3),
    (1, 0, 3, 2),
    (1, 3, 0, 2),
    (2, 3, 0, 1),
    (2, 0, 3, 1),
    (3, 2, 1, 0),
    (3, 1, 2, 0),
)

# The remaining 16 orderings, ranked lexicographically by index tuple.
NEGATIVE_ORDERS: tuple[tuple[int, int, int, int], ...] = tuple(
    sorted(p for p in _all_orderings(range(4)) if p not in set(POSITIVE_ORDERS))
)

assert len(NEGATIVE_ORDERS) == 16


@dataclass(frozen=True)
class Permutation:
    """One ordering of the proportion's four slots.

    rank is 1-based within its polarity list, so aggregators like val_k
    can address permutations stably.
    """

    order: tuple[int, int, int, int]
    polarity: str  # "positive" | "negative"
    rank: int

    def apply(self, words: Sequence[str]) -> tuple[str, str, str, str]:
        return tuple(words[i] for i in self.order)  # type: ignore[return-value]


POSITIVE_PERMUTATIONS: tuple[Permutation, ...] = tuple(
    Permutation(order, "positive", i + 1) for i, order in enumerate(POSITIVE_ORDERS)
)
NEGATIVE_PERMUTATIONS: tuple[Permutation, ...] = tuple(
    Permutation(order, "negative", i + 1) for i, order in enumerate(NEGATIVE_ORDERS)
)
ALL_PERMUTATIONS: tuple[Permutation, ...] = POSITIVE_PERMUTATIONS + NEGATIVE_PERMUTATIONS

IDENTITY_PERMUTATION = POSITIVE_PERMUTATIONS[0]


def positive_permutations(a: str, b: str, c: str, d: str) -> list[tuple[str, str, str, str]]:
    """The 8 reorderings of (a,b,c,d) that keep the proportion valid."""
    words = (a, b, c, d)
    return [p.apply(words) for p in POSITIVE_PERMUTATIONS]


def negative_permutations(a: str, b: str, c: str, d: str) -> list[tuple[str, str, str, str]]:
    """The 16 reorderings that break the proportion, in lexicographic rank order."""
    words = (a, b, c, d)
    return [p.apply(words) for p in NEGATIVE_PERMUTATIONS]


def render_candidate_sentences(
    problem: AnalogyProblem,
    template: PromptTemplate,
    permutation: Permutation,
) -> list[list[str]]:
    """Render the n x n closed-world sentence grid for one problem.

    Entry (i, k) mixes candidate head i with candidate tail k: the base
    tuple is (query head, query tail, head_i, tail_k), permuted before
    templating.  Diagonal entries are the intact candidate pairs.
    """
    hq, tq = problem.query.head, problem.query.tail
    grid: list[list[str]] = []
    for cand_i in problem.candidates:
        row = []
        for cand_k in problem.candidates:
            tup = permutation.apply((hq, tq, cand_i.head, cand_k.tail))
            row.append(instantiate_template(template, tup))
        grid.append(row)
    return grid


def grid_sentences(grids: Iterable[list[list[str]]]) -> list[str]:
    """Flatten rendered grids into one sentence list (row-major)."""
    out: list[str] = []
    for grid in grids:
        for row in grid:
            out.extend(row)
    return out
