"""AP scoring engine: closed-world probability estimates and the three
base score functions (normalized perplexity, weighted PMI, mPPL),
combined over positive/negative permutations.

All scores live in log space with "higher = more plausible".
Probabilities are normalized from reciprocal perplexities (w = 1/f), the
unique reading under which the log-difference PMI score, mPPL's log
perplexity term, and argmax prediction stay direction-consistent.  A
compatibility flag lets marginals be normalized from raw perplexity
sums instead, since the published numbers may embed that reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .datasets import AnalogyProblem
from .prompting import (
    ALL_PERMUTATIONS,
    Permutation,
    PromptTemplate,
    get_template,
    render_candidate_sentences,
)
from .scorers.base import PPL_MAX, PPL_MIN, Scorer

N_POSITIVE = 8
N_NEGATIVE = 16

MARGINAL_MODES = ("reciprocal", "raw")
MPPL_MARGINAL_SOURCES = ("per-permutation", "identity")
SCORE_FUNCTIONS = ("ppl", "pmi", "mppl")


# ---------------------------------------------------------------------------
# Aggregators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Aggregator:
    """max | mean | min | val_k (k-th element, 1-based)."""

    kind: str
    k: int = 0

    @classmethod
    def parse(cls, spec: str) -> "Aggregator":
        spec = spec.strip()
        if spec in ("max", "mean", "min"):
            return cls(spec)
        if spec.startswith("val_"):
            try:
                k = int(spec[4:])
            except ValueError:
                raise ValueError(f"bad aggregator {spec!r}") from None
            if k < 1:
                raise ValueError(f"val_k needs k >= 1, got {k}")
            return cls("val", k)
        raise ValueError(f"bad aggregator {spec!r}")

    def __str__(self) -> str:
        return f"val_{self.k}" if self.kind == "val" else self.kind


def aggregate(agg: Aggregator | str, xs: Sequence[float]) -> float:
    """Apply one aggregation operation to a non-empty score list."""
    if isinstance(agg, str):
        agg = Aggregator.parse(agg)
    if len(xs) == 0:
        raise ValueError("cannot aggregate an empty list")
    if agg.kind == "max":
        return float(max(xs))
    if agg.kind == "min":
        return float(min(xs))
    if agg.kind == "mean":
        return float(sum(xs) / len(xs))
    if agg.k > len(xs):
        raise ValueError(f"val_{agg.k} out of range for list of {len(xs)}")
    return float(xs[agg.k - 1])


def aggregate_rows(agg: Aggregator | str, matrix: np.ndarray) -> np.ndarray:
    """Aggregate a (m, n) stack down its first axis, one value per column."""
    if isinstance(agg, str):
        agg = Aggregator.parse(agg)
    if agg.kind == "max":
        return matrix.max(axis=0)
    if agg.kind == "min":
        return matrix.min(axis=0)
    if agg.kind == "mean":
        return matrix.mean(axis=0)
    if agg.k > matrix.shape[0]:
        raise ValueError(f"val_{agg.k} out of range for list of {matrix.shape[0]}")
    return matrix[agg.k - 1]


# ---------------------------------------------------------------------------
# Configuration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScoringConfig:
    """Score-function choice plus its hyperparameters.

    Defaults mirror the untuned configuration: alpha terms and beta all
    zero, g = g_pos = val_1, to-as template (under which ppl and mppl
    coincide).
    """

    score_fn: str = "ppl"
    alpha: float = 0.0
    alpha_h: float = 0.0
    alpha_t: float = 0.0
    beta: float = 0.0
    g: str = "val_1"
    g_pos: str = "val_1"
    g_neg: str = "val_1"
    template: str = "to-as"
    marginal_mode: str = "reciprocal"
    mppl_marginals: str = "per-permutation"

    def __post_init__(self):
        if self.score_fn not in SCORE_FUNCTIONS:
            raise ValueError(f"score_fn must be one of {SCORE_FUNCTIONS}")
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError("beta must lie in [0, 1]")
        if self.marginal_mode not in MARGINAL_MODES:
            raise ValueError(f"marginal_mode must be one of {MARGINAL_MODES}")
        if self.mppl_marginals not in MPPL_MARGINAL_SOURCES:
            raise ValueError(f"mppl_marginals must be one of {MPPL_MARGINAL_SOURCES}")
        for name, bound in (("g", 2), ("g_pos", N_POSITIVE), ("g_neg", N_NEGATIVE)):
            agg = Aggregator.parse(getattr(self, name))
            if agg.kind == "val" and agg.k > bound:
                raise ValueError(f"{name}={agg} exceeds list length {bound}")

    def to_dict(self) -> dict:
        return {
            "score_fn": self.score_fn,
            "alpha": self.alpha,
            "alpha_h": self.alpha_h,
            "alpha_t": self.alpha_t,
            "beta": self.beta,
            "g": self.g,
            "g_pos": self.g_pos,
            "g_neg": self.g_neg,
            "template": self.template,
            "marginal_mode": self.marginal_mode,
            "mppl_marginals": self.mppl_marginals,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScoringConfig":
        return cls(**{k: data[k] for k in cls().to_dict() if k in data})


DEFAULT_CONFIG = ScoringConfig()


# ---------------------------------------------------------------------------
# Perplexity matrices and closed-world estimates
# ---------------------------------------------------------------------------


@dataclass
class PerplexityMatrix:
    """n x n grid for one (problem, template, permutation): entry (i, k)
    holds the perplexity of the sentence mixing candidate head i with
    candidate tail k."""

    problem_id: str
    template_id: str
    permutation: Permutation
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        n, m = self.values.shape
        if n != m or n < 2:
            raise ValueError(f"matrix must be square with n >= 2, got {self.values.shape}")
        self.values = np.clip(self.values, PPL_MIN, PPL_MAX)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    @property
    def diagonal(self) -> np.ndarray:
        return np.diagonal(self.values)


def build_perplexity_matrix(
    problem: AnalogyProblem,
    template: PromptTemplate | str,
    permutation: Permutation,
    scorer: Scorer,
) -> PerplexityMatrix:
    """Score the rendered sentence grid; exactly n^2 lookups per call."""
    if isinstance(template, str):
        template = get_template(template)
    grid = render_candidate_sentences(problem, template, permutation)
    n = len(grid)
    flat = [s for row in grid for s in row]
    scores = scorer.score_sentences(flat)
    values = np.array([sc.perplexity for sc in scores], dtype=np.float64).reshape(n, n)
    return PerplexityMatrix(problem.id, template.template_id, permutation, values)


def closed_world_distributions(
    matrix: PerplexityMatrix | np.ndarray,
    marginal_mode: str = "reciprocal",
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Probability tables under the candidates-only closed world.

    Returns (tail_cond, head_cond, tail_marg, head_marg) where
    tail_cond[i, k] = P(tail k | head i) from row-normalized reciprocal
    perplexities, head_cond[i, k] = P(head k | tail i) column-wise, and
    the marginal vectors normalize column/row sums over the grand total.
    Each row of the conditional tables and each marginal vector sums
    to 1.
    """
    values = matrix.values if isinstance(matrix, PerplexityMatrix) else np.asarray(matrix)
    w = 1.0 / values
    tail_cond = w / w.sum(axis=1, keepdims=True)
    head_cond = (w / w.sum(axis=0, keepdims=True)).T
    if marginal_mode == "reciprocal":
        tail_marg = w.sum(axis=0) / w.sum()
        head_marg = w.sum(axis=1) / w.sum()
    elif marginal_mode == "raw":
        tail_marg = values.sum(axis=0) / values.sum()
        head_marg = values.sum(axis=1) / values.sum()
    else:
        raise ValueError(f"marginal_mode must be one of {MARGINAL_MODES}")
    return tail_cond, head_cond, tail_marg, head_marg


def estimate_log_probabilities(
    matrix: PerplexityMatrix | np.ndarray,
    marginal_mode: str = "reciprocal",
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Per-candidate log estimates used by the PMI and mPPL scores.

    Returns four length-n vectors:
      log P(tail_i | head_i)  - diagonal of the row-conditional table
      log P(tail_i)           - tail marginal
      log P(head_i | tail_i)  - diagonal of the column-conditional table
      log P(head_i)           - head marginal
    """
    tail_cond, head_cond, tail_marg, head_marg = closed_world_distributions(
        matrix, marginal_mode
    )
    return (
        np.log(np.diagonal(tail_cond)),
        np.log(tail_marg),
        np.log(np.diagonal(head_cond)),
        np.log(head_marg),
    )


# ---------------------------------------------------------------------------
# Base score functions
# ---------------------------------------------------------------------------


def score_ppl(diag: Sequence[float] | np.ndarray) -> np.ndarray:
    """Normalized perplexity in log space: -ln f_i + ln sum_k f_k."""
    diag = np.asarray(diag, dtype=np.float64)
    if np.any(diag <= 0):
        raise ValueError("perplexities must be positive")
    return -np.log(diag) + np.log(diag.sum())


def score_pmi(
    matrix: PerplexityMatrix | np.ndarray,
    alpha: float,
    g: Aggregator | str,
    marginal_mode: str = "reciprocal",
) -> np.ndarray:
    """Weighted-PMI score: aggregate the tail- and head-side
    conditional-minus-alpha*marginal terms."""
    tail_cond, tail_marg, head_cond, head_marg = estimate_log_probabilities(
        matrix, marginal_mode
    )
    r_tail = tail_cond - alpha * tail_marg
    r_head = head_cond - alpha * head_marg
    return aggregate_rows(g, np.stack([r_tail, r_head]))


def score_mppl(
    matrix: PerplexityMatrix | np.ndarray,
    alpha_h: float,
    alpha_t: float,
    marginal_mode: str = "reciprocal",
    marginal_matrix: PerplexityMatrix | np.ndarray | None = None,
) -> np.ndarray:
    """Marginal-likelihood biased perplexity.

    marginal_matrix optionally supplies the matrix used for the two
    marginal terms (the identity-permutation matrix when mPPL marginals
    are pinned there); by default the scored matrix supplies them.
    """
    values = matrix.values if isinstance(matrix, PerplexityMatrix) else np.asarray(matrix)
    base = score_ppl(np.diagonal(values))
    _, tail_marg, _, head_marg = estimate_log_probabilities(
        matrix if marginal_matrix is None else marginal_matrix, marginal_mode
    )
    return base - alpha_t * tail_marg - alpha_h * head_marg


# ---------------------------------------------------------------------------
# Permutation-aggregated AP score
# ---------------------------------------------------------------------------


@dataclass
class ProblemComponents:
    """Everything config-independent about one (problem, template):
    per-permutation score ingredients, each shaped (24, n).  Row order
    is the canonical permutation order (8 positive then 16 negative)."""

    problem_id: str
    template_id: str
    n: int
    marginal_mode: str
    ppl: np.ndarray
    tail_cond: np.ndarray
    tail_marg: np.ndarray
    head_cond: np.ndarray
    head_marg: np.ndarray
    # marginals of the identity permutation, broadcast row-wise (24, n)
    tail_marg_identity: np.ndarray = field(default=None)  # type: ignore[assignment]
    head_marg_identity: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.tail_marg_identity is None:
            self.tail_marg_identity = np.broadcast_to(
                self.tail_marg[0], self.tail_marg.shape
            ).copy()
            self.head_marg_identity = np.broadcast_to(
                self.head_marg[0], self.head_marg.shape
            ).copy()


def compute_components(
    problem: AnalogyProblem,
    template: PromptTemplate | str,
    scorer: Scorer,
    marginal_mode: str = "reciprocal",
) -> ProblemComponents:
    """Build all 24 permutation matrices and reduce them to the
    ingredient vectors every configuration reuses."""
    if isinstance(template, str):
        template = get_template(template)
    ppl_rows, tc_rows, tm_rows, hc_rows, hm_rows = [], [], [], [], []
    for perm in ALL_PERMUTATIONS:
        matrix = build_perplexity_matrix(problem, template, perm, scorer)
        ppl_rows.append(score_ppl(matrix.diagonal))
        tc, tm, hc, hm = estimate_log_probabilities(matrix, marginal_mode)
        tc_rows.append(tc)
        tm_rows.append(tm)
        hc_rows.append(hc)
        hm_rows.append(hm)
    return ProblemComponents(
        problem_id=problem.id,
        template_id=template.template_id,
        n=problem.n_candidates,
        marginal_mode=marginal_mode,
        ppl=np.array(ppl_rows),
        tail_cond=np.array(tc_rows),
        tail_marg=np.array(tm_rows),
        head_cond=np.array(hc_rows),
        head_marg=np.array(hm_rows),
    )


def base_scores(components: ProblemComponents, config: ScoringConfig) -> np.ndarray:
    """Per-permutation base score stack, shaped (24, n)."""
    if config.score_fn == "ppl":
        return components.ppl
    if config.score_fn == "pmi":
        r_tail = components.tail_cond - config.alpha * components.tail_marg
        r_head = components.head_cond - config.alpha * components.head_marg
        g = Aggregator.parse(config.g)
        if g.kind == "max":
            return np.maximum(r_tail, r_head)
        if g.kind == "min":
            return np.minimum(r_tail, r_head)
        if g.kind == "mean":
            return (r_tail + r_head) / 2.0
        return r_tail if g.k == 1 else r_head
    # mppl
    if config.mppl_marginals == "identity":
        tail_marg = components.tail_marg_identity
        head_marg = components.head_marg_identity
    else:
        tail_marg = components.tail_marg
        head_marg = components.head_marg
    return components.ppl - config.alpha_t * tail_marg - config.alpha_h * head_marg


def combine_permutations(stack: np.ndarray, config: ScoringConfig) -> np.ndarray:
    """AP combination: g_pos over the 8 positive rows minus beta times
    g_neg over the 16 negative rows."""
    pos = aggregate_rows(config.g_pos, stack[:N_POSITIVE])
    neg = aggregate_rows(config.g_neg, stack[N_POSITIVE:])
    return pos - config.beta * neg


def ap_score(problem: AnalogyProblem, config: ScoringConfig, scorer: Scorer) -> np.ndarray:
    """Final per-candidate score vector for one problem."""
    components = compute_components(
        problem, config.template, scorer, config.marginal_mode
    )
    return combine_permutations(base_scores(components, config), config)


def predict(
    problem: AnalogyProblem, config: ScoringConfig, scorer: Scorer
) -> tuple[int, np.ndarray]:
    """Argmax with ties broken toward the lowest candidate index."""
    scores = ap_score(problem, config, scorer)
    return int(np.argmax(scores)), scores


def base_score_single(
    matrix: PerplexityMatrix | np.ndarray, config: ScoringConfig
) -> np.ndarray:
    """Base score of one permutation matrix under the config (used for
    score dumps and by tests)."""
    if config.score_fn == "ppl":
        values = matrix.values if isinstance(matrix, PerplexityMatrix) else np.asarray(matrix)
        return score_ppl(np.diagonal(values))
    if config.score_fn == "pmi":
        return score_pmi(matrix, config.alpha, config.g, config.marginal_mode)
    return score_mppl(matrix, config.alpha_h, config.alpha_t, config.marginal_mode)


def default_config_for(score_fn: str) -> ScoringConfig:
    return replace(DEFAULT_CONFIG, score_fn=score_fn)
