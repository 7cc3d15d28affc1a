"""Hyperparameter grid enumeration, validation tuning, evaluation
reports, and the analysis helpers (breakdowns, hypothesis-only
ablation, sensitivity sweeps, misclassification listings).

Grid evaluation never re-scores sentences: the sentence universe for a
fixed template set is |templates| * 24 * sum(n_i^2), and every
configuration is pure arithmetic over the cached per-permutation score
components.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Iterator, Sequence

import numpy as np

from .baselines import EmbeddingBaseline, PmiBaseline, RandomBaseline
from .datasets import AnalogyProblem, Dataset, WordPair, expected_random_accuracy
from .errors import DataError
from .prompting import MASK_PLACEHOLDER, TEMPLATE_IDS
from .scorers import Scorer, ensure_cached
from .scoring import (
    N_NEGATIVE,
    N_POSITIVE,
    ProblemComponents,
    ScoringConfig,
    aggregate_rows,
    base_scores,
    combine_permutations,
    compute_components,
)

_ALPHA_GRID = (-0.4, -0.2, 0.0, 0.2, 0.4)
_BETA_GRID = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
_G_GRID = ("max", "mean", "min", "val_1", "val_2")
_G_POS_GRID = ("max", "mean", "min") + tuple(f"val_{k}" for k in range(1, N_POSITIVE + 1))
_G_NEG_GRID = ("max", "mean", "min") + tuple(f"val_{k}" for k in range(1, N_NEGATIVE + 1))


@dataclass(frozen=True)
class GridSpec:
    """Search space per hyperparameter; defaults follow the published
    search table."""

    alpha: tuple[float, ...] = _ALPHA_GRID
    alpha_h: tuple[float, ...] = _ALPHA_GRID
    alpha_t: tuple[float, ...] = _ALPHA_GRID
    beta: tuple[float, ...] = _BETA_GRID
    g: tuple[str, ...] = _G_GRID
    g_pos: tuple[str, ...] = _G_POS_GRID
    g_neg: tuple[str, ...] = _G_NEG_GRID
    templates: tuple[str, ...] = TEMPLATE_IDS

    @classmethod
    def from_overrides(cls, overrides: dict) -> "GridSpec":
        base = cls()
        kwargs = {}
        for key in ("alpha", "alpha_h", "alpha_t", "beta"):
            if key in overrides:
                kwargs[key] = tuple(float(v) for v in overrides[key])
        for key in ("g", "g_pos", "g_neg", "templates"):
            if key in overrides:
                kwargs[key] = tuple(str(v) for v in overrides[key])
        unknown = set(overrides) - {
            "alpha", "alpha_h", "alpha_t", "beta", "g", "g_pos", "g_neg", "templates",
        }
        if unknown:
            raise DataError(f"unknown grid override keys: {sorted(unknown)}")
        return replace(base, **kwargs)

    def single(self, config: ScoringConfig) -> "GridSpec":
        """Degenerate spec pinning every parameter to one config."""
        return GridSpec(
            alpha=(config.alpha,),
            alpha_h=(config.alpha_h,),
            alpha_t=(config.alpha_t,),
            beta=(config.beta,),
            g=(config.g,),
            g_pos=(config.g_pos,),
            g_neg=(config.g_neg,),
            templates=(config.template,),
        )


def _middle_combos(score_fn: str, spec: GridSpec) -> list[dict]:
    """Score-function specific parameters enumerated between template
    and the (g_pos, g_neg, beta) block."""
    if score_fn == "ppl":
        return [{}]
    if score_fn == "pmi":
        return [
            {"alpha": a, "g": g}
            for a in spec.alpha
            for g in spec.g
        ]
    if score_fn == "mppl":
        return [
            {"alpha_h": ah, "alpha_t": at}
            for ah in spec.alpha_h
            for at in spec.alpha_t
        ]
    raise DataError(f"unknown score_fn {score_fn!r}")


def enumerate_grid(score_fn: str, spec: GridSpec | None = None) -> Iterator[ScoringConfig]:
    """Cartesian product over the parameters relevant to score_fn, in
    the canonical order (template, fn-specific params, g_pos, g_neg,
    beta).  Tie-breaking everywhere follows this order."""
    spec = spec or GridSpec()
    for template in spec.templates:
        for combo in _middle_combos(score_fn, spec):
            for g_pos in spec.g_pos:
                for g_neg in spec.g_neg:
                    for beta in spec.beta:
                        yield ScoringConfig(
                            score_fn=score_fn,
                            template=template,
                            g_pos=g_pos,
                            g_neg=g_neg,
                            beta=beta,
                            **combo,
                        )


def grid_size(score_fn: str, spec: GridSpec | None = None) -> int:
    spec = spec or GridSpec()
    return (
        len(spec.templates)
        * len(_middle_combos(score_fn, spec))
        * len(spec.g_pos)
        * len(spec.g_neg)
        * len(spec.beta)
    )


# ---------------------------------------------------------------------------
# Evaluation reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProblemResult:
    problem_id: str
    group: str
    difficulty: str | None
    gold: int
    predicted: int
    correct: bool
    flags: tuple[str, ...] = ()


@dataclass
class EvaluationReport:
    dataset_name: str
    split: str
    method: str
    config: ScoringConfig | None
    results: list[ProblemResult]
    accuracy: float
    group_accuracy: dict[str, float]
    flags: tuple[str, ...] = ()
    analytic: bool = False

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset_name,
            "split": self.split,
            "method": self.method,
            "config": self.config.to_dict() if self.config else None,
            "accuracy": self.accuracy,
            "group_accuracy": self.group_accuracy,
            "flags": list(self.flags),
            "analytic": self.analytic,
            "results": [
                {
                    "id": r.problem_id,
                    "group": r.group,
                    "difficulty": r.difficulty,
                    "gold": r.gold,
                    "predicted": r.predicted,
                    "correct": r.correct,
                    "flags": list(r.flags),
                }
                for r in self.results
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EvaluationReport":
        return cls(
            dataset_name=data["dataset"],
            split=data["split"],
            method=data["method"],
            config=ScoringConfig.from_dict(data["config"]) if data.get("config") else None,
            results=[
                ProblemResult(
                    problem_id=r["id"],
                    group=r["group"],
                    difficulty=r.get("difficulty"),
                    gold=r["gold"],
                    predicted=r["predicted"],
                    correct=r["correct"],
                    flags=tuple(r.get("flags", ())),
                )
                for r in data.get("results", [])
            ],
            accuracy=data["accuracy"],
            group_accuracy=dict(data.get("group_accuracy", {})),
            flags=tuple(data.get("flags", ())),
            analytic=data.get("analytic", False),
        )


def _assemble_report(
    dataset: Dataset,
    method: str,
    config: ScoringConfig | None,
    rows: list[ProblemResult],
    flags: tuple[str, ...] = (),
) -> EvaluationReport:
    accuracy = 100.0 * sum(r.correct for r in rows) / len(rows)
    group_acc: dict[str, float] = {}
    for label in sorted({r.group for r in rows}):
        members = [r for r in rows if r.group == label]
        group_acc[label] = 100.0 * sum(r.correct for r in members) / len(members)
    return EvaluationReport(
        dataset_name=dataset.name,
        split=dataset.split,
        method=method,
        config=config,
        results=rows,
        accuracy=accuracy,
        group_accuracy=group_acc,
        flags=flags,
    )


def _dataset_has_placeholder(dataset: Dataset) -> bool:
    return any(
        MASK_PLACEHOLDER in (c.head, c.tail)
        for p in dataset.problems
        for c in p.candidates
    )


def _component_table(
    problems: Sequence[AnalogyProblem],
    templates: Sequence[str],
    scorer: Scorer,
    marginal_mode: str,
    workers: int = 1,
) -> dict[tuple[str, str], ProblemComponents]:
    jobs = [(p, t) for p in problems for t in templates]

    def run(job):
        p, t = job
        return (p.id, t), compute_components(p, t, scorer, marginal_mode)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(run, jobs))
    else:
        pairs = [run(job) for job in jobs]
    return dict(pairs)


def evaluate(
    dataset: Dataset,
    config: ScoringConfig | None,
    scorer_or_baseline,
    workers: int = 1,
    extra_flags: tuple[str, ...] = (),
) -> EvaluationReport:
    """Score every problem and assemble a report.

    scorer_or_baseline is either a sentence scorer (config required) or
    one of the baseline adapters (config ignored).  The random baseline
    is reported analytically: its accuracy is the expected value, and
    there are no per-problem rows.
    """
    if not dataset.problems:
        raise DataError("cannot evaluate an empty dataset")

    if isinstance(scorer_or_baseline, RandomBaseline) or scorer_or_baseline == "random":
        return EvaluationReport(
            dataset_name=dataset.name,
            split=dataset.split,
            method="random",
            config=None,
            results=[],
            accuracy=expected_random_accuracy(dataset),
            group_accuracy={
                label: expected_random_accuracy(Dataset(dataset.name, dataset.split, members))
                for label, members in dataset.groups().items()
            },
            flags=extra_flags,
            analytic=True,
        )

    if isinstance(scorer_or_baseline, (EmbeddingBaseline, PmiBaseline)):
        baseline = scorer_or_baseline
        rows = []
        for p in dataset.problems:
            pred, flags = baseline.predict(p)
            rows.append(
                ProblemResult(p.id, p.group, p.difficulty, p.answer, pred,
                              pred == p.answer, flags)
            )
        return _assemble_report(dataset, baseline.name, None, rows, extra_flags)

    if config is None:
        raise DataError("LM evaluation requires a scoring config")
    scorer = ensure_cached(scorer_or_baseline)
    flags = tuple(extra_flags)
    if _dataset_has_placeholder(dataset) and scorer.identity.mode != "masked":
        flags = flags + ("placeholder-approximated",)
    comps = _component_table(
        dataset.problems, [config.template], scorer, config.marginal_mode, workers
    )
    rows = []
    for p in dataset.problems:
        stack = base_scores(comps[(p.id, config.template)], config)
        scores = combine_permutations(stack, config)
        pred = int(np.argmax(scores))
        rows.append(
            ProblemResult(p.id, p.group, p.difficulty, p.answer, pred, pred == p.answer)
        )
    return _assemble_report(dataset, f"lm:{scorer.identity.cache_key()}", config, rows, flags)


# ---------------------------------------------------------------------------
# Grid search
# ---------------------------------------------------------------------------


def _grid_accuracy_blocks(
    problems: Sequence[AnalogyProblem],
    score_fn: str,
    spec: GridSpec,
    scorer: Scorer,
    marginal_mode: str = "reciprocal",
    workers: int = 1,
) -> Iterator[tuple[str, dict, np.ndarray]]:
    """Yield (template, combo, accuracy array) blocks in enumeration
    order; the array is indexed (g_pos, g_neg, beta) in spec order.

    One pass over this generator evaluates the full grid with exactly
    one base-score computation per (problem, template, combo).
    """
    scorer = ensure_cached(scorer)
    comps = _component_table(problems, spec.templates, scorer, marginal_mode, workers)
    golds = np.array([p.answer for p in problems])
    beta = np.asarray(spec.beta, dtype=np.float64)

    for template in spec.templates:
        for combo in _middle_combos(score_fn, spec):
            rep = ScoringConfig(score_fn=score_fn, template=template, **combo)
            correct = np.zeros((len(spec.g_pos), len(spec.g_neg), len(beta)), dtype=np.int64)
            for p_idx, p in enumerate(problems):
                stack = base_scores(comps[(p.id, template)], rep)
                pos = np.stack([aggregate_rows(g, stack[:N_POSITIVE]) for g in spec.g_pos])
                neg = np.stack([aggregate_rows(g, stack[N_POSITIVE:]) for g in spec.g_neg])
                # (G_P, G_N, B, n) = pos - beta * neg, argmax over candidates
                ap = (
                    pos[:, None, None, :]
                    - beta[None, None, :, None] * neg[None, :, None, :]
                )
                pred = np.argmax(ap, axis=-1)
                correct += pred == golds[p_idx]
            yield template, combo, 100.0 * correct / len(problems)


def grid_accuracies(
    dataset: Dataset,
    score_fn: str,
    spec: GridSpec,
    scorer: Scorer,
    marginal_mode: str = "reciprocal",
    workers: int = 1,
) -> Iterator[tuple[ScoringConfig, float]]:
    """(config, accuracy) for every grid point, in enumeration order."""
    for template, combo, acc in _grid_accuracy_blocks(
        dataset.problems, score_fn, spec, scorer, marginal_mode, workers
    ):
        for i, g_pos in enumerate(spec.g_pos):
            for j, g_neg in enumerate(spec.g_neg):
                for k, b in enumerate(spec.beta):
                    yield (
                        ScoringConfig(
                            score_fn=score_fn,
                            template=template,
                            g_pos=g_pos,
                            g_neg=g_neg,
                            beta=b,
                            **combo,
                        ),
                        float(acc[i, j, k]),
                    )


def tune(
    dataset_validation: Dataset,
    score_fn: str,
    spec: GridSpec | None = None,
    scorer: Scorer | None = None,
    marginal_mode: str = "reciprocal",
    workers: int = 1,
) -> tuple[ScoringConfig, float]:
    """Best-config search; ties go to the earlier enumeration point."""
    if not dataset_validation.problems:
        raise DataError("validation split is empty")
    if scorer is None:
        raise DataError("tune requires a scorer")
    spec = spec or GridSpec()
    best: tuple[float, str, dict, tuple[int, int, int]] | None = None
    for template, combo, acc in _grid_accuracy_blocks(
        dataset_validation.problems, score_fn, spec, scorer, marginal_mode, workers
    ):
        flat = int(np.argmax(acc))  # first maximum in C order = enumeration order
        value = float(acc.ravel()[flat])
        if best is None or value > best[0]:
            best = (value, template, combo, np.unravel_index(flat, acc.shape))
    accuracy, template, combo, (i, j, k) = best
    config = ScoringConfig(
        score_fn=score_fn,
        template=template,
        g_pos=spec.g_pos[i],
        g_neg=spec.g_neg[j],
        beta=spec.beta[k],
        marginal_mode=marginal_mode,
        **combo,
    )
    return config, accuracy


# ---------------------------------------------------------------------------
# Analyses
# ---------------------------------------------------------------------------

BREAKDOWN_KEYS = ("group", "difficulty", "category")


@dataclass(frozen=True)
class BreakdownRow:
    label: str
    size: int
    accuracy: float


def breakdown_report(report: EvaluationReport, by: str = "group") -> list[BreakdownRow]:
    """Accuracy per partition label; sizes sum to the dataset size."""
    if by not in BREAKDOWN_KEYS:
        raise DataError(f"unknown breakdown key {by!r}; expected one of {BREAKDOWN_KEYS}")
    if not report.results:
        raise DataError("report carries no per-problem rows (analytic baseline?)")

    def label_of(r: ProblemResult) -> str:
        if by == "difficulty" and r.difficulty is not None:
            return r.difficulty
        return r.group

    rows = []
    for label in sorted({label_of(r) for r in report.results}):
        members = [r for r in report.results if label_of(r) == label]
        rows.append(
            BreakdownRow(label, len(members),
                         100.0 * sum(r.correct for r in members) / len(members))
        )
    return rows


def hypothesis_only_transform(problem: AnalogyProblem, mask: str) -> AnalogyProblem:
    """Replace every candidate's head or tail with the mask placeholder;
    the query is untouched."""
    if mask not in ("head", "tail"):
        raise DataError(f"mask must be 'head' or 'tail', got {mask!r}")
    masked = tuple(
        WordPair(MASK_PLACEHOLDER, c.tail) if mask == "head" else WordPair(c.head, MASK_PLACEHOLDER)
        for c in problem.candidates
    )
    return AnalogyProblem(
        id=problem.id,
        query=problem.query,
        candidates=masked,
        answer=problem.answer,
        group=problem.group,
        difficulty=problem.difficulty,
    )


def hypothesis_only_dataset(dataset: Dataset, mask: str) -> Dataset:
    return Dataset(
        dataset.name,
        dataset.split,
        [hypothesis_only_transform(p, mask) for p in dataset.problems],
    )


SWEEP_KEYS = ("g_pos", "g_neg", "template")


@dataclass(frozen=True)
class SweepRow:
    value: str
    count: int
    minimum: float
    q1: float
    median: float
    q3: float
    maximum: float


@dataclass
class SweepTable:
    dataset_name: str
    split: str
    score_fn: str
    group_by: str
    grand_mean: float
    rows: list[SweepRow]


def sensitivity_sweep(
    dataset: Dataset,
    score_fn: str,
    spec: GridSpec | None = None,
    scorer: Scorer | None = None,
    group_by: str = "g_pos",
    marginal_mode: str = "reciprocal",
    workers: int = 1,
) -> SweepTable:
    """Distribution of relative test-accuracy improvement over the grand
    mean, grouped by one parameter."""
    if group_by not in SWEEP_KEYS:
        raise DataError(f"group_by must be one of {SWEEP_KEYS}")
    if scorer is None:
        raise DataError("sensitivity sweep requires a scorer")
    spec = spec or GridSpec()
    groups: dict[str, list[float]] = {}
    total, count = 0.0, 0
    for template, combo, acc in _grid_accuracy_blocks(
        dataset.problems, score_fn, spec, scorer, marginal_mode, workers
    ):
        total += float(acc.sum())
        count += acc.size
        if group_by == "template":
            groups.setdefault(template, []).extend(acc.ravel().tolist())
        elif group_by == "g_pos":
            for i, g in enumerate(spec.g_pos):
                groups.setdefault(g, []).extend(acc[i].ravel().tolist())
        else:
            for j, g in enumerate(spec.g_neg):
                groups.setdefault(g, []).extend(acc[:, j].ravel().tolist())
    grand_mean = total / count
    order = {
        "template": spec.templates,
        "g_pos": spec.g_pos,
        "g_neg": spec.g_neg,
    }[group_by]
    rows = []
    for value in order:
        accs = np.asarray(groups.get(value, []))
        if accs.size == 0:
            continue
        if grand_mean == 0.0:
            rel = np.zeros_like(accs)
        else:
            rel = (accs - grand_mean) / grand_mean
        rows.append(
            SweepRow(
                value=value,
                count=int(accs.size),
                minimum=float(rel.min()),
                q1=float(np.percentile(rel, 25)),
                median=float(np.percentile(rel, 50)),
                q3=float(np.percentile(rel, 75)),
                maximum=float(rel.max()),
            )
        )
    return SweepTable(dataset.name, dataset.split, score_fn, group_by, grand_mean, rows)


@dataclass(frozen=True)
class Misclassification:
    problem_id: str
    group: str
    query: tuple[str, str]
    candidates: tuple[tuple[str, str], ...]
    gold: int
    predicted: int


def misclassification_report(
    report: EvaluationReport,
    dataset: Dataset,
    filter_group: str | None = None,
) -> list[Misclassification]:
    """All incorrectly answered problems, optionally restricted to one group."""
    by_id = {p.id: p for p in dataset.problems}
    out = []
    for r in report.results:
        if r.correct:
            continue
        if filter_group is not None and r.group != filter_group:
            continue
        p = by_id.get(r.problem_id)
        if p is None:
            raise DataError(f"report problem {r.problem_id} not present in dataset")
        out.append(
            Misclassification(
                problem_id=p.id,
                group=p.group,
                query=(p.query.head, p.query.tail),
                candidates=tuple((c.head, c.tail) for c in p.candidates),
                gold=r.gold,
                predicted=r.predicted,
            )
        )
    return out
