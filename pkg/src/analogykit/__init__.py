"""analogykit: solving multiple-choice word analogies with
language-model oracles, plus baselines, tuning and analysis reports."""

from .datasets import (
    AnalogyProblem,
    Dataset,
    WordPair,
    dataset_stats,
    expected_random_accuracy,
    load_dataset,
    load_shipped,
    save_dataset,
    split_validation,
    validate_dataset,
)
from .prompting import (
    ALL_PERMUTATIONS,
    MASK_PLACEHOLDER,
    NEGATIVE_PERMUTATIONS,
    POSITIVE_PERMUTATIONS,
    PromptTemplate,
    default_templates,
    instantiate_template,
    negative_permutations,
    positive_permutations,
    render_candidate_sentences,
)
from .scoring import (
    Aggregator,
    PerplexityMatrix,
    ScoringConfig,
    aggregate,
    ap_score,
    build_perplexity_matrix,
    estimate_log_probabilities,
    predict,
    score_mppl,
    score_pmi,
    score_ppl,
)
from .tuning import (
    EvaluationReport,
    GridSpec,
    breakdown_report,
    enumerate_grid,
    evaluate,
    grid_size,
    hypothesis_only_transform,
    misclassification_report,
    sensitivity_sweep,
    tune,
)

__version__ = "0.1.0"

__all__ = [
    "AnalogyProblem",
    "Aggregator",
    "ALL_PERMUTATIONS",
    "Dataset",
    "EvaluationReport",
    "GridSpec",
    "MASK_PLACEHOLDER",
    "NEGATIVE_PERMUTATIONS",
    "POSITIVE_PERMUTATIONS",
    "PerplexityMatrix",
    "PromptTemplate",
    "ScoringConfig",
    "WordPair",
    "aggregate",
    "ap_score",
    "breakdown_report",
    "build_perplexity_matrix",
    "dataset_stats",
    "default_templates",
    "enumerate_grid",
    "estimate_log_probabilities",
    "evaluate",
    "expected_random_accuracy",
    "grid_size",
    "hypothesis_only_transform",
    "instantiate_template",
    "load_dataset",
    "load_shipped",
    "misclassification_report",
    "negative_permutations",
    "positive_permutations",
    "predict",
    "render_candidate_sentences",
    "save_dataset",
    "score_mppl",
    "score_pmi",
    "score_ppl",
    "sensitivity_sweep",
    "split_validation",
    "tune",
    "validate_dataset",
]
