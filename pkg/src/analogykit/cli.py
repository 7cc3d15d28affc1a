"""Command-line entry point.

Subcommands: eval, tune, build-benchmark, split, train-ngram,
count-cooc, ablate, sweep, report.  Every run writes a manifest before
its results.  Exit codes: 0 success, 2 usage, 3 data error, 4
scorer/transport error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from pathlib import Path

from . import __version__
from .baselines import (
    EmbeddingBaseline,
    PmiBaseline,
    RandomBaseline,
    count_cooccurrence_file,
    load_cooccurrence,
    load_embeddings,
    save_cooccurrence,
)
from .builder import ExclusionPolicy, build_problems, load_relation_corpus
from .datasets import (
    DATASET_NAMES,
    Dataset,
    dataset_stats,
    load_dataset,
    load_shipped,
    save_dataset,
    shipped_dataset_path,
    split_validation,
)
from .errors import DataError, ScorerError
from .reports import (
    RunManifest,
    dump_scores_csv,
    file_sha256,
    grid_hash_of,
    print_report_summary,
    write_breakdown,
    write_evaluation_report,
    write_manifest,
    write_misclassifications,
    write_sweep,
    write_tuned_config,
)
from .scorers import (
    CachedScorer,
    LengthNormalizedScorer,
    NgramScorer,
    RemoteScorer,
    ScoreCache,
    train_ngram_file,
)
from .scoring import ScoringConfig
from .tuning import (
    EvaluationReport,
    GridSpec,
    breakdown_report,
    evaluate,
    hypothesis_only_dataset,
    misclassification_report,
    sensitivity_sweep,
    tune,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_SCORER = 4


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", type=Path, default=Path("runs/latest"),
                   help="output directory")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)


def _add_dataset_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dataset", required=True,
                   help="shipped name (sat|u2|u4|google|bats) or a JSONL path")
    p.add_argument("--split", default="test", choices=("validation", "test", "full"))


def _add_scorer_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--scorer", help="kind:locator, e.g. ngram:model.bin or remote:URL")
    p.add_argument("--endpoint", help="shorthand for --scorer remote:URL")
    p.add_argument("--length-normalize", action="store_true",
                   help="score with per-token geometric-mean perplexity")
    p.add_argument("--marginal-mode", default="reciprocal",
                   choices=("reciprocal", "raw"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="analogykit",
        description="Solve multiple-choice word analogies with LM oracles and baselines.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a dataset with a scorer or baseline")
    _add_dataset_args(p)
    _add_scorer_args(p)
    p.add_argument("--baseline", choices=("random", "pmi", "embedding"),
                   help="evaluate a baseline instead of an LM scorer")
    p.add_argument("--embeddings", type=Path, help="word2vec-style text table")
    p.add_argument("--counts", type=Path, help="co-occurrence counts file")
    p.add_argument("--score-fn", default="ppl", choices=("ppl", "pmi", "mppl"))
    p.add_argument("--config", default="default",
                   help="'default' or a JSON config path (tuned.json accepted)")
    p.add_argument("--dump-scores", action="store_true",
                   help="also write per-permutation base scores to scores.csv")
    _add_common(p)

    p = sub.add_parser("tune", help="grid-search hyperparameters on a validation split")
    _add_dataset_args(p)
    _add_scorer_args(p)
    p.add_argument("--score-fn", default="ppl", choices=("ppl", "pmi", "mppl"))
    p.add_argument("--grid", type=Path, help="JSON file overriding the default grid")
    p.add_argument("--allow-test-tuning", action="store_true",
                   help="permit tuning on test/full splits (report is watermarked)")
    _add_common(p)

    p = sub.add_parser("build-benchmark", help="build problems from relation files")
    p.add_argument("--manifest", type=Path, required=True,
                   help="JSON manifest listing relation files")
    p.add_argument("--exclude", nargs="*", default=[],
                   help="relation ids excluded from cross-relation negatives")
    p.add_argument("--name", default="custom", choices=DATASET_NAMES)
    _add_common(p)

    p = sub.add_parser("split", help="split a dataset into validation/test")
    p.add_argument("--dataset", required=True, help="JSONL path")
    p.add_argument("--name", default="custom", choices=DATASET_NAMES)
    p.add_argument("--fraction", type=float, default=0.1)
    _add_common(p)

    p = sub.add_parser("train-ngram", help="train the n-gram scorer")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--delta", type=float, default=1.0)
    _add_common(p)

    p = sub.add_parser("count-cooc", help="count corpus co-occurrences")
    p.add_argument("--corpus", type=Path, required=True)
    p.add_argument("--window", type=int, default=10)
    _add_common(p)

    p = sub.add_parser("ablate", help="hypothesis-only ablation (mask head or tail)")
    p.add_argument("mask", choices=("head", "tail"))
    _add_dataset_args(p)
    _add_scorer_args(p)
    p.add_argument("--score-fn", default="ppl", choices=("ppl", "pmi", "mppl"))
    p.add_argument("--config", default="default")
    _add_common(p)

    p = sub.add_parser("sweep", help="parameter sensitivity sweep with box plots")
    p.add_argument("group_by", choices=("g_pos", "g_neg", "template"))
    _add_dataset_args(p)
    _add_scorer_args(p)
    p.add_argument("--score-fn", default="mppl", choices=("ppl", "pmi", "mppl"))
    p.add_argument("--grid", type=Path)
    _add_common(p)

    p = sub.add_parser("report", help="derive breakdown/error listings from a report")
    p.add_argument("kind", choices=("breakdown", "errors"))
    p.add_argument("--report", type=Path, required=True, help="report.json path")
    p.add_argument("--by", default="group", choices=("group", "difficulty", "category"))
    p.add_argument("--dataset", help="dataset for error listings (name or path)")
    p.add_argument("--split", default="test", choices=("validation", "test", "full"))
    p.add_argument("--filter-group", default=None)
    _add_common(p)

    return parser


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


def _load_any_dataset(spec: str, split: str) -> tuple[Dataset, Path | None]:
    if spec in DATASET_NAMES and spec != "custom":
        ds = load_shipped(spec, split)
        path = None if split == "full" else shipped_dataset_path(spec, split)
        return ds, path
    path = Path(spec)
    if not path.exists():
        raise DataError(f"dataset {spec!r} is neither a shipped name nor a file")
    return load_dataset(path, "custom", split=split), path


def _build_scorer(args, replace_placeholder: bool = False) -> CachedScorer:
    locator = args.scorer
    if locator is None and args.endpoint:
        locator = f"remote:{args.endpoint}"
    if locator is None:
        raise DataError("no scorer given; use --scorer kind:locator or --endpoint")
    kind, _, rest = locator.partition(":")
    if kind == "ngram":
        inner = NgramScorer.load(rest)
    elif kind == "remote":
        inner = RemoteScorer(rest)
        if replace_placeholder and inner.mode == "masked":
            inner = RemoteScorer(rest, replace_placeholder=True)
    else:
        raise DataError(f"unknown scorer kind {kind!r} (expected ngram|remote)")
    cache_dir = os.environ.get("ANALOGY_CACHE_DIR")
    cache = ScoreCache(Path(cache_dir) / "scores.bin") if cache_dir else ScoreCache()
    cached = CachedScorer(inner, cache)
    if args.length_normalize:
        return CachedScorer(LengthNormalizedScorer(cached))
    return cached


def _load_config(spec: str, score_fn: str, marginal_mode: str) -> tuple[ScoringConfig, tuple[str, ...]]:
    flags: tuple[str, ...] = ()
    if spec == "default":
        config = ScoringConfig(score_fn=score_fn, marginal_mode=marginal_mode)
    else:
        with open(spec, encoding="utf-8") as fh:
            payload = json.load(fh)
        raw = payload.get("config", payload)
        config = ScoringConfig.from_dict(raw)
        if payload.get("watermark"):
            flags = (str(payload["watermark"]),)
    return config, flags


def _manifest_for(args, command: str, scorer_identity: str | None,
                  dataset_paths: list[Path | None]) -> RunManifest:
    hashes = {}
    for path in dataset_paths:
        if path is not None and Path(path).exists():
            hashes[str(path)] = file_sha256(path)
    return RunManifest(
        command=command,
        arguments=sys.argv[1:],
        seed=getattr(args, "seed", None),
        scorer_identity=scorer_identity,
        dataset_hashes=hashes,
    )


def _grid_from(args) -> GridSpec:
    if getattr(args, "grid", None):
        with open(args.grid, encoding="utf-8") as fh:
            return GridSpec.from_overrides(json.load(fh))
    return GridSpec()


def _write_resolved_grid(spec: GridSpec, out_dir) -> Path:
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    grid_path = path / "grid.json"
    grid_path.write_text(json.dumps(dataclasses.asdict(spec), indent=2) + "\n",
                         encoding="utf-8")
    return grid_path


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_eval(args) -> int:
    dataset, ds_path = _load_any_dataset(args.dataset, args.split)
    if args.baseline == "random":
        method = RandomBaseline()
        identity = "random"
        config, flags = None, ()
    elif args.baseline == "embedding":
        if not args.embeddings:
            raise DataError("--baseline embedding requires --embeddings")
        method = EmbeddingBaseline(load_embeddings(args.embeddings))
        identity = method.name
        config, flags = None, ()
    elif args.baseline == "pmi":
        if not args.counts:
            raise DataError("--baseline pmi requires --counts")
        method = PmiBaseline(load_cooccurrence(args.counts))
        identity = method.name
        config, flags = None, ()
    else:
        method = _build_scorer(args)
        identity = method.identity.cache_key()
        config, flags = _load_config(args.config, args.score_fn, args.marginal_mode)
    manifest = _manifest_for(args, "eval", identity, [ds_path])
    write_manifest(args.out, manifest)
    report = evaluate(dataset, config, method, workers=args.workers, extra_flags=flags)
    paths = write_evaluation_report(report, args.out, seed=args.seed)
    if getattr(args, "dump_scores", False):
        if config is None:
            raise DataError("--dump-scores applies to LM evaluation only")
        paths.append(dump_scores_csv(dataset.problems, config, method,
                                     Path(args.out) / "scores.csv"))
    manifest.output_paths = [str(p) for p in paths]
    write_manifest(args.out, manifest)
    print_report_summary(report)
    return EXIT_OK


def _cmd_tune(args) -> int:
    if args.split != "validation" and not args.allow_test_tuning:
        raise DataError(
            f"tuning on split {args.split!r} requires --allow-test-tuning"
        )
    dataset, ds_path = _load_any_dataset(args.dataset, args.split)
    scorer = _build_scorer(args)
    spec = _grid_from(args)
    manifest = _manifest_for(args, "tune", scorer.identity.cache_key(), [ds_path])
    write_manifest(args.out, manifest)
    grid_path = _write_resolved_grid(spec, args.out)
    config, accuracy = tune(dataset, args.score_fn, spec, scorer,
                            marginal_mode=args.marginal_mode, workers=args.workers)
    watermark = None if args.split == "validation" else "tuned-on-full-data"
    path = write_tuned_config(
        config, accuracy, args.out, watermark=watermark,
        extra={
            "dataset": dataset.name,
            "split": dataset.split,
            "scorer_identity": scorer.identity.cache_key(),
            "grid_hash": grid_hash_of(dataclasses.asdict(spec)),
        },
    )
    manifest.output_paths = [str(path), str(grid_path)]
    write_manifest(args.out, manifest)
    print(f"best config ({args.score_fn}) accuracy {accuracy:.1f} -> {path}")
    return EXIT_OK


def _cmd_build_benchmark(args) -> int:
    files = load_relation_corpus(args.manifest)
    policy = ExclusionPolicy(frozenset(args.exclude))
    manifest = _manifest_for(args, "build-benchmark", None, [args.manifest])
    write_manifest(args.out, manifest)
    dataset = build_problems(files, policy, args.seed, name=args.name)
    out_path = Path(args.out) / "problems.jsonl"
    save_dataset(dataset, out_path)
    manifest.output_paths = [str(out_path)]
    write_manifest(args.out, manifest)
    stats = dataset_stats(dataset)
    print(f"built {stats.size} problems over {stats.group_count} groups -> {out_path}")
    return EXIT_OK


def _cmd_split(args) -> int:
    path = Path(args.dataset)
    dataset = load_dataset(path, args.name, split="full")
    manifest = _manifest_for(args, "split", None, [path])
    write_manifest(args.out, manifest)
    val, test = split_validation(dataset, args.fraction, args.seed)
    val_path = Path(args.out) / "validation.jsonl"
    test_path = Path(args.out) / "test.jsonl"
    save_dataset(val, val_path)
    save_dataset(test, test_path)
    manifest.output_paths = [str(val_path), str(test_path)]
    write_manifest(args.out, manifest)
    print(f"split {len(dataset)} -> {len(val)} validation / {len(test)} test")
    return EXIT_OK


def _cmd_train_ngram(args) -> int:
    manifest = _manifest_for(args, "train-ngram", None, [args.corpus])
    write_manifest(args.out, manifest)
    scorer = train_ngram_file(args.corpus, args.order, args.delta)
    out_path = Path(args.out) / "model.bin"
    scorer.save(out_path)
    manifest.output_paths = [str(out_path)]
    write_manifest(args.out, manifest)
    print(f"trained order-{args.order} model ({len(scorer.vocabulary)} words) -> {out_path}")
    return EXIT_OK


def _cmd_count_cooc(args) -> int:
    manifest = _manifest_for(args, "count-cooc", None, [args.corpus])
    write_manifest(args.out, manifest)
    counts = count_cooccurrence_file(args.corpus, args.window)
    out_path = Path(args.out) / "counts.bin"
    save_cooccurrence(counts, out_path)
    manifest.output_paths = [str(out_path)]
    write_manifest(args.out, manifest)
    print(f"counted {counts.total_pairs} pair occurrences "
          f"({len(counts.token_counts)} word types) -> {out_path}")
    return EXIT_OK


def _cmd_ablate(args) -> int:
    dataset, ds_path = _load_any_dataset(args.dataset, args.split)
    masked = hypothesis_only_dataset(dataset, args.mask)
    scorer = _build_scorer(args, replace_placeholder=True)
    config, flags = _load_config(args.config, args.score_fn, args.marginal_mode)
    manifest = _manifest_for(args, f"ablate-{args.mask}", scorer.identity.cache_key(),
                             [ds_path])
    write_manifest(args.out, manifest)
    report = evaluate(masked, config, scorer, workers=args.workers,
                      extra_flags=flags + (f"hypothesis-only:{args.mask}",))
    paths = write_evaluation_report(report, args.out, seed=args.seed)
    manifest.output_paths = [str(p) for p in paths]
    write_manifest(args.out, manifest)
    print_report_summary(report)
    return EXIT_OK


def _cmd_sweep(args) -> int:
    dataset, ds_path = _load_any_dataset(args.dataset, args.split)
    scorer = _build_scorer(args)
    spec = _grid_from(args)
    manifest = _manifest_for(args, f"sweep-{args.group_by}",
                             scorer.identity.cache_key(), [ds_path])
    write_manifest(args.out, manifest)
    grid_path = _write_resolved_grid(spec, args.out)
    table = sensitivity_sweep(dataset, args.score_fn, spec, scorer,
                              group_by=args.group_by,
                              marginal_mode=args.marginal_mode,
                              workers=args.workers)
    paths = write_sweep(table, args.out) + [grid_path]
    manifest.output_paths = [str(p) for p in paths]
    write_manifest(args.out, manifest)
    print(f"swept {sum(r.count for r in table.rows)} configs; "
          f"grand mean accuracy {table.grand_mean:.1f}")
    return EXIT_OK


def _cmd_report(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        report = EvaluationReport.from_dict(json.load(fh))
    manifest = _manifest_for(args, f"report-{args.kind}", None, [args.report])
    write_manifest(args.out, manifest)
    if args.kind == "breakdown":
        rows = breakdown_report(report, by=args.by)
        paths = write_breakdown(rows, args.by, args.out,
                                title=f"{report.dataset_name} by {args.by}")
    else:
        if not args.dataset:
            raise DataError("error listings need --dataset to recover the words")
        dataset, _ = _load_any_dataset(args.dataset, args.split)
        rows = misclassification_report(report, dataset, filter_group=args.filter_group)
        paths = write_misclassifications(rows, args.out)
    manifest.output_paths = [str(p) for p in paths]
    write_manifest(args.out, manifest)
    print(f"wrote {', '.join(str(p) for p in paths)}")
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "tune": _cmd_tune,
    "build-benchmark": _cmd_build_benchmark,
    "split": _cmd_split,
    "train-ngram": _cmd_train_ngram,
    "count-cooc": _cmd_count_cooc,
    "ablate": _cmd_ablate,
    "sweep": _cmd_sweep,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ScorerError as exc:
        print(f"scorer error: {exc}", file=sys.stderr)
        return EXIT_SCORER
    except OSError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
