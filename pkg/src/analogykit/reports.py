"""Report writers: JSON/CSV outputs, run manifests, and the matplotlib
figures rendered next to every delimited table."""

from __future__ import annotations

import csv
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")  # headless rendering only
import matplotlib.pyplot as plt

from .datasets import AnalogyProblem
from .prompting import ALL_PERMUTATIONS
from .scorers import Scorer
from .scoring import ScoringConfig, base_score_single, build_perplexity_matrix, combine_permutations
from .tuning import (
    BreakdownRow,
    EvaluationReport,
    Misclassification,
    SweepTable,
)

import numpy as np


# ---------------------------------------------------------------------------
# Run manifests
# ---------------------------------------------------------------------------


@dataclass
class RunManifest:
    """Provenance written before any result file: enough to re-run the
    command bit-identically against the same cache."""

    command: str
    arguments: list[str]
    seed: int | None
    scorer_identity: str | None
    dataset_hashes: dict[str, str] = field(default_factory=dict)
    output_paths: list[str] = field(default_factory=list)
    timestamp: str = ""

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "arguments": self.arguments,
            "seed": self.seed,
            "scorer_identity": self.scorer_identity,
            "dataset_hashes": self.dataset_hashes,
            "output_paths": self.output_paths,
            "timestamp": self.timestamp,
        }


def file_sha256(path) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            h.update(chunk)
    return h.hexdigest()


def write_manifest(out_dir, manifest: RunManifest) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if not manifest.timestamp:
        manifest.timestamp = time.strftime("%Y-%m-%dT%H:%M:%S%z")
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(manifest.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path


def _provenance(report: EvaluationReport | None = None, seed: int | None = None,
                scorer: str | None = None, grid_hash: str | None = None) -> dict:
    out: dict = {}
    if report is not None:
        out["config"] = report.config.to_dict() if report.config else None
        out["method"] = report.method
    if seed is not None:
        out["seed"] = seed
    if scorer is not None:
        out["scorer_identity"] = scorer
    if grid_hash is not None:
        out["grid_hash"] = grid_hash
    return out


def grid_hash_of(obj) -> str:
    """Stable digest of any JSON-serializable parameter structure."""
    blob = json.dumps(obj, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


# ---------------------------------------------------------------------------
# Evaluation reports
# ---------------------------------------------------------------------------


def write_evaluation_report(report: EvaluationReport, out_dir, seed: int | None = None) -> list[Path]:
    """report.json (full) + predictions.csv (tabular)."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / "report.json"
    payload = report.to_dict()
    payload["provenance"] = _provenance(report, seed=seed, scorer=report.method)
    json_path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n",
                         encoding="utf-8")
    csv_path = out_dir / "predictions.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem_id", "group", "difficulty", "gold", "predicted",
                         "correct", "flags"])
        for r in report.results:
            writer.writerow([r.problem_id, r.group, r.difficulty or "", r.gold,
                             r.predicted, int(r.correct), "|".join(r.flags)])
    return [json_path, csv_path]


def write_breakdown(rows: Sequence[BreakdownRow], by: str, out_dir,
                    title: str = "") -> list[Path]:
    """breakdown.csv + breakdown.png bar chart."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "breakdown.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "size", "accuracy"])
        for row in rows:
            writer.writerow([row.label, row.size, f"{row.accuracy:.4f}"])

    fig, ax = plt.subplots(figsize=(max(4.0, 1.1 * len(rows)), 3.2))
    ax.bar([r.label for r in rows], [r.accuracy for r in rows], color="#4878d0")
    ax.set_ylabel("accuracy (%)")
    ax.set_xlabel(by)
    ax.set_ylim(0, 100)
    if title:
        ax.set_title(title)
    ax.tick_params(axis="x", rotation=30)
    fig.tight_layout()
    png_path = out_dir / "breakdown.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def write_sweep(table: SweepTable, out_dir) -> list[Path]:
    """sweep.csv (box-plot-ready quartiles) + sweep.png box plot."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "sweep.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["value", "count", "min", "q1", "median", "q3", "max",
                         "grand_mean_accuracy"])
        for row in table.rows:
            writer.writerow([
                row.value, row.count,
                f"{row.minimum:.6f}", f"{row.q1:.6f}", f"{row.median:.6f}",
                f"{row.q3:.6f}", f"{row.maximum:.6f}", f"{table.grand_mean:.4f}",
            ])

    stats = [
        {
            "label": row.value,
            "whislo": row.minimum,
            "q1": row.q1,
            "med": row.median,
            "q3": row.q3,
            "whishi": row.maximum,
            "fliers": [],
        }
        for row in table.rows
    ]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.7 * len(stats)), 3.6))
    ax.bxp(stats, showfliers=False)
    ax.axhline(0.0, color="grey", linewidth=0.8, linestyle="--")
    ax.set_ylabel("relative improvement")
    ax.set_xlabel(table.group_by)
    ax.set_title(f"{table.dataset_name} {table.score_fn} by {table.group_by}")
    ax.tick_params(axis="x", rotation=45)
    fig.tight_layout()
    png_path = out_dir / "sweep.png"
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def write_misclassifications(rows: Sequence[Misclassification], out_dir) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "errors.csv"
    with open(csv_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem_id", "group", "query_head", "query_tail",
                         "candidates", "gold", "predicted"])
        for row in rows:
            cands = " | ".join(f"{h}:{t}" for h, t in row.candidates)
            writer.writerow([row.problem_id, row.group, row.query[0], row.query[1],
                             cands, row.gold, row.predicted])
    return [csv_path]


def dump_scores_csv(
    problems: Sequence[AnalogyProblem],
    config: ScoringConfig,
    scorer: Scorer,
    path,
) -> Path:
    """Per-permutation base scores plus the final AP scores, one row per
    (problem, candidate, permutation)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["problem_id", "candidate_index", "permutation_polarity",
                         "permutation_rank", "base_score", "ap_score", "predicted"])
        for problem in problems:
            stack = []
            for perm in ALL_PERMUTATIONS:
                matrix = build_perplexity_matrix(problem, config.template, perm, scorer)
                stack.append(base_score_single(matrix, config))
            ap = combine_permutations(np.array(stack), config)
            predicted = int(np.argmax(ap))
            for perm, base in zip(ALL_PERMUTATIONS, stack):
                for i in range(len(problem.candidates)):
                    writer.writerow([
                        problem.id, i, perm.polarity, perm.rank,
                        f"{base[i]:.10g}", f"{ap[i]:.10g}", predicted,
                    ])
    return path


def write_tuned_config(config: ScoringConfig, accuracy: float, out_dir,
                       watermark: str | None = None, extra: dict | None = None) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    payload = {
        "config": config.to_dict(),
        "validation_accuracy": accuracy,
    }
    if watermark:
        payload["watermark"] = watermark
    if extra:
        payload.update(extra)
    path = out_dir / "tuned.json"
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path


def print_report_summary(report: EvaluationReport, stream=None) -> None:
    stream = stream or sys.stdout
    marker = " (analytic)" if report.analytic else ""
    print(
        f"{report.dataset_name}/{report.split} {report.method}: "
        f"accuracy {report.accuracy:.1f}{marker}",
        file=stream,
    )
    for label, acc in report.group_accuracy.items():
        print(f"  {label}: {acc:.1f}", file=stream)
