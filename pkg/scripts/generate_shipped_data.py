#!/usr/bin/env python3
"""Regenerate the bundled analogy datasets.

The five datasets ship with fixed validation/test splits whose sizes,
group counts, candidate counts, and expected random accuracies match
the published statistics table.  The original educational sources are
not redistributable, so the bundled files are constructed here from the
relation banks in word_banks.py: google/bats-style sets go through the
package's benchmark builder (one gold + three controlled negatives),
and the psychometric-style sets (sat/u2/u4) are assembled with
cross-family distractors.  Everything is deterministic in the seeds
below.

Usage: python3 scripts/generate_shipped_data.py [--out DIR]
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import word_banks as wb

from analogykit.builder import ExclusionPolicy, RelationFile, build_problems
from analogykit.datasets import (
    AnalogyProblem,
    Dataset,
    WordPair,
    dataset_stats,
    expected_random_accuracy,
    save_dataset,
    validate_dataset,
)

MASTER_SEED = 20210426

# Test-split candidate-count mixes chosen so the expected random
# accuracy lands on the published Random row (U2 23.6, U4 24.2).
U2_TEST_COUNTS = {3: 12, 4: 132, 5: 84}     # -> 23.597
U2_VAL_COUNTS = {3: 1, 4: 14, 5: 9}
U4_TEST_COUNTS = {3: 30, 4: 283, 5: 119}    # -> 24.201
U4_VAL_COUNTS = {3: 3, 4: 32, 5: 13}

TARGETS = {
    "sat": (37, 337, 2, 20.0),
    "u2": (24, 228, 9, 23.6),
    "u4": (48, 432, 5, 24.2),
    "google": (50, 500, 2, 25.0),
    "bats": (199, 1799, 3, 25.0),
}


def _pairs(raw) -> tuple[WordPair, ...]:
    seen, out = set(), []
    for h, t in raw:
        p = WordPair(h, t)
        if p.key() not in seen:
            seen.add(p.key())
            out.append(p)
    return tuple(out)


def _rel(relation_id: str, category: str, raw) -> RelationFile:
    return RelationFile(relation_id, category, _pairs(raw))


# ---------------------------------------------------------------------------
# Relation inventories
# ---------------------------------------------------------------------------


def morphological_relations(category: str) -> list[RelationFile]:
    nouns = sorted(set(wb.NOUNS))
    verbs = sorted(set(wb.VERBS))
    return [
        _rel("plural-regular", category, [(n, wb.pluralize(n)) for n in nouns]),
        _rel("plural-irregular", category, wb.IRREGULAR_PLURALS),
        _rel("verb-third-person", category, [(v, wb.third_person(v)) for v in verbs]),
        _rel("verb-past-regular", category, [(v, wb.past_tense(v)) for v in verbs]),
        _rel("verb-past-irregular", category, wb.IRREGULAR_PASTS),
        _rel("verb-gerund", category, [(v, wb.gerund(v)) for v in verbs]),
        _rel("adj-comparative", category, [(a, wb.comparative(a)) for a in sorted(set(wb.GRADABLE_ADJS))]),
        _rel("adj-superlative", category, [(a, wb.superlative(a)) for a in sorted(set(wb.GRADABLE_ADJS))]),
        _rel("adj-adverb", category, [(a, wb.adverb(a)) for a in sorted(set(wb.ADVERB_ADJS))]),
        _rel("adj-ness", category, [(a, wb.nounness(a)) for a in sorted(set(wb.NESS_ADJS))]),
        _rel("un-prefix", category, [(a, "un" + a) for a in sorted(set(wb.UN_ADJS))]),
        _rel("re-prefix", category, [(v, "re" + v) for v in sorted(set(wb.RE_VERBS))]),
        _rel("less-suffix", category, [(n, n + "less") for n in sorted(set(wb.LESS_NOUNS))]),
        _rel("able-suffix", category, [(v, v + "able" if not v.endswith("e") else v[:-1] + "able")
                                       for v in sorted(set(wb.ABLE_VERBS))]),
        _rel("er-agent", category, [(v, v + v[-1] + "er" if wb._doubles_final(v)
                                     else (v + "r" if v.endswith("e") else v + "er"))
                                    for v in sorted(set(wb.AGENT_VERBS))]),
    ]


def encyclopedic_relations(category: str) -> list[RelationFile]:
    return [
        _rel("country-capital", category, wb.COUNTRY_CAPITAL),
        _rel("country-currency", category, wb.COUNTRY_CURRENCY),
        _rel("country-language", category, wb.COUNTRY_LANGUAGE),
        _rel("country-demonym", category, wb.COUNTRY_DEMONYM),
        _rel("state-capital", category, wb.STATE_CAPITAL),
        _rel("animal-young", category, wb.ANIMAL_YOUNG),
        _rel("animal-sound", category, wb.ANIMAL_SOUND),
        _rel("animal-home", category, wb.ANIMAL_HOME),
        _rel("male-female", category, wb.MALE_FEMALE),
        _rel("job-workplace", category, wb.JOB_WORKPLACE),
        _rel("instrument-player", category, wb.INSTRUMENT_PLAYER),
        _rel("thing-color", category, wb.THING_COLOR),
        _rel("number-ordinal", category, wb.NUMBER_ORDINAL),
    ]


def lexicographic_relations(category: str) -> list[RelationFile]:
    return [
        _rel("antonyms-gradable", category, wb.ANTONYMS_GRADABLE),
        _rel("antonyms-binary", category, wb.ANTONYMS_BINARY),
        _rel("synonyms-common", category, wb.SYNONYMS_COMMON),
        _rel("synonyms-intensity", category, wb.SYNONYMS_INTENSITY),
        _rel("hypernyms-animals", category, wb.HYPERNYMS_ANIMALS),
        _rel("hypernyms-misc", category, wb.HYPERNYMS_MISC),
        _rel("hyponyms", category, wb.HYPONYMS),
        _rel("meronyms", category, wb.MERONYMS),
        _rel("member-collection", category, wb.MEMBER_COLLECTION),
    ]


# Never sampled as cross-relation negative sources: country-of style
# relations plus the multi-relation lexicographic families.
EXCLUDED_SOURCES = ExclusionPolicy.of(
    "country-capital", "country-currency", "country-language",
    "country-demonym", "state-capital",
    "antonyms-gradable", "antonyms-binary",
    "synonyms-common", "synonyms-intensity",
    "meronyms", "hyponyms",
)


# ---------------------------------------------------------------------------
# Builder-backed datasets (google / bats)
# ---------------------------------------------------------------------------


def _largest_remainder(total: int, weights: list[int]) -> list[int]:
    shares = [w * total / sum(weights) for w in weights]
    floors = [int(s) for s in shares]
    remainder = total - sum(floors)
    order = sorted(range(len(weights)), key=lambda i: shares[i] - floors[i], reverse=True)
    for i in order[:remainder]:
        floors[i] += 1
    return floors


def _trim_and_split(
    dataset: Dataset,
    name: str,
    category_quota: dict[str, int],
    val_total: int,
    rng: random.Random,
) -> tuple[Dataset, Dataset]:
    """Trim per-category problem counts to quota, then carve the
    validation split per category (largest remainder of val_total)."""
    by_cat = dataset.groups()
    cats = sorted(category_quota)
    kept: dict[str, list[AnalogyProblem]] = {}
    for cat in cats:
        members = by_cat[cat]
        quota = category_quota[cat]
        if len(members) < quota:
            raise SystemExit(f"{name}: category {cat} has {len(members)} < quota {quota}")
        idx = sorted(rng.sample(range(len(members)), quota))
        kept[cat] = [members[i] for i in idx]
    val_quota = dict(zip(cats, _largest_remainder(val_total, [category_quota[c] for c in cats])))
    val_problems, test_problems = [], []
    for cat in cats:
        members = kept[cat]
        chosen = set(rng.sample(range(len(members)), val_quota[cat]))
        for i, p in enumerate(members):
            (val_problems if i in chosen else test_problems).append(p)
    return (
        Dataset(name, "validation", val_problems),
        Dataset(name, "test", test_problems),
    )


def make_google() -> tuple[Dataset, Dataset]:
    rng = random.Random(MASTER_SEED + 1)
    semantic = [
        _rel("country-capital", "semantic", wb.COUNTRY_CAPITAL),
        _rel("country-currency", "semantic", wb.COUNTRY_CURRENCY),
        _rel("state-capital", "semantic", wb.STATE_CAPITAL),
        _rel("family", "semantic", wb.MALE_FEMALE),
        _rel("animal-young", "semantic", wb.ANIMAL_YOUNG),
        _rel("job-workplace", "semantic", wb.JOB_WORKPLACE),
    ]
    nouns = sorted(set(wb.NOUNS))
    verbs = sorted(set(wb.VERBS))
    adjs = sorted(set(wb.GRADABLE_ADJS))
    morphological = [
        _rel("plural", "morphological", [(n, wb.pluralize(n)) for n in rng.sample(nouns, 110)]),
        _rel("comparative", "morphological", [(a, wb.comparative(a)) for a in adjs]),
        _rel("superlative", "morphological", [(a, wb.superlative(a)) for a in adjs]),
        _rel("past-tense", "morphological", [(v, wb.past_tense(v)) for v in rng.sample(verbs, 80)]),
        _rel("gerund", "morphological", [(v, wb.gerund(v)) for v in rng.sample(verbs, 80)]),
    ]
    policy = ExclusionPolicy.of("country-capital", "country-currency", "state-capital")
    full = build_problems(semantic + morphological, policy, MASTER_SEED + 2, name="google")
    return _trim_and_split(full, "google", {"semantic": 170, "morphological": 380},
                           val_total=50, rng=rng)


def make_bats() -> tuple[Dataset, Dataset]:
    rng = random.Random(MASTER_SEED + 3)
    files = (
        lexicographic_relations("lexicographic")
        + encyclopedic_relations("encyclopedic")
        + morphological_relations("morphological")
    )
    full = build_problems(files, EXCLUDED_SOURCES, MASTER_SEED + 4, name="bats")
    sizes = {cat: len(members) for cat, members in full.groups().items()}
    cats = sorted(sizes)
    quotas = dict(zip(cats, _largest_remainder(1998, [sizes[c] for c in cats])))
    return _trim_and_split(full, "bats", quotas, val_total=199, rng=rng)


# ---------------------------------------------------------------------------
# Psychometric-style datasets (sat / u2 / u4)
# ---------------------------------------------------------------------------


def _family(relation_id: str) -> str:
    return relation_id.split("-")[0]


def _psychometric_pool(include_morphology: bool) -> list[RelationFile]:
    rels = lexicographic_relations("lex") + encyclopedic_relations("enc")
    if include_morphology:
        rels += morphological_relations("morph")
    return rels


def _build_psychometric(
    name: str,
    seed: int,
    plans: dict[str, list[tuple[str, int]]],
    relations: list[RelationFile],
    with_difficulty: bool,
) -> tuple[Dataset, Dataset]:
    """plans: split -> ordered list of (group label, candidate count)."""
    rng = random.Random(seed)
    pool = [(r.relation_id, p) for r in relations for p in r.pairs]
    by_relation = {r.relation_id: r for r in relations}
    rel_ids = sorted(by_relation)

    datasets = {}
    counter = 0
    for split, plan in plans.items():
        problems = []
        for group, n in plan:
            rel = by_relation[rel_ids[rng.randrange(len(rel_ids))]]
            query, gold = rng.sample(list(rel.pairs), 2)
            correct_keys = {p.key() for p in rel.pairs}
            fam = _family(rel.relation_id)
            chosen: list[WordPair] = []
            taken = {gold.key(), query.key()}
            guard = 0
            while len(chosen) < n - 1:
                guard += 1
                if guard > 10_000:
                    raise SystemExit(f"{name}: distractor sampling stuck for {rel.relation_id}")
                rel_id, pair = pool[rng.randrange(len(pool))]
                if _family(rel_id) == fam:
                    continue
                if pair.key() in correct_keys or pair.key() in taken:
                    continue
                chosen.append(pair)
                taken.add(pair.key())
            candidates = [gold] + chosen
            order = list(range(n))
            rng.shuffle(order)
            counter += 1
            problems.append(
                AnalogyProblem(
                    id=f"{name}/{split}/{counter:04d}",
                    query=query,
                    candidates=tuple(candidates[i] for i in order),
                    answer=order.index(0),
                    group=group,
                    difficulty=group if with_difficulty else None,
                )
            )
        datasets[split] = Dataset(name, split, problems)
    return datasets["validation"], datasets["test"]


def _plan(groups: list[str], group_sizes: list[int], count_multiset: dict[int, int],
          rng: random.Random) -> list[tuple[str, int]]:
    labels = [g for g, size in zip(groups, group_sizes) for _ in range(size)]
    counts = [n for n, c in sorted(count_multiset.items()) for _ in range(c)]
    assert len(labels) == len(counts), (len(labels), len(counts))
    rng.shuffle(counts)
    return list(zip(labels, counts))


def _even_sizes(total: int, k: int) -> list[int]:
    base, rem = divmod(total, k)
    return [base + (1 if i < rem else 0) for i in range(k)]


def make_sat() -> tuple[Dataset, Dataset]:
    rng = random.Random(MASTER_SEED + 5)
    groups = ["sat-exam", "other-source"]
    plans = {
        "validation": _plan(groups, [23, 14], {5: 37}, rng),
        "test": _plan(groups, [207, 130], {5: 337}, rng),
    }
    return _build_psychometric("sat", MASTER_SEED + 6, plans,
                               _psychometric_pool(include_morphology=False),
                               with_difficulty=False)


def make_u2() -> tuple[Dataset, Dataset]:
    rng = random.Random(MASTER_SEED + 7)
    groups = [f"grade-{g}" for g in range(4, 13)]
    plans = {
        "validation": _plan(groups, [3, 3, 3, 3, 3, 3, 2, 2, 2], U2_VAL_COUNTS, rng),
        "test": _plan(groups, _even_sizes(228, 9), U2_TEST_COUNTS, rng),
    }
    return _build_psychometric("u2", MASTER_SEED + 8, plans,
                               _psychometric_pool(include_morphology=True),
                               with_difficulty=True)


def make_u4() -> tuple[Dataset, Dataset]:
    rng = random.Random(MASTER_SEED + 9)
    groups = ["high-beginning", "low-intermediate", "high-intermediate",
              "low-advanced", "high-advanced"]
    plans = {
        "validation": _plan(groups, [10, 10, 10, 9, 9], U4_VAL_COUNTS, rng),
        "test": _plan(groups, _even_sizes(432, 5), U4_TEST_COUNTS, rng),
    }
    return _build_psychometric("u4", MASTER_SEED + 10, plans,
                               _psychometric_pool(include_morphology=True),
                               with_difficulty=True)


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "src" / "analogykit" / "resources" / "data",
    )
    args = parser.parse_args()

    makers = {
        "sat": make_sat,
        "u2": make_u2,
        "u4": make_u4,
        "google": make_google,
        "bats": make_bats,
    }
    print(f"writing datasets to {args.out}")
    for name, make in makers.items():
        val, test = make()
        for ds in (val, test):
            violations = validate_dataset(ds)
            if violations:
                raise SystemExit(f"{name}/{ds.split}: " + "; ".join(violations[:5]))
            save_dataset(ds, args.out / name / f"{ds.split}.jsonl")
        val_n, test_n, n_groups, random_target = TARGETS[name]
        stats_v, stats_t = dataset_stats(val), dataset_stats(test)
        rand = expected_random_accuracy(test)
        ok_sizes = (stats_v.size, stats_t.size) == (val_n, test_n)
        groups_all = set(stats_v.group_sizes) | set(stats_t.group_sizes)
        ok_groups = len(groups_all) == n_groups
        ok_random = abs(rand - random_target) <= 0.1
        status = "ok" if (ok_sizes and ok_groups and ok_random) else "MISMATCH"
        print(
            f"  {name:7s} val/test {stats_v.size}/{stats_t.size} "
            f"groups {len(groups_all)} counts {stats_t.candidate_counts} "
            f"random {rand:.2f} (target {random_target}) [{status}]"
        )
        if status != "ok":
            raise SystemExit(f"{name}: generated data misses its targets")
    print("all targets satisfied")


if __name__ == "__main__":
    main()
