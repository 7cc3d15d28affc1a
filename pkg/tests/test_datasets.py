import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from analogykit.datasets import (
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
from analogykit.errors import DataError

from conftest import make_dataset, make_problem


def _write_jsonl(path, records):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")


def _record(pid="x1", n=4, answer=0, group="g"):
    return {
        "id": pid,
        "group": group,
        "query": [f"q{pid}h", f"q{pid}t"],
        "candidates": [[f"{pid}h{i}", f"{pid}t{i}"] for i in range(n)],
        "answer": answer,
    }


class TestWordPair:
    def test_rejects_empty(self):
        with pytest.raises(DataError):
            WordPair("", "x")
        with pytest.raises(DataError):
            WordPair("x", "   ")

    def test_rejects_tab_and_newline(self):
        with pytest.raises(DataError):
            WordPair("a\tb", "x")
        with pytest.raises(DataError):
            WordPair("x", "a\nb")


class TestLoadDataset:
    def test_roundtrip_is_identity(self, tmp_path):
        ds = make_dataset("custom", "full", 7, n_candidates=4)
        path = tmp_path / "full.jsonl"
        save_dataset(ds, path)
        loaded = load_dataset(path, "custom")
        assert [p.to_record() for p in loaded.problems] == [p.to_record() for p in ds.problems]

    def test_empty_file_errors(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("")
        with pytest.raises(DataError, match="no problems"):
            load_dataset(path, "custom")

    def test_answer_out_of_bounds_names_line(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        _write_jsonl(path, [_record("ok"), _record("bad", n=4, answer=4)])
        with pytest.raises(DataError, match="line 2"):
            load_dataset(path, "custom")

    def test_parse_error_names_line(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text('{"id": "a"}\nnot json\n')
        with pytest.raises(DataError, match="line 1|line 2"):
            load_dataset(path, "custom")

    def test_split_inferred_from_stem(self, tmp_path):
        path = tmp_path / "validation.jsonl"
        _write_jsonl(path, [_record()])
        assert load_dataset(path, "custom").split == "validation"


class TestValidateDataset:
    def test_valid_dataset_is_clean(self):
        assert validate_dataset(make_dataset("custom", "full", 5)) == []

    def test_duplicate_candidate_flagged(self):
        rec = _record("dup")
        rec["candidates"][1] = rec["candidates"][0]
        problems = [
            AnalogyProblem(
                id=rec["id"],
                query=WordPair(*rec["query"]),
                candidates=tuple(WordPair(*c) for c in rec["candidates"]),
                answer=0,
                group="g",
            )
        ]
        out = validate_dataset(Dataset("custom", "full", problems))
        assert out == ["duplicate candidate in dup"]

    def test_candidate_count_out_of_set(self, words):
        # u2 declares {3,4,5}; sat declares {5} only
        p = make_problem("p", 4, words)
        out = validate_dataset(Dataset("sat", "full", [p]))
        assert any("candidate count out of set" in v for v in out)


class TestSplitValidation:
    def test_partition_properties(self):
        ds = make_dataset("custom", "full", 40)
        val, test = split_validation(ds, 0.1, seed=7)
        assert len(val) + len(test) == len(ds)
        val_ids = {p.id for p in val.problems}
        test_ids = {p.id for p in test.problems}
        assert val_ids.isdisjoint(test_ids)
        assert val_ids | test_ids == {p.id for p in ds.problems}

    def test_deterministic_in_seed(self):
        ds = make_dataset("custom", "full", 30)
        a = split_validation(ds, 0.2, seed=123)
        b = split_validation(ds, 0.2, seed=123)
        assert [p.id for p in a[0].problems] == [p.id for p in b[0].problems]

    def test_ten_problem_single_group(self):
        ds = make_dataset("custom", "full", 10)
        val, test = split_validation(ds, 0.1, seed=1)
        assert (len(val), len(test)) == (1, 9)

    def test_small_group_errors(self, words):
        ds = Dataset("custom", "full", [make_problem("solo", 4, words)])
        with pytest.raises(DataError, match="fewer than 2"):
            split_validation(ds, 0.1, seed=1)

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 2**63 - 1), frac=st.floats(0.05, 0.5))
    def test_partition_holds_for_any_seed(self, seed, frac):
        ds = make_dataset("custom", "full", 24)
        val, test = split_validation(ds, frac, seed)
        ids = sorted(p.id for p in val.problems) + sorted(p.id for p in test.problems)
        assert sorted(ids) == sorted(p.id for p in ds.problems)


class TestStatsAndRandom:
    def test_stats_counts(self):
        ds = make_dataset("custom", "full", 6, n_candidates=5)
        stats = dataset_stats(ds)
        assert stats.size == 6
        assert stats.candidate_counts == {5: 6}
        assert stats.group_count == 1

    def test_uniform_candidates_give_exact_value(self):
        ds = make_dataset("custom", "full", 9, n_candidates=4)
        assert expected_random_accuracy(ds) == pytest.approx(25.0)

    def test_mixed_counts(self, words):
        problems = [make_problem("a", 3, words), make_problem("b", 5, words)]
        ds = Dataset("custom", "full", problems)
        assert expected_random_accuracy(ds) == pytest.approx(100 * (1 / 3 + 1 / 5) / 2)

    def test_empty_errors(self):
        with pytest.raises(DataError):
            expected_random_accuracy(Dataset("custom", "full", []))


class TestShippedData:
    @pytest.mark.parametrize(
        "name,val_size,test_size,groups",
        [
            ("sat", 37, 337, 2),
            ("u2", 24, 228, 9),
            ("u4", 48, 432, 5),
            ("google", 50, 500, 2),
            ("bats", 199, 1799, 3),
        ],
    )
    def test_sizes_and_groups(self, name, val_size, test_size, groups):
        val = load_shipped(name, "validation")
        test = load_shipped(name, "test")
        assert len(val) == val_size
        assert len(test) == test_size
        all_groups = set(g for g in dataset_stats(val).group_sizes) | set(
            dataset_stats(test).group_sizes
        )
        assert len(all_groups) == groups

    def test_u2_candidate_counts_within_declared_set(self):
        stats = dataset_stats(load_shipped("u2", "test"))
        assert set(stats.candidate_counts) <= {3, 4, 5}

    def test_full_split_concatenates(self):
        full = load_shipped("sat", "full")
        assert len(full) == 374
