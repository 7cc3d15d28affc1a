import json

import pytest

from analogykit.builder import (
    ExclusionPolicy,
    RelationFile,
    build_problems,
    generate_negatives,
    ingest_relation_file,
    load_relation_corpus,
)
from analogykit.datasets import WordPair, save_dataset, validate_dataset
from analogykit.errors import DataError


def _rel(rid, category, pairs):
    return RelationFile(rid, category, tuple(WordPair(h, t) for h, t in pairs))


CAPITALS = _rel("capital", "semantic", [
    ("paris", "france"), ("rome", "italy"), ("oslo", "norway"),
    ("berlin", "germany"), ("ottawa", "canada"), ("tokyo", "japan"),
])
CURRENCY = _rel("currency", "semantic", [
    ("argentina", "peso"), ("japan", "yen"), ("india", "rupee"),
    ("russia", "ruble"),
])
FAMILY = _rel("family", "semantic", [
    ("king", "queen"), ("uncle", "aunt"), ("brother", "sister"),
    ("son", "daughter"),
])
PLURAL = _rel("plural", "morphological", [
    ("cat", "cats"), ("dog", "dogs"), ("bird", "birds"), ("tree", "trees"),
])
GERUND = _rel("gerund", "morphological", [
    ("walk", "walking"), ("jump", "jumping"), ("cook", "cooking"),
    ("paint", "painting"),
])


class TestGenerateNegatives:
    def test_shapes_of_the_three_negatives(self):
        query = CAPITALS.pairs[0]  # paris-france
        negatives = generate_negatives(query, CAPITALS, [CURRENCY, FAMILY],
                                       ExclusionPolicy(), seed=3)
        assert len(negatives) == 3
        heads = {p.head for p in CAPITALS.pairs}
        tails = {p.tail for p in CAPITALS.pairs}
        # negative 1: two head words (rome-oslo shape), query words excluded
        n1 = negatives[0]
        assert n1.head in heads and n1.tail in heads
        assert "paris" not in (n1.head, n1.tail)
        # negative 2: two tail words (germany-canada shape)
        n2 = negatives[1]
        assert n2.head in tails and n2.tail in tails
        assert "france" not in (n2.head, n2.tail)
        # negative 3: an intact sibling pair (argentina-peso shape)
        n3 = negatives[2]
        sibling_pairs = {p.key() for p in CURRENCY.pairs} | {p.key() for p in FAMILY.pairs}
        assert n3.key() in sibling_pairs

    def test_deterministic_in_seed(self):
        query = CAPITALS.pairs[0]
        a = generate_negatives(query, CAPITALS, [CURRENCY], ExclusionPolicy(), seed=9)
        b = generate_negatives(query, CAPITALS, [CURRENCY], ExclusionPolicy(), seed=9)
        assert [p.as_list() for p in a] == [p.as_list() for p in b]

    def test_negatives_distinct_and_not_correct_pairs(self):
        correct = {p.key() for p in CAPITALS.pairs}
        for seed in range(10):
            negatives = generate_negatives(CAPITALS.pairs[1], CAPITALS,
                                           [CURRENCY, FAMILY], ExclusionPolicy(), seed)
            keys = [p.key() for p in negatives]
            assert len(set(keys)) == 3
            assert not set(keys) & correct

    def test_excluded_relations_never_sampled(self):
        policy = ExclusionPolicy.of("currency")
        for seed in range(20):
            negatives = generate_negatives(CAPITALS.pairs[0], CAPITALS,
                                           [CURRENCY, FAMILY], policy, seed)
            assert negatives[2].key() not in {p.key() for p in CURRENCY.pairs}

    def test_no_eligible_sibling_errors(self):
        with pytest.raises(DataError, match="sibling"):
            generate_negatives(CAPITALS.pairs[0], CAPITALS, [PLURAL],  # other category
                               ExclusionPolicy(), seed=1)


class TestBuildProblems:
    def test_every_problem_has_four_candidates_and_one_gold(self):
        files = [CAPITALS, CURRENCY, FAMILY, PLURAL, GERUND]
        ds = build_problems(files, ExclusionPolicy(), seed=5)
        assert len(ds) == 22
        for problem in ds.problems:
            assert problem.n_candidates == 4
            source = next(r for r in files
                          if problem.id.startswith(r.relation_id + "/"))
            correct = {p.key() for p in source.pairs}
            hits = [c for c in problem.candidates if c.key() in correct]
            assert len(hits) == 1
            assert problem.candidates[problem.answer].key() in correct
            assert problem.group == source.category

    def test_single_relation_has_no_sibling(self):
        with pytest.raises(DataError, match="sibling"):
            build_problems([CAPITALS], ExclusionPolicy(), seed=1)

    def test_byte_identical_for_same_seed(self, tmp_path):
        files = [CAPITALS, CURRENCY, FAMILY]
        a = build_problems(files, ExclusionPolicy(), seed=77)
        b = build_problems(files, ExclusionPolicy(), seed=77)
        pa, pb = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        save_dataset(a, pa)
        save_dataset(b, pb)
        assert pa.read_bytes() == pb.read_bytes()

    def test_different_seed_changes_output(self, tmp_path):
        files = [CAPITALS, CURRENCY, FAMILY]
        a = build_problems(files, ExclusionPolicy(), seed=1)
        b = build_problems(files, ExclusionPolicy(), seed=2)
        ra = [p.to_record() for p in a.problems]
        rb = [p.to_record() for p in b.problems]
        assert ra != rb

    def test_output_passes_validation(self):
        ds = build_problems([CAPITALS, CURRENCY, FAMILY], ExclusionPolicy(), seed=5)
        assert validate_dataset(ds) == []


class TestIngest:
    def test_tab_separated_pairs(self, tmp_path):
        path = tmp_path / "rel.txt"
        path.write_text("paris\tfrance\nrome\titaly\noslo\tnorway\nberlin\tgermany\n")
        rel = ingest_relation_file(path, relation_id="capital", category="semantic")
        assert rel.pairs[0].as_list() == ["paris", "france"]
        assert len(rel.pairs) == 4

    def test_slash_variants_take_first(self, tmp_path):
        path = tmp_path / "rel.txt"
        path.write_text("colour/color\thue\na\tb\nc\td\ne\tf\n")
        rel = ingest_relation_file(path)
        assert rel.pairs[0].head == "colour"

    def test_empty_file_errors(self, tmp_path):
        path = tmp_path / "rel.txt"
        path.write_text("")
        with pytest.raises(DataError, match="empty"):
            ingest_relation_file(path)

    def test_malformed_line_number(self, tmp_path):
        path = tmp_path / "rel.txt"
        path.write_text("a\tb\nno tab here\n")
        with pytest.raises(DataError, match="line 2"):
            ingest_relation_file(path)

    def test_manifest_loading(self, tmp_path):
        (tmp_path / "cap.txt").write_text("paris\tfrance\nrome\titaly\noslo\tnorway\nberlin\tgermany\n")
        (tmp_path / "cur.txt").write_text("japan\tyen\nindia\trupee\nrussia\truble\nargentina\tpeso\n")
        manifest = tmp_path / "manifest.json"
        manifest.write_text(json.dumps([
            {"relation_id": "capital", "category": "semantic", "file": "cap.txt"},
            {"relation_id": "currency", "category": "semantic", "file": "cur.txt"},
        ]))
        files = load_relation_corpus(manifest)
        assert [f.relation_id for f in files] == ["capital", "currency"]
        ds = build_problems(files, ExclusionPolicy(), seed=1)
        assert len(ds) == 8
