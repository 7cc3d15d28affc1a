import itertools

import pytest

from analogykit.prompting import (
    ALL_PERMUTATIONS,
    NEGATIVE_ORDERS,
    POSITIVE_ORDERS,
    POSITIVE_PERMUTATIONS,
    PromptTemplate,
    default_templates,
    get_template,
    instantiate_template,
    negative_permutations,
    positive_permutations,
    render_candidate_sentences,
)

from conftest import make_problem, word_stream

# the three closure generators of analogical proportions
def _exchange_pairs(t):
    return (t[2], t[3], t[0], t[1])


def _swap_means(t):
    return (t[0], t[2], t[1], t[3])


def _swap_within_pairs(t):
    return (t[1], t[0], t[3], t[2])


class TestTemplates:
    def test_to_as_renders_named_example(self):
        t = get_template("to-as")
        out = instantiate_template(t, ("word", "language", "note", "music"))
        assert out == "word is to language as note is to music"

    def test_what_to_renders_named_example(self):
        out = instantiate_template(get_template("what-to"), ("a", "b", "c", "d"))
        assert out == "what a is to b, c is to d"

    def test_to_what_keeps_capitalized_what(self):
        out = instantiate_template(get_template("to-what"), ("a", "b", "c", "d"))
        assert out == "a is to b What c is to d"

    def test_trailing_periods_preserved(self):
        assert get_template("rel-same").pattern.endswith(".")
        assert get_template("as-what").pattern.endswith(".")

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError):
            instantiate_template(get_template("to-as"), ("", "b", "c", "d"))

    def test_six_templates_bundled(self):
        assert len(default_templates()) == 6

    def test_pattern_must_contain_each_placeholder_once(self):
        with pytest.raises(ValueError):
            PromptTemplate("bad", "[w1] [w1] [w2] [w3] [w4]")
        with pytest.raises(ValueError):
            PromptTemplate("bad", "[w2] [w1] [w3] [w4]")

    def test_injective_on_reserved_alphabet(self):
        # distinct word tuples must render to distinct sentences
        seen = set()
        words = [f"tok{i}" for i in range(4)]
        for perm in itertools.permutations(words):
            s = instantiate_template(get_template("rel-same"), perm)
            assert s not in seen
            seen.add(s)


class TestPermutationAlgebra:
    def test_counts(self):
        assert len(POSITIVE_ORDERS) == 8
        assert len(NEGATIVE_ORDERS) == 16
        assert len(ALL_PERMUTATIONS) == 24

    def test_positive_rank_order_is_canonical(self):
        got = positive_permutations("a", "b", "c", "d")
        assert got == [
            ("a", "b", "c", "d"),
            ("a", "c", "b", "d"),
            ("b", "a", "d", "c"),
            ("b", "d", "a", "c"),
            ("c", "d", "a", "b"),
            ("c", "a", "d", "b"),
            ("d", "c", "b", "a"),
            ("d", "b", "c", "a"),
        ]

    def test_identity_is_rank_one(self):
        assert POSITIVE_PERMUTATIONS[0].order == (0, 1, 2, 3)
        assert POSITIVE_PERMUTATIONS[0].rank == 1

    def test_named_axioms_present(self):
        got = positive_permutations("a", "b", "c", "d")
        assert ("c", "d", "a", "b") in got
        assert ("a", "c", "b", "d") in got

    def test_union_exhausts_all_orderings(self):
        pos = set(positive_permutations("a", "b", "c", "d"))
        neg = set(negative_permutations("a", "b", "c", "d"))
        assert pos.isdisjoint(neg)
        assert pos | neg == set(itertools.permutations(("a", "b", "c", "d")))

    def test_adjacent_swap_is_negative(self):
        assert ("a", "b", "d", "c") in negative_permutations("a", "b", "c", "d")

    def test_negatives_sorted_lexicographically(self):
        assert list(NEGATIVE_ORDERS) == sorted(NEGATIVE_ORDERS)

    def test_closure_under_generators(self):
        pos = set(POSITIVE_ORDERS)
        for order in POSITIVE_ORDERS:
            for gen in (_exchange_pairs, _swap_means, _swap_within_pairs):
                assert gen(order) in pos

    def test_negatives_leave_positive_set_under_identity_check(self):
        # applying a generator to a negative ordering never lands on identity
        pos = set(POSITIVE_ORDERS)
        for order in NEGATIVE_ORDERS:
            assert order not in pos


class TestRenderGrid:
    def test_grid_shape_and_diagonal(self):
        problem = make_problem("p", 5, word_stream())
        grid = render_candidate_sentences(problem, get_template("to-as"), ALL_PERMUTATIONS[0])
        assert len(grid) == 5 and all(len(row) == 5 for row in grid)
        for i, cand in enumerate(problem.candidates):
            assert cand.head in grid[i][i] and cand.tail in grid[i][i]

    def test_mixing_entry_pairs_head_i_with_tail_k(self):
        problem = make_problem("p", 3, word_stream())
        grid = render_candidate_sentences(problem, get_template("to-as"), ALL_PERMUTATIONS[0])
        assert problem.candidates[0].head in grid[0][2]
        assert problem.candidates[2].tail in grid[0][2]
        assert problem.candidates[0].tail not in grid[0][2]

    def test_all_permutation_sentences_distinct_for_distinct_words(self):
        problem = make_problem("p", 4, word_stream())
        sentences = set()
        for perm in ALL_PERMUTATIONS:
            grid = render_candidate_sentences(problem, get_template("to-as"), perm)
            for row in grid:
                sentences.update(row)
        assert len(sentences) == 24 * 16
