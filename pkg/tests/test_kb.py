import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conexsys import (
    KBFormatError,
    KnowledgeBase,
    TruthValue,
    dumps_kb,
    load_kb,
    loads_kb,
    save_kb,
    weighted_sum,
    winner,
)
from conexsys import fixtures

from helpers import brute_force_winner

T, F, U, NA = (
    TruthValue.TRUE,
    TruthValue.FALSE,
    TruthValue.UNKNOWN,
    TruthValue.UNAVAILABLE,
)

# Pinned first row of the pretrained lemonade matrix.
PRETRAINED_ROW_0 = [9, 9, 5, -3, 3, 5, 3, 3, 5]


def test_encoding_is_bipolar():
    assert [T.encode(), F.encode(), U.encode(), NA.encode()] == [1, -1, 0, 0]


@pytest.mark.parametrize(
    "token,expected",
    [("t", T), ("TRUE", T), ("f", F), ("false", F), ("u", NA), ("unavailable", NA), ("?", U)],
)
def test_token_parsing(token, expected):
    assert TruthValue.from_token(token) is expected


def test_token_parsing_rejects_garbage():
    with pytest.raises(ValueError):
        TruthValue.from_token("maybe")


class TestWeightedSum:
    # worked three-goal example: V2 known True, V1 and V3 unknown
    def test_partial_sums(self, toy):
        a = [U, T, U]
        assert weighted_sum(toy, 0, a) == 1
        assert weighted_sum(toy, 1, a) == -3
        assert weighted_sum(toy, 2, a) == 4

    def test_all_unknown_returns_bias(self, toy):
        for cell in range(3):
            assert weighted_sum(toy, cell, [U, U, U]) == int(toy.weights[cell, 0])

    def test_cell_out_of_range(self, toy):
        with pytest.raises(IndexError):
            weighted_sum(toy, 3, [U, U, U])

    def test_unavailable_counts_as_zero(self, toy):
        assert weighted_sum(toy, 0, [NA, T, NA]) == weighted_sum(toy, 0, [U, T, U])


class TestWinner:
    def test_pretrained_matrix_golden_patterns(self, pretrained):
        # refrigeration-power-short pattern: readings 6 and 7 trip
        pattern_g6 = [F, F, F, F, F, T, T, F]
        enc = [v.encode() for v in pattern_g6]
        assert winner(pretrained, pattern_g6) == brute_force_winner(pretrained, enc) == 5
        assert weighted_sum(pretrained, 5, pattern_g6) == 22

        all_false = [F] * 8
        enc = [v.encode() for v in all_false]
        assert winner(pretrained, all_false) == brute_force_winner(pretrained, enc) == 8
        assert weighted_sum(pretrained, 8, all_false) == 33

    def test_bias_only_construction(self):
        kb = KnowledgeBase(("x",), ("a", "b"), np.array([[1, 0], [0, 0]]))
        assert winner(kb, [U]) == 0

    def test_tie_breaks_to_lowest_index(self):
        kb = KnowledgeBase(("x",), ("a", "b", "c"), np.array([[5, 0], [5, 0], [5, 0]]))
        assert winner(kb, [U]) == 0


def _small_kb_and_assignment():
    weights = st.integers(-50, 50)
    dims = st.tuples(st.integers(2, 5), st.integers(1, 6))
    return dims.flatmap(
        lambda mn: st.tuples(
            st.lists(
                st.lists(weights, min_size=mn[1] + 1, max_size=mn[1] + 1),
                min_size=mn[0],
                max_size=mn[0],
            ),
            st.lists(st.sampled_from([T, F, U, NA]), min_size=mn[1], max_size=mn[1]),
        )
    )


def _build(rows):
    m, n = len(rows), len(rows[0]) - 1
    return KnowledgeBase(
        tuple(f"V{k}" for k in range(n)), tuple(f"G{g}" for g in range(m)), np.array(rows)
    )


@given(_small_kb_and_assignment())
@settings(max_examples=150, deadline=None)
def test_unknown_unavailable_interchangeable(data):
    rows, values = data
    kb = _build(rows)
    swapped = [NA if v is U else (U if v is NA else v) for v in values]
    for cell in range(kb.m_goals):
        assert weighted_sum(kb, cell, values) == weighted_sum(kb, cell, swapped)


@given(_small_kb_and_assignment(), st.integers(1, 9))
@settings(max_examples=150, deadline=None)
def test_winner_invariant_under_positive_scaling(data, factor):
    rows, values = data
    kb = _build(rows)
    scaled = _build([[w * factor for w in row] for row in rows])
    assert winner(kb, values) == winner(scaled, values)


@given(_small_kb_and_assignment())
@settings(max_examples=150, deadline=None)
def test_flipping_false_to_true_moves_sum_by_two_weights(data):
    rows, values = data
    kb = _build(rows)
    for k, v in enumerate(values):
        if v is not F:
            continue
        flipped = list(values)
        flipped[k] = T
        for cell in range(kb.m_goals):
            delta = weighted_sum(kb, cell, flipped) - weighted_sum(kb, cell, values)
            assert delta == 2 * int(kb.weights[cell, k + 1])


class TestSerialization:
    def test_fixture_shape_and_first_row(self, pretrained):
        assert pretrained.m_goals == 9
        assert pretrained.n_inputs == 8
        assert pretrained.weights[0].tolist() == PRETRAINED_ROW_0

    def test_round_trip_bytes(self, tmp_path, pretrained):
        path = tmp_path / "kb.json"
        save_kb(pretrained, path)
        text = path.read_text()
        again = loads_kb(text)
        assert dumps_kb(again) == text
        assert again.weights.tolist() == pretrained.weights.tolist()
        assert again.goal_names == pretrained.goal_names

    def test_load_fixture_path(self):
        kb = load_kb(fixtures.pretrained_kb_path())
        assert kb.weights[0].tolist() == PRETRAINED_ROW_0

    def test_column_arity_error(self):
        doc = '{"inputs": ["a","b","c","d","e","f","g","h"], "goals": ["x","y"], "weights": [[1,1,1,1,1,1,1,1], [0,0,0,0,0,0,0,0]]}'
        with pytest.raises(KBFormatError, match="expected 9 columns"):
            loads_kb(doc)

    def test_non_integer_weight_names_position(self):
        doc = '{"inputs": ["a"], "goals": ["x","y"], "weights": [[1, 2.5], [0, 0]]}'
        with pytest.raises(KBFormatError, match="row 0 column 1"):
            loads_kb(doc)

    def test_bool_weight_rejected(self):
        doc = '{"inputs": ["a"], "goals": ["x","y"], "weights": [[1, true], [0, 0]]}'
        with pytest.raises(KBFormatError, match="row 0 column 1"):
            loads_kb(doc)

    def test_row_count_mismatch(self):
        doc = '{"inputs": ["a"], "goals": ["x","y"], "weights": [[1, 1]]}'
        with pytest.raises(KBFormatError, match="2 weight rows"):
            loads_kb(doc)

    def test_not_json(self):
        with pytest.raises(KBFormatError, match="not valid JSON"):
            loads_kb("{nope")

    def test_single_goal_rejected(self):
        doc = '{"inputs": ["a"], "goals": ["x"], "weights": [[1, 1]]}'
        with pytest.raises(KBFormatError, match="two goals"):
            loads_kb(doc)


def test_weights_are_immutable(pretrained):
    with pytest.raises(ValueError):
        pretrained.weights[0, 0] = 99


def test_name_lookup(toy):
    assert toy.input_index("V2") == 1
    assert toy.goal_index("G3") == 2
    with pytest.raises(KeyError):
        toy.input_index("V9")
