from collections import Counter
from itertools import product

import pytest
from hypothesis import given

from psfknots.automorphisms import T_MOVES, cyclic_length_after
from psfknots.whitehead_graph import (EDGE_CLASSES, VERTICES, WeightForm, WhiteheadGraph,
                                      build, cut_vertices, graph_from_weights,
                                      involution_symmetric, is_connected,
                                      is_disconnected_or_cut, is_robust,
                                      minimality_and_level, t_move_lengths, weight_form)
from psfknots.words import CyclicWord, Word

from conftest import cyclic_letters

NAME = {1: "A+", -1: "A-", 2: "B+", -2: "B-"}


def letter_graph(letters):
    # edge x -- y^-1 for every cyclically adjacent pair xy
    counts = Counter()
    n = len(letters)
    for i in range(n):
        x, y = letters[i], letters[(i + 1) % n]
        u, v = NAME[x], NAME[-y]
        counts["".join(sorted((u, v), key=VERTICES.index))] += 1
    return {k: counts[k] for k in EDGE_CLASSES}


def test_build_example():
    g = build("A^3B^2")
    assert g.as_dict() == {"A+A-": 2, "B+B-": 1, "A+B+": 0, "A+B-": 1, "A-B+": 1, "A-B-": 0}
    assert weight_form(g) == WeightForm(1, 0, 2, 1)


def test_build_rejects_identity():
    with pytest.raises(ValueError):
        build("")


def test_minimality_example():
    minimal, level = minimality_and_level(WeightForm(1, 0, 2, 1))
    assert minimal and {m.token for m in level} == {"B>Ba"}
    assert not minimality_and_level(WeightForm(2, 0, 1, 5))[0]


def test_robustness_examples():
    assert is_robust(graph_from_weights(WeightForm(1, 1, 1, 1)))
    assert not is_robust(graph_from_weights(WeightForm(1, 1, 0, 2)))
    assert not is_robust(build("A^3B^2"))


def test_cut_vertex_detection():
    # path A- -- A+ -- B-: A+ is a cut vertex
    g = WhiteheadGraph.from_dict({"A+A-": 1, "A+B-": 1})
    assert is_connected(g) and cut_vertices(g) == {"A+"}
    g = WhiteheadGraph.from_dict({"A+A-": 1, "B+B-": 1})
    assert not is_connected(g) and cut_vertices(g) == frozenset()


@given(cyclic_letters())
def test_build_matches_letter_oracle(letters):
    g = build(CyclicWord.from_word(Word.from_letters(letters)))
    assert g.as_dict() == letter_graph(letters)
    assert g.edge_count == len(letters)


@given(cyclic_letters())
def test_weight_form_iff_symmetric(letters):
    g = build(CyclicWord.from_word(Word.from_letters(letters)))
    assert (weight_form(g) is not None) == involution_symmetric(g)


@given(cyclic_letters(max_size=40))
def test_involution_symmetry_observed(letters):
    # not assumed by the library; recorded here as an empirical property
    assert involution_symmetric(build(CyclicWord.from_word(Word.from_letters(letters))))


@given(cyclic_letters(max_size=40))
def test_t_move_length_formulas(letters):
    cw = CyclicWord.from_word(Word.from_letters(letters))
    wf = weight_form(build(cw))
    if wf is None:
        return
    assert wf.length == cw.length
    for move, n in t_move_lengths(wf).items():
        assert cyclic_length_after(move, cw) == n


@given(cyclic_letters(max_size=40))
def test_minimality_matches_brute_force(letters):
    cw = CyclicWord.from_word(Word.from_letters(letters))
    wf = weight_form(build(cw))
    if wf is None:
        return
    brute = all(cyclic_length_after(m, cw) >= cw.length for m in T_MOVES)
    minimal, level = minimality_and_level(wf)
    assert minimal == brute
    if minimal:
        assert level == {m for m in T_MOVES if cyclic_length_after(m, cw) == cw.length}


def test_robust_positive_weights_exhaustive():
    for t in product(range(1, 5), repeat=4):
        assert is_robust(graph_from_weights(WeightForm(*t)))


def test_pure_power_counts_as_disconnected():
    assert is_disconnected_or_cut(build("A^3"))
    assert not is_disconnected_or_cut(build("A^2B^2"))
