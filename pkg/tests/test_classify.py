import random

import pytest
from hypothesis import given, strategies as st

from psfknots.acceptance import random_automorphic_image
from psfknots.automorphisms import WhiteheadMove, apply_seq_cyclic
from psfknots.classify import (Verdict, classify, cmz_pattern, is_minimal, level_orbit,
                               level_t_moves, minimize)
from psfknots.relators import proper_power_type_word
from psfknots.words import CyclicWord, Word, abelianize

from conftest import cyclic_letters


def test_minimize_example():
    m, moves = minimize("ABAB^2")
    assert str(m) == "A"
    assert apply_seq_cyclic(moves, "ABAB^2") == m


def test_classify_examples():
    c = classify("(AB^2)^3")
    assert c.verdict is Verdict.PROPER_POWER and str(c.root) == "AB^2" and c.k == 3
    assert c.to_json()["verdict"] == "ProperPowerOfPrimitive"
    assert classify("A^2B^2").verdict is Verdict.NEITHER
    assert classify("A^6").k == 6
    assert classify("AB^5").verdict is Verdict.PRIMITIVE
    with pytest.raises(ValueError):
        classify("")


def test_json_field_order():
    assert list(classify("(AB)^2").to_json()) == ["verdict", "root", "k", "moves", "minimal_form"]
    assert list(classify("AB").to_json()) == ["verdict", "moves", "minimal_form"]


def test_cmz_examples():
    assert cmz_pattern("AB^2AB^3").uniform == "A"
    assert cmz_pattern("A^2B^2") is None
    p = cmz_pattern("A^-1B^-2A^-1B^-3")
    assert p is not None and set(m.token for m in p.inversions) == {"invA", "invB"}


def test_level_orbits():
    t_only = level_orbit("A^3B^2", include_symmetry=False)
    assert {str(w) for w in t_only} == {"A^-1BA^2B", "A^-2BAB", "A^-3B^2", "A^3B^2"}
    assert len(level_orbit("A^3B^4")) == 8
    assert {str(w) for w in level_orbit("A")} == {"A", "A^-1", "B", "B^-1"}
    with pytest.raises(ValueError):
        level_orbit("ABAB^2")


def test_level_t_moves_example():
    assert level_t_moves("A^3B^2") == {WhiteheadMove.B_Ba}


def test_word_level_restatement_fails():
    # a proper power whose A-exponents include both e and e+1 with e > 1
    c = classify("(A^2BA^3B)^2")
    assert c.verdict is Verdict.PROPER_POWER and c.k == 2


@pytest.mark.parametrize("kind,params,k", [
    ("III", dict(s=2, a=2, b=1), 3), ("IV", dict(a=1, b=1, c=1), 3),
    ("III", dict(s=1, a=1, b=1), 2), ("III", dict(s=3, a=1, b=3), 4)])
def test_type_words_avoid_e_and_e_plus_1(kind, params, k):
    w = proper_power_type_word(kind, **params)
    assert classify(w).k == k
    for gen in "AB":
        exps = {abs(e) for g, e in w.syllables if g == gen}
        assert not any(e > 1 and e + 1 in exps for e in exps)


@given(cyclic_letters(max_size=40))
def test_minimize_result_is_minimal(letters):
    cw = CyclicWord.from_word(Word.from_letters(letters))
    m, moves = minimize(cw)
    assert is_minimal(m) and m.length <= cw.length
    assert apply_seq_cyclic(moves, cw) == m
    assert abelianize(m) is not None


@given(cyclic_letters(max_size=30))
def test_homology_obstruction_consistent(letters):
    from math import gcd
    cw = CyclicWord.from_word(Word.from_letters(letters))
    ab = abelianize(cw)
    if classify(cw).verdict is Verdict.PRIMITIVE:
        assert gcd(ab.eA, ab.eB) == 1


@given(st.integers(0, 2**32), st.sampled_from([1, 2, 3, 4]))
def test_random_images_classify_as_built(seed, k):
    w = random_automorphic_image(random.Random(seed), CyclicWord.parse(f"A^{k}"))
    c = classify(w)
    if k == 1:
        assert c.verdict is Verdict.PRIMITIVE
    else:
        assert c.verdict is Verdict.PROPER_POWER and c.k == k
    assert cmz_pattern(w) is not None
