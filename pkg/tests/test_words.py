import pytest
from hypothesis import given, strategies as st

from psfknots.words import (CyclicWord, Word, WordSyntaxError, abelianize, commutator,
                            concat, cyclic_core, cyclic_reduce, letter_length, parse,
                            proper_power_decomposition, syllable_stats)

from conftest import cyclic_letters, cyclically_reduce, free_reduce, letter_lists, words


def test_parse_forms():
    assert str(parse("A^3B^2")) == "A^3B^2"
    assert str(parse("a b b")) == "A^-1B^-2"
    assert str(parse("(AB^2)^3")) == "AB^2AB^2AB^2"
    assert str(parse("(AB)^-1")) == "B^-1A^-1"
    assert parse("AA^-1").is_identity()
    assert str(parse("")) == ""


@pytest.mark.parametrize("text", ["A^0", "C", "A^", "(AB", "AB)", "A^x"])
def test_parse_rejects(text):
    with pytest.raises(WordSyntaxError):
        parse(text)


def test_zero_exponent_offset():
    with pytest.raises(WordSyntaxError) as e:
        parse("AB^0")
    assert e.value.offset == 3


def test_cyclic_reduce_examples():
    cw, c = cyclic_reduce(parse("BAB^-1"))
    assert str(cw) == "A" and str(c) == "B"
    assert str(cyclic_reduce(parse("AB"))[0]) == "AB"
    assert str(CyclicWord.parse("B^2A")) == "AB^2"


def test_commutator_gamma_example():
    # [M, alpha] at p = 1, J = 2
    m, alpha = parse("ABA^2"), parse("A^-1B^2AB^2")
    gamma = CyclicWord.parse("(A^2B)AB^2AB^2(A^-2B^-1)A^-1B^-2A^-1B^-2")
    assert cyclic_reduce(commutator(m, alpha))[0] == gamma


def test_abelianize_and_stats():
    assert tuple(abelianize("A^3B^-2A")) == (4, -2)
    st_ = syllable_stats(CyclicWord.parse("A^2BA^3B"))
    assert st_.max_abs == {"A": 3, "B": 1}
    assert st_.distinct == {"A": 2, "B": 1}
    with pytest.raises(ValueError):
        syllable_stats(CyclicWord.parse(""))


def test_proper_power_decomposition():
    root, k = proper_power_decomposition(CyclicWord.parse("(AB^2)^3"))
    assert (str(root), k) == ("AB^2", 3)
    assert proper_power_decomposition(CyclicWord.parse("A^6")) == (CyclicWord.parse("A"), 6)
    assert proper_power_decomposition(CyclicWord.parse("A^2B^2")) is None


@given(letter_lists())
def test_reduction_matches_stack_oracle(letters):
    assert Word.from_letters(letters).letters() == free_reduce(letters)


@given(words(), words())
def test_inverse_and_concat(u, v):
    assert (u * ~u).is_identity()
    assert ~(u * v) == ~v * ~u
    assert concat(u, v).letters() == free_reduce(u.letters() + v.letters())


@given(words(max_size=12), st.integers(-4, 4))
def test_power_matches_repeat(u, k):
    letters = (u.letters() if k >= 0 else (~u).letters()) * abs(k)
    assert (u ** k).letters() == free_reduce(letters)


@given(words())
def test_cyclic_reduce_conjugates_back(w):
    cw, c = cyclic_reduce(w)
    assert concat(c, cw.word(), ~c) == w
    assert cw.letters() == [] or len(cyclically_reduce(cw.letters())) == cw.length


@given(cyclic_letters())
def test_rotations_canonicalize_identically(letters):
    forms = {CyclicWord.from_word(Word.from_letters(letters[i:] + letters[:i]))
             for i in range(len(letters))}
    assert len(forms) == 1


@given(words())
def test_cyclic_core_keeps_rotation(w):
    core, conj = cyclic_core(w)
    assert concat(conj, core, ~conj) == w
    assert letter_length(core) == len(cyclically_reduce(w.letters()))


@given(cyclic_letters(max_size=10), st.integers(2, 4))
def test_power_decomposition_finds_power(letters, k):
    base = CyclicWord.from_word(Word.from_letters(letters))
    dec = proper_power_decomposition(CyclicWord.from_word(base.word() ** k))
    assert dec is not None and dec[1] % k == 0
