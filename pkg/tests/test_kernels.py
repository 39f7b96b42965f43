import pytest
from hypothesis import given, strategies as st

from psfknots import _kernels_py as pure, kernels
from psfknots.automorphisms import T_MOVES, apply_cyclic
from psfknots.words import CyclicWord, Word

from conftest import cyclic_letters, cyclically_reduce, free_reduce, letter_lists

compiled = kernels.compiled()
BACKENDS = [pure] + ([compiled] if compiled is not None else [])


def test_backend_name():
    assert kernels.BACKEND in ("cython", "pure")


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
@given(letters=letter_lists())
def test_reduce_letters(impl, letters):
    assert list(impl.reduce_letters(letters)) == free_reduce(letters)


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
@given(letters=cyclic_letters(), move=st.sampled_from(T_MOVES))
def test_image_matches_substitution(impl, letters, move):
    want = apply_cyclic(move, CyclicWord.from_word(Word.from_letters(letters)))
    got = impl.image_cyclic(letters, move.code)
    assert CyclicWord.from_word(Word.from_letters(got)) == want
    assert impl.image_cyclic_length(letters, move.code) == want.length


@pytest.mark.parametrize("impl", BACKENDS, ids=lambda m: m.__name__)
@given(letters=cyclic_letters(max_size=40))
def test_minimize_is_locally_minimal(impl, letters):
    out, codes = impl.minimize_letters(letters)
    out = list(out)
    assert len(out) <= len(letters)
    assert cyclically_reduce(out) == out
    assert all(impl.image_cyclic_length(out, m.code) >= len(out) for m in T_MOVES)


@pytest.mark.skipif(compiled is None, reason="extension not built")
@given(letters=cyclic_letters(max_size=60))
def test_backends_agree(letters):
    a, ca = pure.minimize_letters(letters)
    b, cb = compiled.minimize_letters(letters)
    assert list(a) == list(b) and list(ca) == list(cb)
    assert list(pure.cyclic_core(letters)[0]) == list(compiled.cyclic_core(letters)[0])


def test_env_var_forces_pure_backend():
    import os
    import subprocess
    import sys
    env = dict(os.environ, PSFKNOTS_PURE="1")
    out = subprocess.run([sys.executable, "-c", "import psfknots.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True).stdout.strip()
    assert out == "pure"
