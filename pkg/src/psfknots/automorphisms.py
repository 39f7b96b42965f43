"""Whitehead T-transformations, symmetry moves and general substitutions."""

from __future__ import annotations

import enum
from typing import Iterable, Mapping, Sequence

from . import kernels
from .words import CyclicWord, Word, abelianize, as_cyclic, as_word, commutator, cyclic_reduce


class WhiteheadMove(enum.Enum):
    """Elementary automorphisms of F(A, B).

    The first four are the T-transformations; the last three generate the
    symmetry group of the handlebody (exchange and inversions).
    """

    A_AB = ("A>AB", 0)
    A_Ab = ("A>Ab", 1)
    B_BA = ("B>BA", 2)
    B_Ba = ("B>Ba", 3)
    SWAP = ("swap", 4)
    INV_A = ("invA", 5)
    INV_B = ("invB", 6)

    def __init__(self, token, code):
        self.token = token
        self.code = code

    @property
    def is_t_move(self) -> bool:
        return self.code < 4

    @property
    def inverse(self) -> "WhiteheadMove":
        return _INVERSES.get(self, self)

    @classmethod
    def from_token(cls, token: str) -> "WhiteheadMove":
        for m in cls:
            if m.token == token:
                return m
        raise ValueError(f"unknown move token {token!r}")

    @classmethod
    def from_code(cls, code: int) -> "WhiteheadMove":
        return _BY_CODE[code]

    def images(self) -> dict:
        return _MOVE_IMAGES[self]

    def __str__(self):
        return self.token


_INVERSES = {
    WhiteheadMove.A_AB: WhiteheadMove.A_Ab,
    WhiteheadMove.A_Ab: WhiteheadMove.A_AB,
    WhiteheadMove.B_BA: WhiteheadMove.B_Ba,
    WhiteheadMove.B_Ba: WhiteheadMove.B_BA,
}
_BY_CODE = {m.code: m for m in WhiteheadMove}

_A, _B = Word.gen("A"), Word.gen("B")
_MOVE_IMAGES = {
    WhiteheadMove.A_AB: {"A": _A * _B, "B": _B},
    WhiteheadMove.A_Ab: {"A": _A * ~_B, "B": _B},
    WhiteheadMove.B_BA: {"A": _A, "B": _B * _A},
    WhiteheadMove.B_Ba: {"A": _A, "B": _B * ~_A},
    WhiteheadMove.SWAP: {"A": _B, "B": _A},
    WhiteheadMove.INV_A: {"A": ~_A, "B": _B},
    WhiteheadMove.INV_B: {"A": _A, "B": ~_B},
}

T_MOVES = tuple(m for m in WhiteheadMove if m.is_t_move)
SYMMETRY_MOVES = (WhiteheadMove.SWAP, WhiteheadMove.INV_A, WhiteheadMove.INV_B)

MoveSequence = tuple  # of WhiteheadMove, applied left to right


def _substitute_unchecked(w: Word, images: Mapping[str, Word]) -> Word:
    parts = []
    for gen, exp in w.syllables:
        parts.extend((images[gen] ** exp).syllables)
    return Word(parts)


def apply(move: WhiteheadMove, w) -> Word:
    """Apply ``move`` to a word and freely reduce.

    >>> str(apply(WhiteheadMove.B_Ba, Word((("A", 3), ("B", 2)))))
    'A^3BA^-1BA^-1'
    """
    return _substitute_unchecked(as_word(w), move.images())


def apply_cyclic(move: WhiteheadMove, w) -> CyclicWord:
    return CyclicWord.from_word(apply(move, as_cyclic(w).word()))


def cyclic_length_after(move: WhiteheadMove, w) -> int:
    """Letter count of the cyclically reduced image of ``w`` under ``move``."""
    cw = as_cyclic(w)
    if move.is_t_move:
        return kernels.image_cyclic_length(cw.letters(), move.code)
    return cw.length


def apply_seq(moves: Iterable[WhiteheadMove], w) -> Word:
    w = as_word(w)
    for m in moves:
        w = apply(m, w)
    return w


def apply_seq_cyclic(moves: Iterable[WhiteheadMove], w) -> CyclicWord:
    return CyclicWord.from_word(apply_seq(moves, as_cyclic(w).word()))


def inverse_move(m: WhiteheadMove) -> WhiteheadMove:
    return m.inverse


def inverse_sequence(moves: Sequence[WhiteheadMove]) -> tuple:
    return tuple(m.inverse for m in reversed(moves))


def parse_moves(tokens: Iterable[str]) -> tuple:
    return tuple(WhiteheadMove.from_token(t) for t in tokens)


def is_basis(u: Word, v: Word) -> bool:
    """True when ``(u, v)`` is a basis of F(A, B).

    Uses Nielsen's criterion: ``[u, v]`` is conjugate to ``[A, B]^{+-1}``.
    The abelianized matrix must also be unimodular (implied, checked cheaply first).
    """
    ea, eb = abelianize(u), abelianize(v)
    if abs(ea.eA * eb.eB - ea.eB * eb.eA) != 1:
        return False
    c, _ = cyclic_reduce(commutator(u, v))
    ref, _ = cyclic_reduce(commutator(_A, _B))
    return c == ref or c == ref.inverse()


def substitute(w, images: Mapping[str, object], check: bool = True) -> Word:
    """Apply the endomorphism ``A -> images['A'], B -> images['B']``.

    Missing generators map to themselves.  With ``check`` the images must
    form a basis, so the map is an automorphism.

    >>> str(substitute("B^2AB^2ABA", {"A": "B^-2A"}))
    'A^2B^-1A'
    """
    imgs = {g: as_word(images.get(g, g)) for g in ("A", "B")}
    if check and not is_basis(imgs["A"], imgs["B"]):
        raise ValueError("substitution images do not form a basis of F(A,B)")
    return _substitute_unchecked(as_word(w), imgs)
