"""Whitehead's algorithm in rank two.

Greedy T-move descent reaches minimal length (any length-reducing
automorphism implies a length-reducing T-move), and minimal forms of one
orbit are linked by level moves, which :func:`level_orbit` enumerates.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Optional

from . import kernels
from .automorphisms import SYMMETRY_MOVES, T_MOVES, WhiteheadMove, apply_cyclic
from .words import CyclicWord, Word, as_cyclic, proper_power_decomposition

ORBIT_LIMIT = 100_000


class Verdict(str, enum.Enum):
    PRIMITIVE = "Primitive"
    PROPER_POWER = "ProperPowerOfPrimitive"
    NEITHER = "Neither"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    minimal_form: CyclicWord
    moves: tuple = ()
    root: Optional[CyclicWord] = None
    k: Optional[int] = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict.value}
        if self.root is not None:
            out["root"] = str(self.root)
            out["k"] = self.k
        out["moves"] = [m.token for m in self.moves]
        out["minimal_form"] = str(self.minimal_form)
        return out


def _require_nonempty(w) -> CyclicWord:
    cw = as_cyclic(w)
    if cw.is_identity():
        raise ValueError("the identity word is not a curve")
    return cw


def minimize(w) -> tuple[CyclicWord, tuple]:
    """Minimal-length form of ``w`` and the T-moves that reach it.

    >>> m, moves = minimize("ABAB^2")
    >>> str(m), [str(x) for x in moves]
    ('A', ['A>Ab', 'B>Ba', 'A>Ab'])
    """
    cw = _require_nonempty(w)
    letters, codes = kernels.minimize_letters(cw.letters())
    return CyclicWord.from_word(Word.from_letters(letters)), tuple(
        WhiteheadMove.from_code(c) for c in codes
    )


def is_minimal(w) -> bool:
    cw = _require_nonempty(w)
    letters = cw.letters()
    n = len(letters)
    return all(kernels.image_cyclic_length(letters, m.code) >= n for m in T_MOVES)


def classify(w) -> Classification:
    """Primitive / proper power of a primitive / neither.

    >>> classify("(AB^2)^3").to_json()["verdict"]
    'ProperPowerOfPrimitive'
    """
    cw = _require_nonempty(w)
    mn, moves = minimize(cw)
    if mn.length == 1:
        return Classification(Verdict.PRIMITIVE, mn, moves)
    dec = proper_power_decomposition(cw)
    if dec is not None:
        root, k = dec
        rmin, _ = minimize(root)
        if rmin.length == 1:
            if not (len(mn.syllables) == 1 and abs(mn.syllables[0].exp) == k):
                raise AssertionError(
                    f"minimal form {mn} of proper power {cw} is not a generator power"
                )
            return Classification(Verdict.PROPER_POWER, mn, moves, root, k)
    return Classification(Verdict.NEITHER, mn, moves)


@dataclass(frozen=True)
class CmzPattern:
    inversions: tuple  # subset of (INV_A, INV_B) applied first
    uniform: str  # generator whose exponents are all 1
    e: int  # other generator's exponents lie in {e, e+1}

    def to_json(self) -> dict:
        return {
            "inversions": [m.token for m in self.inversions],
            "uniform": self.uniform,
            "e": self.e,
        }


def cmz_pattern(w) -> Optional[CmzPattern]:
    """Search inversions and generator roles for the CMZ exponent pattern.

    >>> cmz_pattern("AB^2AB^3")
    CmzPattern(inversions=(), uniform='A', e=2)
    >>> cmz_pattern("A^2B^2") is None
    True
    """
    cw = _require_nonempty(w)
    if len(cw.syllables) == 1:
        gen, exp = cw.syllables[0]
        inv = () if exp > 0 else ((WhiteheadMove.INV_A if gen == "A" else WhiteheadMove.INV_B),)
        return CmzPattern(inv, "B" if gen == "A" else "A", abs(exp))
    exps = {"A": [], "B": []}
    for gen, exp in cw.syllables:
        exps[gen].append(exp)
    for flip_a, flip_b in product((False, True), repeat=2):
        sign = {"A": -1 if flip_a else 1, "B": -1 if flip_b else 1}
        inv = tuple(
            m for m, f in ((WhiteheadMove.INV_A, flip_a), (WhiteheadMove.INV_B, flip_b)) if f
        )
        for uniform, other in (("A", "B"), ("B", "A")):
            if any(sign[uniform] * x != 1 for x in exps[uniform]):
                continue
            vals = {sign[other] * x for x in exps[other]}
            e = min(vals)
            if e > 0 and vals <= {e, e + 1}:
                return CmzPattern(inv, uniform, e)
    return None


def level_orbit(w, include_symmetry: bool = True, limit: int = ORBIT_LIMIT) -> frozenset:
    """All minimal forms reachable from ``w`` by length-preserving moves.

    ``w`` must already be minimal.  With ``include_symmetry`` the exchange and
    inversion moves join the T-moves.
    """
    cw = _require_nonempty(w)
    if not is_minimal(cw):
        raise ValueError(f"{cw} is not of minimal length")
    n = cw.length
    moves = T_MOVES + (SYMMETRY_MOVES if include_symmetry else ())
    seen = {cw}
    queue = deque([cw])
    while queue:
        cur = queue.popleft()
        letters = cur.letters()
        for m in moves:
            if m.is_t_move and kernels.image_cyclic_length(letters, m.code) != n:
                continue
            img = apply_cyclic(m, cur)
            if img not in seen:
                seen.add(img)
                if len(seen) > limit:
                    raise RuntimeError(f"level orbit exceeds {limit} forms")
                queue.append(img)
    return frozenset(seen)


def level_t_moves(w) -> frozenset:
    """T-moves that keep the cyclic length of a minimal word."""
    cw = _require_nonempty(w)
    letters = cw.letters()
    return frozenset(
        m for m in T_MOVES if kernels.image_cyclic_length(letters, m.code) == len(letters)
    )
