"""Exact word algebra in the free group F(A, B).

Words are stored as tuples of syllables ``(gen, exp)`` with ``gen`` in
``{"A", "B"}`` and ``exp`` a nonzero Python int, so exponents never overflow.
Every :class:`Word` is freely reduced on construction.  A :class:`CyclicWord`
is cyclically reduced and stored in its canonical rotation, which makes
equality of cyclic words a plain tuple comparison.

>>> w = parse("A(BA^2)^2")
>>> str(w)
'ABA^2BA^2'
>>> abelianize(w)
AbelianImage(eA=5, eB=2)
>>> str(CyclicWord.from_word(parse("A^3BA^-1BA^-1")))
'A^-1BA^2B'
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

GENERATORS = ("A", "B")

# letter codes used by the kernels: A=1, A^-1=-1, B=2, B^-1=-2
_GEN_CODE = {"A": 1, "B": 2}
_CODE_GEN = {1: "A", 2: "B"}


class WordSyntaxError(ValueError):
    """Raised when a word string does not match the grammar."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class Syllable(NamedTuple):
    gen: str
    exp: int


class AbelianImage(NamedTuple):
    eA: int
    eB: int

    def __add__(self, other):
        return AbelianImage(self.eA + other.eA, self.eB + other.eB)

    def __neg__(self):
        return AbelianImage(-self.eA, -self.eB)

    def __sub__(self, other):
        return self + (-other)


def _reduce_syllables(syls: Iterable[tuple[str, int]]) -> tuple[Syllable, ...]:
    stack: list[list] = []
    for gen, exp in syls:
        if gen not in _GEN_CODE:
            raise ValueError(f"unknown generator {gen!r}")
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return tuple(Syllable(g, e) for g, e in stack)


def _render(syls: Sequence[Syllable]) -> str:
    out = []
    for gen, exp in syls:
        out.append(gen if exp == 1 else f"{gen}^{exp}")
    return "".join(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced element of F(A, B)."""

    syllables: tuple[Syllable, ...] = ()

    def __init__(self, syllables: Iterable[tuple[str, int]] = ()):
        object.__setattr__(self, "syllables", _reduce_syllables(syllables))

    @classmethod
    def gen(cls, g: str, exp: int = 1) -> "Word":
        return cls(((g, exp),))

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        return cls((_CODE_GEN[abs(x)], 1 if x > 0 else -1) for x in letters)

    def letters(self) -> list[int]:
        out: list[int] = []
        for gen, exp in self.syllables:
            code = _GEN_CODE[gen]
            out.extend([code if exp > 0 else -code] * abs(exp))
        return out

    @property
    def length(self) -> int:
        """Letter count, the sum of absolute exponents."""
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def __len__(self):
        return len(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.syllables + other.syllables)

    def __invert__(self) -> "Word":
        return Word((g, -e) for g, e in reversed(self.syllables))

    inverse = __invert__

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return (~self) ** (-k)
        if k == 0 or not self.syllables:
            return Word()
        if len(self.syllables) == 1:
            g, e = self.syllables[0]
            return Word(((g, e * k),))
        core, conj = cyclic_core(self)
        if len(core.syllables) == 1:
            g, e = core.syllables[0]
            body = Word(((g, e * k),))
        else:
            body = Word(core.syllables * k)
        return conj * body * ~conj

    def __str__(self):
        return _render(self.syllables)

    def __repr__(self):
        return f"Word({_render(self.syllables)!r})"


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word in canonical rotation.

    The canonical rotation is the lexicographically least rotation of the
    syllable sequence under the order ``A < B``, then exponent ascending.
    """

    syllables: tuple[Syllable, ...]

    @classmethod
    def from_word(cls, w: Word) -> "CyclicWord":
        core, _ = cyclic_core(w)
        return cls(_least_rotation(core.syllables))

    @classmethod
    def parse(cls, text: str) -> "CyclicWord":
        return cls.from_word(parse(text))

    def word(self) -> Word:
        return Word(self.syllables)

    def letters(self) -> list[int]:
        return self.word().letters()

    @property
    def length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)

    def is_identity(self) -> bool:
        return not self.syllables

    def inverse(self) -> "CyclicWord":
        return CyclicWord.from_word(~self.word())

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return _render(self.syllables)

    def __repr__(self):
        return f"CyclicWord({_render(self.syllables)!r})"


def _least_rotation(syls: tuple[Syllable, ...]) -> tuple[Syllable, ...]:
    n = len(syls)
    if n <= 1:
        return syls
    doubled = syls + syls
    best = min(range(n), key=lambda i: doubled[i:i + n])
    return doubled[best:best + n]


# -- parsing -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> Word:
        w = self._word()
        if self._peek():
            raise WordSyntaxError(f"unexpected {self._peek()!r}", self.pos)
        return w

    def _word(self) -> Word:
        syls: list[tuple[str, int]] = []
        while self._peek() and self._peek() != ")":
            syls.extend(self._term().syllables)
        return Word(syls)

    def _term(self) -> Word:
        c = self._peek()
        start = self.pos
        if c in ("A", "B"):
            self.pos += 1
            atom = Word.gen(c)
        elif c in ("a", "b"):
            self.pos += 1
            atom = Word.gen(c.upper(), -1)
        elif c == "(":
            self.pos += 1
            atom = self._word()
            if self._peek() != ")":
                raise WordSyntaxError("missing ')'", self.pos)
            self.pos += 1
        else:
            raise WordSyntaxError(f"unexpected {c!r}", start)
        if self._peek() == "^":
            self.pos += 1
            atom = atom ** self._exponent()
        return atom

    def _exponent(self) -> int:
        self._skip()
        start = self.pos
        sign = 1
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            sign = -1
            self.pos += 1
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            raise WordSyntaxError("expected exponent digits", self.pos)
        value = sign * int(self.text[digits_start:self.pos])
        if value == 0:
            raise WordSyntaxError("zero exponent", start)
        return value


def parse(text: str) -> Word:
    """Parse ``text`` into a freely reduced :class:`Word`.

    Grammar: ``word := term*``, ``term := atom ('^' '-'? digits)?``,
    ``atom := 'A' | 'B' | 'a' | 'b' | '(' word ')'``.  Lowercase letters
    denote inverses; whitespace is ignored.

    >>> str(parse("ABB^-1A^-1"))
    ''
    >>> str(parse("a b^2"))
    'A^-1B^-2'
    """
    return _Parser(text).parse()


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, CyclicWord):
        return w.word()
    if isinstance(w, str):
        return parse(w)
    raise TypeError(f"cannot interpret {type(w).__name__} as a word")


def as_cyclic(w) -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    return CyclicWord.from_word(as_word(w))


# -- group operations --------------------------------------------------------

def invert(w: Word) -> Word:
    return ~w


def concat(*words: Word) -> Word:
    syls: list[Syllable] = []
    for w in words:
        syls.extend(w.syllables)
    return Word(syls)


def power(u: Word, k: int) -> Word:
    return u ** k


def commutator(u: Word, v: Word) -> Word:
    """``u v u^-1 v^-1``, freely reduced."""
    return concat(u, v, ~u, ~v)


def cyclic_core(w: Word) -> tuple[Word, Word]:
    """Split ``w = c * core * c^-1`` with ``core`` cyclically reduced.

    Unlike :func:`cyclic_reduce` the core keeps the rotation in which it
    appears in ``w``: a partially cancelling last syllable is folded into
    the first one.

    >>> core, c = cyclic_core(parse("B^-1AB^-2A(BA^2BAB^-2A)^-3"))
    >>> str(core)
    'B^-3A^-2B^-1A^-1B^2A^-1B^-1A^-2B^-1A^-1B^2A^-1B^-1A^-2'
    """
    syls = list(w.syllables)
    conj: list[Syllable] = []
    i, j = 0, len(syls) - 1
    while j > i and syls[i].gen == syls[j].gen:
        if syls[i].exp + syls[j].exp == 0:
            conj.append(syls[i])
            i += 1
            j -= 1
            continue
        first, last = syls[i], syls[j]
        # w = X^e * mid * X^f  ==  X^-f * (X^(e+f) * mid) * X^f
        conj.append(Syllable(last.gen, -last.exp))
        core = [Syllable(first.gen, first.exp + last.exp)] + syls[i + 1:j]
        return Word(core), Word(conj)
    return Word(syls[i:j + 1]), Word(conj)


def cyclic_reduce(w: Word) -> tuple[CyclicWord, Word]:
    """Return ``(r, c)`` with ``w == c * r * c^-1`` and ``r`` canonical.

    >>> r, c = cyclic_reduce(parse("A^2BA^-2"))
    >>> str(r), str(c)
    ('B', 'A^2')
    """
    core, conj = cyclic_core(w)
    syls = core.syllables
    canon = _least_rotation(syls)
    n = len(syls)
    if n > 1:
        doubled = syls + syls
        shift = next(i for i in range(n) if doubled[i:i + n] == canon)
        conj = conj * Word(syls[:shift])
    return CyclicWord(canon), conj


def abelianize(w) -> AbelianImage:
    """Exponent sums ``(eA, eB)``.

    >>> tuple(abelianize("A^3B^-2A"))
    (4, -2)
    """
    if isinstance(w, str):
        w = parse(w)
    eA = eB = 0
    for gen, exp in w.syllables:
        if gen == "A":
            eA += exp
        else:
            eB += exp
    return AbelianImage(eA, eB)


@dataclass(frozen=True)
class SyllableStats:
    exponents: dict
    max_abs: dict
    distinct: dict


def syllable_stats(w) -> SyllableStats:
    """Per-generator exponent multisets of a nonempty cyclic word."""
    cw = as_cyclic(w)
    if cw.is_identity():
        raise ValueError("syllable statistics are undefined for the identity")
    exps = {g: Counter() for g in GENERATORS}
    for gen, exp in cw.syllables:
        exps[gen][exp] += 1
    return SyllableStats(
        exponents=exps,
        max_abs={g: max((abs(e) for e in exps[g]), default=0) for g in GENERATORS},
        distinct={g: len(exps[g]) for g in GENERATORS},
    )


def proper_power_decomposition(w) -> Optional[tuple[CyclicWord, int]]:
    """Return ``(root, k)`` with ``w == root^k`` cyclically and ``k >= 2`` maximal.

    >>> root, k = proper_power_decomposition(CyclicWord.parse("(AB^2)^3"))
    >>> str(root), k
    ('AB^2', 3)
    >>> proper_power_decomposition(CyclicWord.parse("A^2B^2")) is None
    True
    """
    cw = as_cyclic(w)
    syls = cw.syllables
    n = len(syls)
    if n == 0:
        raise ValueError("identity has no power decomposition")
    if n == 1:
        gen, exp = syls[0]
        k = abs(exp)
        if k < 2:
            return None
        return CyclicWord(((gen, 1 if exp > 0 else -1),)), k
    for d in range(1, n):
        if n % d == 0 and syls[d:] + syls[:d] == syls:
            return CyclicWord(_least_rotation(syls[:d])), n // d
    return None


def letter_length(w) -> int:
    return sum(abs(e) for _, e in w.syllables)
