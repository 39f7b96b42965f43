"""Torus and cable knot relators, the one/two-band classifier and the
band-label test that rules out torus and cable exteriors.

Relator words interleave their two block types in the balanced (Sturmian)
order: block ``i`` of ``a + b`` is the long one iff
``floor((i+1) b / (a+b)) > floor(i b / (a+b))``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd
from typing import Optional, Union

from .automorphisms import substitute
from .classify import Verdict, classify, level_orbit, minimize
from .words import CyclicWord, Word, abelianize, as_cyclic, cyclic_core, syllable_stats


class RelatorParamError(ValueError):
    """Parameter record violates one or more named constraints."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# -- parameter records ---------------------------------------------------------

@dataclass(frozen=True)
class TorusRelatorParams:
    n: int
    s: int
    a: int = 1
    b: int = 0
    variant: str = "rectangular"

    @classmethod
    def rectangular(cls, n: int, s: int) -> "TorusRelatorParams":
        return cls(n, s, 1, 0, "rectangular")

    @classmethod
    def nonrectangular(cls, n: int, s: int, a: int, b: int) -> "TorusRelatorParams":
        return cls(n, s, a, b, "nonrectangular")

    def to_json(self) -> dict:
        return {"type": "torus", "variant": self.variant, "n": self.n, "s": self.s,
                "a": self.a, "b": self.b}


@dataclass(frozen=True)
class CableRelatorParams:
    m: int
    n: int
    s: int
    a: int
    b: int
    delta: Optional[int] = None

    def to_json(self) -> dict:
        return {"type": "cable", "m": self.m, "n": self.n, "s": self.s,
                "a": self.a, "b": self.b, "delta": self.delta}


RelatorParams = Union[TorusRelatorParams, CableRelatorParams]


def validate(params: RelatorParams) -> RelatorParams:
    """Check every constraint; cable records come back with ``delta`` filled in.

    >>> validate(CableRelatorParams(2, 3, 2, 2, 1)).delta
    -1
    """
    errors = []
    if isinstance(params, TorusRelatorParams):
        n, s, a, b = params.n, params.s, params.a, params.b
        if n <= 1:
            errors.append("n > 1")
        if s <= 1:
            errors.append("s > 1")
        if params.variant == "rectangular":
            if (a, b) != (1, 0):
                errors.append("rectangular requires a = 1, b = 0")
            elif gcd(n, s) != 1:
                errors.append("gcd(n, s) = 1")
        elif params.variant == "nonrectangular":
            if a <= 0 or b <= 0:
                errors.append("a, b > 0")
            elif gcd(a, b) != 1:
                errors.append("gcd(a, b) = 1")
            elif gcd((a + b) * n + b, s) != 1:
                errors.append("gcd((a+b)n+b, s) = 1")
        else:
            errors.append(f"unknown variant {params.variant!r}")
        if errors:
            raise RelatorParamError(errors)
        return params
    if isinstance(params, CableRelatorParams):
        m, n, s, a, b = params.m, params.n, params.s, params.a, params.b
        for name, v in (("m", m), ("n", n), ("s", s)):
            if v <= 1:
                errors.append(f"{name} > 1")
        if a <= 0 or b <= 0:
            errors.append("a, b > 0")
        if not errors:
            if gcd(a, b) != 1:
                errors.append("gcd(a, b) = 1")
            if gcd(m, n) != 1:
                errors.append("gcd(m, n) = 1")
            delta = n * (a + b) + b * m - s * m * (a + b)
            if delta not in (1, -1):
                errors.append("n(a+b) + bm = sm(a+b) +- 1")
            elif params.delta is not None and params.delta != delta:
                errors.append(f"delta = {delta}")
        if errors:
            raise RelatorParamError(errors)
        return replace(params, delta=delta)
    raise TypeError(f"not a relator parameter record: {params!r}")


# -- words -----------------------------------------------------------------------

def _block_is_long(i: int, a: int, b: int) -> bool:
    t = a + b
    return (i + 1) * b // t > i * b // t


def block_word(a: int, b: int, s: int, short: int, long: int) -> Word:
    """``a`` blocks ``B^s A^short`` and ``b`` blocks ``B^s A^long``, balanced."""
    syls = []
    for i in range(a + b):
        syls.append(("B", s))
        syls.append(("A", long if _block_is_long(i, a, b) else short))
    return Word(syls)


def relator_word(params: RelatorParams) -> CyclicWord:
    """
    >>> str(relator_word(TorusRelatorParams.rectangular(3, 2)))
    'A^3B^2'
    >>> str(relator_word(TorusRelatorParams.nonrectangular(2, 2, 2, 1)))
    'A^2B^2A^2B^2A^3B^2'
    """
    params = validate(params)
    if isinstance(params, TorusRelatorParams):
        if params.variant == "rectangular":
            return CyclicWord.from_word(Word((("A", params.n), ("B", params.s))))
        return CyclicWord.from_word(
            block_word(params.a, params.b, params.s, params.n, params.n + 1))
    return CyclicWord.from_word(
        block_word(params.a, params.b, params.s, params.n, params.n + params.m))


@dataclass(frozen=True)
class KnotSignature:
    kind: str  # "torus" or "cable"
    p: int
    q: int
    companion: Optional[tuple] = None  # (p0, q0) for cables

    def __str__(self):
        if self.kind == "torus":
            return f"({self.p},{self.q}) torus knot"
        p0, q0 = self.companion
        return f"({self.p},{self.q})-cable of the ({p0},{q0}) torus knot"

    def to_json(self) -> dict:
        out = {"kind": self.kind, "p": self.p, "q": self.q, "text": str(self)}
        if self.companion is not None:
            out["companion"] = list(self.companion)
        return out


def knot_signature(params: RelatorParams) -> KnotSignature:
    """
    >>> str(knot_signature(TorusRelatorParams.nonrectangular(2, 2, 2, 1)))
    '(7,2) torus knot'
    >>> str(knot_signature(CableRelatorParams(2, 3, 2, 2, 1)))
    '(11,2)-cable of the (2,3) torus knot'
    """
    params = validate(params)
    if isinstance(params, TorusRelatorParams):
        if params.variant == "rectangular":
            if params.n <= params.s:
                raise RelatorParamError(["rectangular signature requires n > s"])
            return KnotSignature("torus", params.n, params.s)
        return KnotSignature("torus", (params.a + params.b) * params.n + params.b, params.s)
    p0, q0 = params.m, params.a + params.b
    return KnotSignature("cable", params.s * p0 * q0 + params.delta, params.s, (p0, q0))


# -- recognition -------------------------------------------------------------------

def _symmetry_images(w: CyclicWord):
    base = w.word()
    seen = []
    for word in (base, ~base):
        for swap in (False, True):
            for inv_a in (False, True):
                for inv_b in (False, True):
                    syls = []
                    for g, e in word.syllables:
                        g2 = {"A": "B", "B": "A"}[g] if swap else g
                        if (g2 == "A" and inv_a) or (g2 == "B" and inv_b):
                            e = -e
                        syls.append((g2, e))
                    img = CyclicWord.from_word(Word(syls))
                    if img not in seen:
                        seen.append(img)
                        yield img


def match_relator(w) -> Optional[RelatorParams]:
    """Return relator parameters when ``w`` is, up to symmetry, a canonical
    torus or cable relator word; block order must match exactly."""
    cw = as_cyclic(w)
    for img in _symmetry_images(cw):
        params = _match_positive(img)
        if params is not None:
            return params
    return None


def _match_positive(cw: CyclicWord) -> Optional[RelatorParams]:
    syls = cw.syllables
    if len(syls) < 2 or any(e <= 0 for _, e in syls):
        return None
    b_exps = {e for g, e in syls if g == "B"}
    a_exps = sorted({e for g, e in syls if g == "A"})
    if len(b_exps) != 1:
        return None
    (s,) = b_exps
    if len(syls) == 2:
        cand = TorusRelatorParams.rectangular(a_exps[0], s)
        if a_exps[0] <= s:
            return None
    elif len(a_exps) == 2:
        lo, hi = a_exps
        a = sum(1 for g, e in syls if g == "A" and e == lo)
        b = sum(1 for g, e in syls if g == "A" and e == hi)
        if hi - lo == 1:
            cand = TorusRelatorParams.nonrectangular(lo, s, a, b)
        else:
            cand = CableRelatorParams(hi - lo, lo, s, a, b)
    else:
        return None
    try:
        cand = validate(cand)
    except RelatorParamError:
        return None
    return cand if relator_word(cand) == cw else None


@dataclass(frozen=True)
class BandVerdict:
    kind: str  # Primitive | TorusRelator | CableRelator | NotEmbeddable
    word: CyclicWord
    steps: tuple = ()
    moves: tuple = ()
    params: Optional[RelatorParams] = None
    signature: Optional[KnotSignature] = None
    reason: Optional[str] = None
    obstruction: Optional[str] = None  # homology | wave | no-relator-form | trivial
    reduction: Optional[Word] = None
    expected: Optional[tuple] = None  # kinds the proof's case analysis allows

    @property
    def agrees_with_proof(self) -> bool:
        return self.expected is None or self.kind in self.expected

    def to_json(self) -> dict:
        out = {"verdict": self.kind, "word": str(self.word), "steps": list(self.steps)}
        if self.moves:
            out["moves"] = [m.token for m in self.moves]
        if self.params is not None:
            out["params"] = self.params.to_json()
        if self.signature is not None:
            out["signature"] = str(self.signature)
        if self.reason is not None:
            out["reason"] = self.reason
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction
        if self.reduction is not None:
            out["reduction"] = str(self.reduction)
        out["agrees_with_proof"] = self.agrees_with_proof
        return out


def recognize(w, steps=()) -> BandVerdict:
    """Decide primitive / torus relator / cable relator / not embeddable.

    Homology first (a knot exterior has H1 = Z), then Whitehead minimization,
    then a search of the level orbit for a canonical relator word.
    """
    cw = as_cyclic(w)
    steps = tuple(steps)
    if cw.is_identity():
        return BandVerdict("NotEmbeddable", cw, steps, reason="R is trivial",
                           obstruction="trivial", reduction=Word())
    ab = abelianize(cw)
    if gcd(ab.eA, ab.eB) != 1:
        return BandVerdict("NotEmbeddable", cw, steps,
                           reason=f"H1 has torsion: gcd({ab.eA}, {ab.eB}) != 1",
                           obstruction="homology", reduction=cw.word())
    mn, moves = minimize(cw)
    if mn.length == 1:
        return BandVerdict("Primitive", cw, steps, moves=moves)
    params = match_relator(mn)
    if params is None:
        for form in sorted(level_orbit(mn), key=lambda f: (str(f))):
            params = match_relator(form)
            if params is not None:
                break
    if params is None:
        return BandVerdict("NotEmbeddable", cw, steps, moves=moves,
                           reason="not primitive and no torus or cable relator form",
                           obstruction="no-relator-form", reduction=cw.word())
    kind = "TorusRelator" if isinstance(params, TorusRelatorParams) else "CableRelator"
    return BandVerdict(kind, cw, steps, moves=moves, params=params,
                       signature=knot_signature(params))


def band_word(a: int, b: int, m: int, n: int, s: int) -> Word:
    """The curve with ``a`` blocks ``B^s A^n`` and ``b`` blocks ``B^s A^(n+m)``."""
    return block_word(a, b, s, n, n + m)


def classify_one_two_band(a: int, b: int, m: int, n: int, s: int) -> BandVerdict:
    """Replay the case analysis for one band in one handle and at most two
    bands in the other, deciding each leaf with :func:`recognize`.

    >>> classify_one_two_band(2, 1, 1, 1, 1).kind
    'Primitive'
    >>> v = classify_one_two_band(1, 1, 1, 2, 3)
    >>> v.kind, str(v.signature)
    ('TorusRelator', '(5,3) torus knot')
    """
    if a < 0 or b < 0:
        raise ValueError("a, b >= 0 required")
    original = CyclicWord.from_word(band_word(a, b, m, n, s))
    steps = []

    def done(v: BandVerdict, expected=None) -> BandVerdict:
        return replace(v, word=original, steps=tuple(steps), expected=expected)

    if a + b == 0:
        steps.append("a + b = 0: no blocks")
        return done(recognize(Word()))
    if s < 0:
        steps.append("invB: s -> -s")
        s = -s
    if m < 0:
        steps.append("invA: (n, m) -> (-n, -m)")
        n, m = -n, -m

    if m == 0 or a * b == 0:
        t, k = (a + b, n) if m == 0 else ((a, n) if b == 0 else (b, n + m))
        steps.append(f"single block type: R = (B^{s}A^{k})^{t}")
        r = recognize(Word((("B", s), ("A", k))) ** t)
        if m == 0:
            expected = ("Primitive", "NotEmbeddable", "TorusRelator")
        else:
            expected = ("Primitive", "TorusRelator", "NotEmbeddable")
        return done(r, expected)

    if s == 0:
        e = (a + b) * n + b * m
        steps.append(f"s = 0: R = A^{e}")
        return done(recognize(Word.gen("A", e)), ("Primitive", "NotEmbeddable"))

    word = band_word(a, b, m, n, s)
    ab = abelianize(word)
    if gcd(ab.eA, ab.eB) != 1:
        steps.append("homology obstruction")
        return done(recognize(word))

    if s == 1:
        steps.append(f"s = 1: B -> BA^{-n}")
        image = substitute(word, {"B": Word((("B", 1), ("A", -n)))})
        steps.append(f"image {CyclicWord.from_word(image)}")
        expected = ("Primitive",) if m == 1 else ("TorusRelator",)
        return done(recognize(image), expected)

    if n * (m + n) < 0:
        steps.append("s > 1, n(m+n) < 0: vertical wave gives meridian B^s")
        return done(BandVerdict(
            "NotEmbeddable", original, reason=f"meridian B^{s} with s > 1",
            obstruction="wave", reduction=Word.gen("B", s)))

    if n * (m + n) > 0:
        steps.append("s > 1, n(m+n) > 0")
        return done(recognize(word), ("TorusRelator", "CableRelator", "NotEmbeddable"))

    if n != 0:
        steps.append("n + m = 0: invA, swapping block roles")
        a, b = b, a
    steps.append(f"n = 0, labels 0 and {m}")
    word = band_word(a, b, m, 0, s)
    rho, r = divmod(a, b)
    if m == 1 and r == 0:
        steps.append(f"r = 0: R = AB^{(rho + 1) * s}")
        return done(recognize(word), ("Primitive",))
    if m == 1:
        e = (rho + 1) * s
        steps.append(f"A -> AB^{-e}")
        image = substitute(word, {"A": Word((("A", 1), ("B", -e)))})
        steps.append(f"image {CyclicWord.from_word(image)}")
        return done(recognize(image), ("TorusRelator", "CableRelator", "NotEmbeddable"))
    return done(recognize(word))


# -- band-label exclusion test -------------------------------------------------------

@dataclass(frozen=True)
class Prop48Verdict:
    kind: str  # ExcludesNonhyperbolic | PreconditionFailed | Inconclusive
    condition: Optional[int] = None
    witness: tuple = ()
    reason: Optional[str] = None

    def to_json(self) -> dict:
        out = {"verdict": self.kind}
        if self.condition is not None:
            out["condition"] = self.condition
        if self.witness:
            out["witness"] = [str(w) for w in self.witness]
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _flank_witness(syls, gen: str) -> Optional[Word]:
    n = len(syls)
    for i, (g, e) in enumerate(syls):
        if g == gen and abs(e) == 2:
            prev, nxt = syls[i - 1], syls[(i + 1) % n]
            if prev.exp != nxt.exp:
                return Word((prev, syls[i], nxt))
    return None


def prop48_check(w) -> Prop48Verdict:
    """Band-label test excluding unknot, torus and cable exteriors.

    Syllable exponents stand in for band labels.  A :class:`Word` is scanned
    in its own cyclic order, so witnesses follow the given rotation.

    >>> from psfknots.words import parse
    >>> v = prop48_check(parse("B^-3A^-2(B^-1A^-1B^2A^-1B^-1A^-2)^2"))
    >>> v.kind, v.condition, str(v.witness[0])
    ('ExcludesNonhyperbolic', 2, 'B^-3A^-2B^-1')
    """
    if isinstance(w, Word):
        syls = cyclic_core(w)[0].syllables
    else:
        syls = as_cyclic(w).syllables
    if not syls:
        raise ValueError("the identity word is not a curve")
    stats = syllable_stats(CyclicWord.from_word(Word(syls)))
    if stats.distinct["A"] < 2 or stats.distinct["B"] < 2:
        return Prop48Verdict("PreconditionFailed",
                             reason="fewer than two distinct exponents for some generator")
    q, r = stats.max_abs["A"], stats.max_abs["B"]
    if q > 2 and r > 2:
        return Prop48Verdict("ExcludesNonhyperbolic", 1)
    if (q == 2 and r > 2) or (r == 2 and q > 2):
        wit = _flank_witness(syls, "A" if q == 2 else "B")
        if wit is not None:
            return Prop48Verdict("ExcludesNonhyperbolic", 2, (wit,))
    if q == 2 and r == 2:
        wa, wb = _flank_witness(syls, "A"), _flank_witness(syls, "B")
        if wa is not None and wb is not None:
            return Prop48Verdict("ExcludesNonhyperbolic", 3, (wa, wb))
    return Prop48Verdict("Inconclusive")


# -- proper power curve types ----------------------------------------------------------

def proper_power_type_word(kind: str, s: int = 1, a: int = 1, b: int = 1, c: int = 1) -> CyclicWord:
    """Type III ``(AB^s)^(a+b)`` or Type IV ``(AB)^(a+b+c)``."""
    if kind == "III":
        if s <= 0 or a <= 0 or b <= 0:
            raise ValueError("Type III needs s > 0 and a, b > 0")
        w = Word((("A", 1), ("B", s))) ** (a + b)
    elif kind == "IV":
        if a <= 0 or b <= 0 or c <= 0:
            raise ValueError("Type IV needs a, b, c > 0")
        w = Word((("A", 1), ("B", 1))) ** (a + b + c)
    else:
        raise ValueError(f"unsupported proper power type {kind!r}")
    cw = CyclicWord.from_word(w)
    if classify(cw).verdict is not Verdict.PROPER_POWER:
        raise AssertionError(f"{cw} is not a proper power of a primitive")
    return cw

