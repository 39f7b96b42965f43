"""The P/SF family with ``alpha = A^-1 B^J A B^J`` and ``M = A (B A^2)^p``.

Builds the boundary word Gamma of a neighbourhood of ``alpha`` and ``M``,
the paths across its complementary tori, the six candidate relator families
and their homology determinants, and certificates for the unimodular hits.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

from .automorphisms import substitute
from .classify import Verdict, classify
from .relators import Prop48Verdict, prop48_check
from .whitehead_graph import build, is_robust
from .words import (CyclicWord, Word, abelianize, commutator, concat, cyclic_core,
                    cyclic_reduce)

CASES = (1, 2, 3, 4, 5, 6)
POSITIVE_CASES = (1, 2, 3)  # J > 1
NEGATIVE_CASES = (4, 5, 6)  # J < -1

_A, _B = Word.gen("A"), Word.gen("B")


def _a(k=1):
    return Word.gen("A", k)


def _b(k=1):
    return Word.gen("B", k)


def check_params(p: int, J: int) -> None:
    if p <= 0:
        raise ValueError("p > 0 required")
    if abs(J) <= 1:
        raise ValueError("|J| > 1 required")


def cases_for(J: int) -> tuple:
    return POSITIVE_CASES if J > 1 else NEGATIVE_CASES


def _check_case(case: int, p: int, J: int) -> None:
    check_params(p, J)
    if case not in CASES:
        raise ValueError(f"case must be in 1..6, got {case}")
    if case not in cases_for(J):
        raise ValueError(f"case {case} needs J {'> 1' if case <= 3 else '< -1'}, got J = {J}")


# -- words ---------------------------------------------------------------------------

def alpha_word(J: int) -> Word:
    """
    >>> str(alpha_word(2))
    'A^-1B^2AB^2'
    """
    return concat(_a(-1), _b(J), _A, _b(J))


def meridian_word(p: int) -> Word:
    """
    >>> str(meridian_word(1))
    'ABA^2'
    """
    return _A * (_B * _a(2)) ** p


def gamma_explicit(p: int, J: int) -> Word:
    """The boundary word written out as a string of powers."""
    return concat((_a(2) * _B) ** p, _A, _b(J), _A, _b(J),
                  (_a(-2) * _b(-1)) ** p, _a(-1), _b(-J), _a(-1), _b(-J))


def gamma_word(p: int, J: int) -> CyclicWord:
    check_params(p, J)
    explicit = CyclicWord.from_word(gamma_explicit(p, J))
    derived, _ = cyclic_reduce(commutator(meridian_word(p), alpha_word(J)))
    if explicit != derived:
        raise AssertionError(f"Gamma({p}, {J}): {explicit} != [M, alpha] = {derived}")
    return explicit


def p_paths(p: int, J: int) -> tuple:
    check_params(p, J)
    p3 = concat(_a(-1), (_b(-1) * _a(-2)) ** (p - 1), _b(-1), _a(-1))
    return _A, concat(_b(J), _A, _b(J)), p3


def p_prime_paths(p: int, J: int) -> tuple:
    """
    >>> [str(w) for w in p_prime_paths(1, -2)]
    ['B^-1', 'A^-1B^2A^-1', 'BA^2B']
    """
    check_params(p, J)
    if J > 1:
        return (_b(J - 1), concat(_b(-1), _a(-1), _b(-J), _a(-1), _b(-1)),
                (_a(2) * _B) ** (p - 1) * _a(2))
    return _b(J + 1), concat(_a(-1), _b(-J), _a(-1)), _B * (_a(2) * _B) ** p


def same_curve(u, v) -> bool:
    """Cyclic equality up to inversion."""
    cu, _ = cyclic_reduce(u)
    cv, _ = cyclic_reduce(v)
    return cu == cv or cu == cv.inverse()


@dataclass(frozen=True)
class BetaReport:
    p: int
    J: int
    p1p2_is_alpha_inv: bool
    p1p3_is_meridian: bool
    beta: CyclicWord
    beta_verdict: Verdict
    claim_image: Optional[CyclicWord]  # p = 1 only
    claim_holds: Optional[bool]

    @property
    def ok(self) -> bool:
        return (self.p1p2_is_alpha_inv and self.p1p3_is_meridian
                and self.beta_verdict is not Verdict.PROPER_POWER
                and self.claim_holds is not False)

    def to_json(self) -> dict:
        out = {"p": self.p, "J": self.J, "p1p2_is_alpha_inv": self.p1p2_is_alpha_inv,
               "p1p3_is_meridian": self.p1p3_is_meridian, "beta": str(self.beta),
               "beta_verdict": self.beta_verdict.value}
        if self.claim_image is not None:
            out["claim_image"] = str(self.claim_image)
            out["claim_holds"] = self.claim_holds
        return out


def beta_candidate_check(p: int, J: int) -> BetaReport:
    """
    ``ok`` asks that beta is not a proper power; at ``(1, 2)`` it is even
    primitive, its image ``A^3B^-1`` being a basis element.

    >>> r = beta_candidate_check(1, 2)
    >>> r.ok, str(r.claim_image), r.beta_verdict.value
    (True, 'A^3B^-1', 'Primitive')
    """
    p1, p2, p3 = p_paths(p, J)
    alpha, m = alpha_word(J), meridian_word(p)
    beta_word = p2 * ~p3
    beta, _ = cyclic_reduce(beta_word)
    image = holds = None
    if p == 1:
        image = CyclicWord.from_word(substitute(beta_word, {"A": _b(-J) * _A}))
        holds = image == CyclicWord.from_word(_a(3) * _b(1 - J))
    return BetaReport(p, J, same_curve(p1 * ~p2, ~alpha), same_curve(p1 * ~p3, m),
                      beta, classify(beta).verdict, image, holds)


def _composition(case: int, p: int, J: int, m: int) -> Word:
    q1, q2, q3 = p_prime_paths(p, J)
    if case in (1, 4):
        return q1 * ~q2 * (q3 * ~q2) ** m
    if case in (2, 5):
        return q2 * ~q1 * (q3 * ~q1) ** m
    return q3 * ~q2 * (q1 * ~q2) ** m


def _expansion(case: int, p: int, J: int, m: int) -> Word:
    a2b = _a(2) * _B
    if case == 1:
        return concat(_b(J), _A, _b(J), _A, _B,
                      concat(a2b ** (p - 1), _a(2), _B, _A, _b(J), _A, _B) ** m)
    if case == 2:
        return concat(_b(-1), _a(-1), _b(-J), _a(-1), _b(-J),
                      concat(a2b ** (p - 1), _a(2), _b(1 - J)) ** m)
    if case == 3:
        return concat(a2b ** (p - 1), _a(2), _B, _A, _b(J), _A, _B,
                      concat(_b(J), _A, _b(J), _A, _B) ** m)
    if case == 4:
        return concat(_b(J + 1), _A, _b(J), _A, concat(_B, a2b ** p, _A, _b(J), _A) ** m)
    if case == 5:
        return concat(_a(-1), _b(-J), _a(-1), _b(-J - 1), concat(_B, a2b ** p, _b(-J - 1)) ** m)
    return concat(_B, a2b ** p, _A, _b(J), _A, concat(_b(J + 1), _A, _b(J), _A) ** m)


def candidate_word(case: int, p: int, J: int, m: int) -> Word:
    """Freely reduced candidate relator, composed from the paths.

    >>> str(candidate_word(1, 1, 2, 0))
    'B^2AB^2AB'
    """
    _check_case(case, p, J)
    w = _composition(case, p, J, m)
    expanded = _expansion(case, p, J, m)
    if w != expanded:
        raise AssertionError(f"case {case} at {(p, J, m)}: composition {w} != expansion {expanded}")
    return w


def candidate_R(case: int, p: int, J: int, m: int) -> CyclicWord:
    return CyclicWord.from_word(candidate_word(case, p, J, m))


# -- determinants --------------------------------------------------------------------

def delta_direct(case: int, p: int, J: int, m: int) -> int:
    """det of the columns ``[M]`` and ``[R]`` in H1.

    >>> delta_direct(1, 1, 2, 0), delta_direct(4, 1, -2, -3)
    (13, 1)
    """
    M = abelianize(meridian_word(p))
    R = abelianize(candidate_word(case, p, J, m))
    return M.eA * R.eB - R.eA * M.eB


def delta_closed(case: int, p: int, J: int, m: int) -> int:
    """The six closed forms exactly as published."""
    _check_case(case, p, J)
    q = 2 * p + 1
    if case == 1:
        return (q * J + p + 1) * (m + 2) - q
    if case == 2:
        return (-q * J + p) * (m + 2) - q
    if case == 3:
        return (q * J - p) * (2 * m + 1) + q * (m + 1)
    if case == 4:
        return (q * (J + 1) - p) * (m + 2) - q
    if case == 5:
        return (q * J - p) * (m + 2) + q
    return (q * (J + 1) - p) * (2 * m + 1) - q * (m + 1)


def delta_closed_corrected(case: int, p: int, J: int, m: int) -> int:
    """Closed forms with case 6 rederived from the candidate's homology class.

    Case 6 has ``[R] = (2m+2p+2, J+m(2J+1)+p+1)``; the determinant is
    ``((2p+1)(J+1)-p)(2m+1) - (2p+1)m``.  The other cases are unchanged.
    """
    if case != 6:
        return delta_closed(case, p, J, m)
    _check_case(case, p, J)
    q = 2 * p + 1
    return (q * (J + 1) - p) * (2 * m + 1) - q * m


@dataclass(frozen=True)
class CaseReport:
    case: int
    word: CyclicWord
    direct: int
    closed: int

    @property
    def agrees(self) -> bool:
        return abs(self.direct) == abs(self.closed)

    @property
    def unimodular(self) -> bool:
        return abs(self.direct) == 1

    def to_json(self) -> dict:
        return {"case": self.case, "word": str(self.word), "direct": self.direct,
                "closed": self.closed, "agrees": self.agrees, "unimodular": self.unimodular}


def case_report(case: int, p: int, J: int, m: int) -> CaseReport:
    return CaseReport(case, candidate_R(case, p, J, m), delta_direct(case, p, J, m),
                      delta_closed(case, p, J, m))


# -- scans -------------------------------------------------------------------------------

def _grid(p_range, J_range, m_range, cases):
    cases = tuple(cases) if cases is not None else CASES
    for p, J, m in product(sorted(set(p_range)), sorted(set(J_range)), sorted(set(m_range))):
        if p <= 0 or abs(J) <= 1:
            continue
        for c in cases_for(J):
            if c in cases:
                yield c, p, J, m


def _hits_for_p(args):
    p, J_range, m_range, cases = args
    return [(c, p, J, m) for c, p, J, m in _grid([p], J_range, m_range, cases)
            if abs(delta_direct(c, p, J, m)) == 1]


def _map(fn, items, jobs: int):
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items))
    return [fn(x) for x in items]


def scan(p_range: Iterable[int], J_range: Iterable[int], m_range: Iterable[int],
         cases: Optional[Iterable[int]] = None, jobs: int = 1) -> list:
    """All ``(case, p, J, m)`` whose direct determinant is +-1, sorted.

    >>> scan(range(1, 3), [-3, -2, 2, 3], range(-4, 5))
    [(4, 1, -2, -3)]
    """
    J_range, m_range = sorted(set(J_range)), sorted(set(m_range))
    cases = tuple(cases) if cases is not None else None
    chunks = [(p, J_range, m_range, cases) for p in sorted(set(p_range))]
    return sorted(h for part in _map(_hits_for_p, chunks, jobs) for h in part)


@dataclass(frozen=True)
class Certificate:
    case: int
    word: Word  # cyclic core in the displayed rotation
    prop48: Prop48Verdict
    verdict: Verdict

    def to_json(self) -> dict:
        return {"case": self.case, "word": str(self.word), "prop48": self.prop48.to_json(),
                "classify": self.verdict.value}


@dataclass(frozen=True)
class FamilyReport:
    p: int
    J: int
    m: int
    cases: tuple
    certificates: tuple = ()

    @property
    def consistent(self) -> bool:
        return all(c.agrees for c in self.cases)

    def to_json(self) -> dict:
        return {"p": self.p, "J": self.J, "m": self.m,
                "cases": [c.to_json() for c in self.cases],
                "certificates": [c.to_json() for c in self.certificates]}


def certify_point(p: int, J: int, m: int, cases: Optional[Iterable[int]] = None) -> FamilyReport:
    """
    >>> r = certify_point(1, -2, -3)
    >>> c = r.certificates[0]
    >>> c.case, c.prop48.condition, str(c.prop48.witness[0])
    (4, 2, 'B^-3A^-2B^-1')
    """
    check_params(p, J)
    wanted = tuple(cases) if cases is not None else CASES
    reports, certs = [], []
    for c in cases_for(J):
        if c not in wanted:
            continue
        rep = case_report(c, p, J, m)
        reports.append(rep)
        if rep.unimodular:
            core, _ = cyclic_core(candidate_word(c, p, J, m))
            certs.append(Certificate(c, core, prop48_check(core), classify(core).verdict))
    return FamilyReport(p, J, m, tuple(reports), tuple(certs))


def _certify_for_p(args):
    p, J_range, m_range, cases = args
    return [certify_point(p, J, m, cases) for J in J_range for m in m_range if abs(J) > 1]


def certify(p_range, J_range, m_range, cases=None, jobs: int = 1) -> list:
    J_range, m_range = sorted(set(J_range)), sorted(set(m_range))
    cases = tuple(cases) if cases is not None else None
    chunks = [(p, J_range, m_range, cases) for p in sorted(set(p_range)) if p > 0]
    return [r for part in _map(_certify_for_p, chunks, jobs) for r in part]


def gamma_robustness(p_range, J_range) -> list:
    """``(p, J, robust)`` for each grid point."""
    return [(p, J, is_robust(build(gamma_word(p, J))))
            for p in sorted(set(p_range)) for J in sorted(set(J_range))
            if p > 0 and abs(J) > 1]


DEFAULT_P = range(1, 9)
DEFAULT_J = tuple(range(-9, -1)) + tuple(range(2, 10))
DEFAULT_M = range(-8, 9)
