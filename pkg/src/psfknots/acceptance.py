"""The twelve acceptance checks, shared by ``psfknots selftest`` and the tests.

Each check returns a :class:`Result`; ``fast=True`` shrinks the random
sample sizes and the band sweep for the CLI self test.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from . import family as fam
from .automorphisms import SYMMETRY_MOVES, T_MOVES, WhiteheadMove, apply_cyclic
from .classify import Verdict, classify, cmz_pattern, is_minimal, minimize, level_orbit
from .relators import (CableRelatorParams, RelatorParamError, TorusRelatorParams,
                       classify_one_two_band, knot_signature, prop48_check, relator_word,
                       validate)
from .whitehead_graph import (WeightForm, build, graph_from_weights, is_disconnected_or_cut,
                              is_robust, minimality_and_level, weight_form)
from .words import CyclicWord, Word, abelianize, commutator, cyclic_core, cyclic_reduce, parse


@dataclass
class Result:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    @property
    def in_budget(self) -> bool:
        return self.seconds < self.budget

    def line(self) -> str:
        status = "PASS" if self.passed and self.in_budget else "FAIL"
        return (f"[{status}] criterion {self.number:2d} {self.name}: {self.detail} "
                f"({self.seconds:.2f}s / {self.budget:g}s)")


def _timed(number, name, budget):
    def deco(fn):
        def run(fast: bool = False, seed: int = 0) -> Result:
            t0 = time.perf_counter()
            passed, detail = fn(fast=fast, seed=seed)
            return Result(number, name, passed, detail, time.perf_counter() - t0, budget)
        run.number, run.name, run.budget = number, name, budget
        run.__doc__ = fn.__doc__
        return run
    return deco


def _J_values(lo, hi):
    return [j for j in range(-hi, hi + 1) if lo <= abs(j) <= hi]


GRID_P = range(1, 9)
GRID_J = _J_values(2, 9)
GRID_M = range(-8, 9)


# -- random words ------------------------------------------------------------------------

_ALL_MOVES = T_MOVES + SYMMETRY_MOVES


def random_automorphic_image(rng: random.Random, seed_word: CyclicWord, max_len: int = 40,
                             steps: int = 40) -> CyclicWord:
    """Random walk of elementary moves from ``seed_word``, staying within ``max_len``."""
    w = seed_word
    for _ in range(rng.randint(1, steps)):
        nxt = apply_cyclic(rng.choice(_ALL_MOVES), w)
        if nxt.length <= max_len:
            w = nxt
    return w


def _images(rng, seed_word, count, max_len=40):
    return [random_automorphic_image(rng, seed_word, max_len) for _ in range(count)]


# -- criteria ------------------------------------------------------------------------------

@_timed(1, "Gamma identity", 1.0)
def criterion_1(fast=False, seed=0):
    """[M, alpha] cyclically reduces to the explicit boundary word."""
    bad = []
    for p, J in product(range(1, 7), _J_values(2, 6)):
        derived, _ = cyclic_reduce(commutator(fam.meridian_word(p), fam.alpha_word(J)))
        if derived != CyclicWord.from_word(fam.gamma_explicit(p, J)):
            bad.append((p, J))
    return not bad, f"{60 - len(bad)}/60 grid points equal" + (f"; mismatches {bad}" if bad else "")


def _regime_grid():
    for case, p, J, m in product(fam.CASES, GRID_P, GRID_J, GRID_M):
        if case in fam.cases_for(J):
            yield case, p, J, m


@_timed(2, "determinant equivalence", 10.0)
def criterion_2(fast=False, seed=0):
    """|delta_direct| = |delta_closed| with the published closed forms."""
    total, bad = 0, {}
    for case, p, J, m in _regime_grid():
        total += 1
        if abs(fam.delta_direct(case, p, J, m)) != abs(fam.delta_closed(case, p, J, m)):
            bad.setdefault(case, []).append((p, J, m))
    if not bad:
        return True, f"{total} regime-matched points agree"
    parts = [f"case {c}: {len(v)} mismatches, first {v[0]}" for c, v in sorted(bad.items())]
    return False, f"{total} points; " + "; ".join(parts)


@_timed(3, "unimodular scan", 10.0)
def criterion_3(fast=False, seed=0):
    hits = fam.scan(GRID_P, GRID_J, GRID_M)
    return hits == [(4, 1, -2, -3)], f"hits {hits}"


EXCEPTIONAL_R = "B^-3A^-2(B^-1A^-1B^2A^-1B^-1A^-2)^2"


@_timed(4, "exceptional certificate", 1.0)
def criterion_4(fast=False, seed=0):
    word = fam.candidate_word(4, 1, -2, -3)
    core, _ = cyclic_core(word)
    same = core == parse(EXCEPTIONAL_R)
    v = prop48_check(core)
    wit = str(v.witness[0]) if v.witness else None
    ok = same and v.kind == "ExcludesNonhyperbolic" and v.condition == 2 and wit == "B^-3A^-2B^-1"
    return ok, f"reduced {core}; prop48 {v.kind} condition {v.condition} witness {wit}"


@_timed(5, "path identities and claim", 5.0)
def criterion_5(fast=False, seed=0):
    """Path identities, beta classified Neither, and the p = 1 image."""
    failures = []
    for p, J in product(GRID_P, GRID_J):
        r = fam.beta_candidate_check(p, J)
        if not r.p1p2_is_alpha_inv:
            failures.append(f"P1P2^-1 != alpha^-1 at {(p, J)}")
        if not r.p1p3_is_meridian:
            failures.append(f"P1P3^-1 != M at {(p, J)}")
        if r.beta_verdict is not Verdict.NEITHER:
            failures.append(f"beta {r.beta} is {r.beta_verdict.value} at {(p, J)}")
        if r.claim_holds is False:
            failures.append(f"image {r.claim_image} != A^3B^{1 - J} at {(p, J)}")
    n = len(GRID_P) * len(GRID_J)
    return not failures, f"{n} grid points" + (f"; {'; '.join(failures)}" if failures else " clean")


@_timed(6, "Gamma robustness", 5.0)
def criterion_6(fast=False, seed=0):
    rows = fam.gamma_robustness(range(1, 7), _J_values(2, 6))
    bad = [(p, J) for p, J, ok in rows if not ok]
    return not bad, f"{len(rows) - len(bad)}/{len(rows)} robust"


@_timed(7, "Whitehead oracle", 30.0)
def criterion_7(fast=False, seed=0):
    """Random images of A, A^2, A^3 classify as constructed, with CMZ patterns."""
    rng = random.Random(seed)
    count = 100 if fast else 500
    failures, total, distinct = [], 0, set()
    for k in (1, 2, 3):
        for w in _images(rng, CyclicWord.parse(f"A^{k}"), count):
            total += 1
            distinct.add(w)
            c = classify(w)
            want = Verdict.PRIMITIVE if k == 1 else Verdict.PROPER_POWER
            if c.verdict is not want or (k > 1 and c.k != k):
                failures.append(f"{w}: {c.verdict.value} k={c.k}")
            elif cmz_pattern(w) is None:
                failures.append(f"{w}: no CMZ pattern")
    return not failures, f"{total - len(failures)}/{total} correct, {len(distinct)} distinct" + (
        f"; first failures {failures[:3]}" if failures else "")


def relator_params(limit: int):
    """Every valid torus and cable parameter record with entries in ``1..limit``."""
    r = range(1, limit + 1)
    cands = [TorusRelatorParams.rectangular(n, s) for n, s in product(r, r)]
    cands += [TorusRelatorParams.nonrectangular(*t) for t in product(r, repeat=4)]
    cands += [CableRelatorParams(*t) for t in product(r, repeat=5)]
    for params in cands:
        try:
            yield validate(params)
        except RelatorParamError:
            continue


@_timed(8, "min-length agreement", 10.0)
def criterion_8(fast=False, seed=0):
    """Relator words are minimal and have level T-moves exactly when s = 2."""
    level_ok = {WhiteheadMove.B_BA, WhiteheadMove.B_Ba}
    total, failures = 0, []
    for params in relator_params(8):
        if isinstance(params, TorusRelatorParams) and params.variant == "rectangular" \
                and params.n <= params.s:
            continue  # the exchange image of a record with n > s
        total += 1
        w = relator_word(params)
        wf = weight_form(build(w))
        minimal, level = minimality_and_level(wf)
        if not (minimal and is_minimal(w)):
            failures.append(f"{params}: not minimal")
        elif bool(level) != (params.s == 2) or not level <= level_ok:
            failures.append(f"{params}: level {sorted(m.token for m in level)}")
    return not failures, f"{total - len(failures)}/{total} parameter records" + (
        f"; {failures[:3]}" if failures else "")


@_timed(9, "relator arithmetic", 10.0)
def criterion_9(fast=False, seed=0):
    total, failures = 0, []
    for params in relator_params(12):
        total += 1
        w = relator_word(params)
        ab = abelianize(w)
        g = build(w)
        s = params.s
        if isinstance(params, CableRelatorParams):
            m, n, a, b, d = params.m, params.n, params.a, params.b, params.delta
            want_ab = (s * m * (a + b) + d, s * (a + b))
            want_cd = ((n - 1) * (a + b) + m * b, (s - 1) * (a + b))
        elif params.variant == "rectangular":
            want_ab = (params.n, s)
            want_cd = (params.n - 1, s - 1)
        else:
            n, a, b = params.n, params.a, params.b
            want_ab = ((a + b) * n + b, s * (a + b))
            want_cd = ((n - 1) * (a + b) + b, (s - 1) * (a + b))
        if tuple(ab) != want_ab or (g["A+A-"], g["B+B-"]) != want_cd:
            failures.append(f"{params}: ab {tuple(ab)} cd {(g['A+A-'], g['B+B-'])}")
    return not failures, f"{total - len(failures)}/{total} records" + (
        f"; {failures[:3]}" if failures else "")


@_timed(10, "band classifier cross-validation", 30.0)
def criterion_10(fast=False, seed=0):
    bound = 2 if fast else 4
    r = range(-bound, bound + 1)
    total, failures = 0, []
    for a, b in product(range(bound + 1), repeat=2):
        for m, n, s in product(r, r, r):
            total += 1
            v = classify_one_two_band(a, b, m, n, s)
            where = (a, b, m, n, s)
            if v.kind == "Primitive":
                if minimize(v.word if v.word.length else Word.gen("A"))[0].length != 1:
                    failures.append(f"{where}: primitive does not minimize to a generator")
            elif v.kind in ("TorusRelator", "CableRelator"):
                try:
                    validate(v.params)
                    sig = knot_signature(v.params)
                except RelatorParamError as e:
                    failures.append(f"{where}: {e}")
                    continue
                orbit = level_orbit(minimize(v.word)[0])
                if relator_word(v.params) not in orbit or sig != v.signature:
                    failures.append(f"{where}: relator form not in level orbit")
            else:
                if abs(abelianize(v.reduction).eA) == 1:
                    failures.append(f"{where}: reduction {v.reduction} has |eA| = 1")
            if not v.agrees_with_proof:
                failures.append(f"{where}: {v.kind} outside the proof's case")
    return not failures, f"{total - len(failures)}/{total} inputs" + (
        f"; {failures[:3]}" if failures else "")


@_timed(11, "proper-power graph law", 10.0)
def criterion_11(fast=False, seed=0):
    rng = random.Random(seed)
    count = 100 if fast else 300
    roots = _images(rng, CyclicWord.parse("A"), count, max_len=14)
    failures = []
    for i, root in enumerate(roots):
        k = 2 + i % 3
        w = CyclicWord.from_word(root.word() ** k)
        c = classify(w)
        if c.verdict is not Verdict.PROPER_POWER or c.k != k:
            failures.append(f"{w}: not verified as a proper power")
        elif not is_disconnected_or_cut(build(w)):
            failures.append(f"{w}: graph connected without cut vertex")
    return not failures, f"{count - len(failures)}/{count} proper powers" + (
        f"; {failures[:3]}" if failures else "")


@_timed(12, "robustness oracle", 5.0)
def criterion_12(fast=False, seed=0):
    failures = []
    for t in product(range(1, 5), repeat=4):
        if not is_robust(graph_from_weights(WeightForm(*t))):
            failures.append(f"{t} not robust")
    for c, d in product(range(5), repeat=2):
        if c * d == 0 and is_robust(graph_from_weights(WeightForm(1, 1, c, d))):
            failures.append(f"(1, 1, {c}, {d}) robust")
    return not failures, "256 positive forms robust, 9 degenerate forms not" if not failures \
        else "; ".join(failures[:3])


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12)


def run_all(fast: bool = False, seed: int = 0) -> list:
    return [c(fast=fast, seed=seed) for c in CRITERIA]
