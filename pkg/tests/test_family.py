import pytest

from psfknots import family as fam
from psfknots.classify import Verdict
from psfknots.words import CyclicWord, abelianize, cyclic_core, parse

NEG_J = [-5, -4, -3, -2]
POS_J = [2, 3, 4, 5]


def test_basic_words():
    assert str(fam.alpha_word(2)) == "A^-1B^2AB^2"
    assert str(fam.meridian_word(1)) == "ABA^2"
    assert fam.gamma_word(1, 2) == CyclicWord.parse(
        "(A^2B)AB^2AB^2(A^-2B^-1)A^-1B^-2A^-1B^-2")


def test_param_errors():
    with pytest.raises(ValueError):
        fam.alpha_word(1) and fam.p_paths(1, 1)
    with pytest.raises(ValueError):
        fam.candidate_R(1, 1, -2, 0)
    with pytest.raises(ValueError):
        fam.candidate_R(7, 1, 2, 0)


def test_prime_paths():
    assert [str(w) for w in fam.p_prime_paths(1, -2)] == ["B^-1", "A^-1B^2A^-1", "BA^2B"]
    assert str(fam.p_prime_paths(2, 3)[2]) == "A^2BA^2"


def test_candidate_examples():
    assert str(fam.candidate_word(1, 1, 2, 0)) == "B^2AB^2AB"
    assert fam.candidate_R(3, 1, 2, 0) == CyclicWord.parse("A^2BAB^2AB")
    core, _ = cyclic_core(fam.candidate_word(4, 1, -2, -3))
    assert core == parse("B^-3A^-2(B^-1A^-1B^2A^-1B^-1A^-2)^2")
    assert fam.candidate_word(4, 1, -2, -3) == parse("B^-1AB^-2A(BA^2BAB^-2A)^-3")


@pytest.mark.parametrize("case", fam.CASES)
def test_composition_matches_expansion(case):
    js = POS_J if case <= 3 else NEG_J
    for p in range(1, 5):
        for J in js:
            for m in range(-4, 5):
                fam.candidate_word(case, p, J, m)  # asserts internally


def test_abelianization_closed_forms():
    for p in range(1, 6):
        assert tuple(abelianize(fam.meridian_word(p))) == (2 * p + 1, p)
        for m in range(-3, 4):
            for J in POS_J + NEG_J:
                cases = {1: (m * (2 * p + 2) + 2, 2 * J + m * (J + p + 1) + 1),
                         2: (2 * m * p - 2, -2 * J + m * (p - J) - 1),
                         3: (2 * m + 2 * p + 2, J + m * (2 * J + 1) + p + 1)}
                for c in fam.cases_for(J):
                    want = cases[c if c <= 3 else c - 3]
                    assert tuple(abelianize(fam.candidate_word(c, p, J, m))) == want


def test_delta_examples():
    assert fam.delta_direct(1, 1, 2, 0) == 13 == fam.delta_closed(1, 1, 2, 0)
    assert fam.delta_direct(4, 1, -2, -3) == 1 == fam.delta_closed(4, 1, -2, -3)
    assert abs(fam.delta_direct(5, 1, -2, 0)) == 11 == abs(fam.delta_closed(5, 1, -2, 0))


def test_published_case_six_disagrees():
    assert fam.delta_direct(6, 1, -2, 0) == -4
    assert fam.delta_closed(6, 1, -2, 0) == -7
    assert fam.delta_closed_corrected(6, 1, -2, 0) == -4


@pytest.mark.parametrize("case", fam.CASES)
def test_corrected_forms_match_direct(case):
    js = POS_J if case <= 3 else NEG_J
    for p in range(1, 6):
        for J in js:
            for m in range(-6, 7):
                assert abs(fam.delta_direct(case, p, J, m)) == \
                    abs(fam.delta_closed_corrected(case, p, J, m))


def test_scan_and_jobs():
    grid = (range(1, 5), POS_J + NEG_J, range(-6, 7))
    assert fam.scan(*grid) == [(4, 1, -2, -3)]
    assert fam.scan(*grid, jobs=3) == fam.scan(*grid)
    assert fam.scan([], POS_J, range(3)) == []
    assert fam.scan(*grid, cases=[1, 2, 3]) == []


def test_certify_exceptional_point():
    r = fam.certify_point(1, -2, -3)
    assert [c.case for c in r.cases] == [4, 5, 6]
    (cert,) = r.certificates
    assert cert.prop48.condition == 2 and str(cert.prop48.witness[0]) == "B^-3A^-2B^-1"
    assert cert.verdict is Verdict.NEITHER


def test_certify_totality():
    reports = fam.certify(range(1, 4), NEG_J + POS_J, range(-5, 6))
    certs = [c for r in reports for c in r.certificates]
    assert len(certs) == 1 and all(c.prop48.kind != "Inconclusive" for c in certs)


def test_gamma_robust():
    assert all(ok for *_, ok in fam.gamma_robustness([1, 3], [-4, -2, 2]))


def test_beta_checks():
    r = fam.beta_candidate_check(1, 2)
    assert r.ok and str(r.claim_image) == "A^3B^-1"
    # A^3B^-1 is a basis element, so beta is primitive here rather than Neither
    assert r.beta_verdict is Verdict.PRIMITIVE
    r = fam.beta_candidate_check(2, 3)
    assert r.ok and r.beta_verdict is Verdict.NEITHER and r.claim_image is None
    r = fam.beta_candidate_check(1, -2)
    assert r.ok and r.beta_verdict is Verdict.NEITHER
