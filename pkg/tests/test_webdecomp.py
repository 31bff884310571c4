from math import comb

import pytest

from foamcalc.corpus import annular_corpus, shipped_corpus
from foamcalc.glnoracle import annular_trace, circle_value
from foamcalc.qcomb import LaurentQ, quantum_binomial
from foamcalc.webdecomp import (
    SquareConfig, StepBudgetExceeded, digon_reduce, find_digon, ladder_web, qr_decompose,
    remove_digon, switch_terms,
)
from foamcalc.webs import BlWeb, Composition, Merge, Split, circles, closure


def q(e):
    return LaurentQ.monomial(e)


def test_digon_coefficients():
    assert digon_reduce(1, 1) == q(-1) + q(1)
    assert digon_reduce(2, 1) == q(-2) + q(0) + q(2)
    with pytest.raises(ValueError):
        digon_reduce(1, 0)


def test_identity_closure_is_its_own_decomposition():
    res = qr_decompose(circles((2, 1)))
    assert dict(res.positive) == {Composition((2, 1)): LaurentQ.const(1)}
    assert not res.negative


def test_digon_circle_decomposes_to_two_copies():
    w = closure(BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0))))
    assert find_digon(w) is not None
    res = qr_decompose(w)
    assert dict(res.positive) == {Composition((2,)): quantum_binomial(2, 1)}
    assert annular_trace(w, 3) == 2 * comb(3, 2)


def test_remove_digon_leaves_no_vertices():
    w = closure(BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0))))
    assert remove_digon(w, find_digon(w)[0]).layers == ()


def _square_terms(cfg):
    return [(coeff, ladder_web((cfg.x, cfg.y), rungs)) for coeff, rungs in switch_terms(cfg)]


def test_square_with_defect_zero_has_no_identity_summand():
    cfg = SquareConfig(1, 1, 1, 1, "FE")
    assert cfg.defect() == 0
    terms = _square_terms(cfg)
    assert len(terms) == 1 and terms[0][0] == LaurentQ.const(1)


def test_square_with_defect_one_adds_rung_free_web():
    cfg = SquareConfig(2, 1, 1, 1, "FE")
    assert cfg.defect() == 1
    terms = switch_terms(cfg)
    assert [str(c) for c, _ in terms] == ["1", "1"]
    assert terms[1][1] and all(r == 0 for _, r, _ in terms[1][1])


def test_negative_defect_subtracts():
    cfg = SquareConfig(2, 0, 1, 1, "EF")
    assert cfg.defect() == -2
    assert [str(c) for c, _ in switch_terms(cfg)] == ["1", "-q^-1 - q"]


def _oracle_ok(w, res):
    signed = res.signed()
    for N in range(w.k, w.k + 3):
        pred = sum(v.at_one() * circle_value(c, N) for c, v in signed.items())
        if annular_trace(w, N) != pred:
            return False
    return True


@pytest.mark.parametrize("name,w", shipped_corpus()[:8])
def test_corpus_entries_match_oracle(name, w):
    res = qr_decompose(w)
    assert res.positive.is_nonnegative() and res.negative.is_nonnegative()
    assert _oracle_ok(w, res)


def test_strategies_agree_up_to_circle_order():
    for w in annular_corpus(3, 4):
        a, b = qr_decompose(w, "bfs"), qr_decompose(w, "reverse")
        assert a.normal_form() == b.normal_form()


def test_normal_form_identifies_reordered_circles():
    from foamcalc.webdecomp import DecompositionResult, WebClass

    left, right = WebClass(), WebClass()
    left.add(Composition((1, 2)), LaurentQ.const(1))
    right.add(Composition((2, 1)), LaurentQ.const(1))
    assert left != right
    assert DecompositionResult(left, WebClass()).normal_form() == DecompositionResult(right, WebClass()).normal_form()


def test_json_report_has_both_sides():
    res = qr_decompose(shipped_corpus()[0][1])
    js = res.to_json()
    assert set(js) >= {"P", "Q", "normal_form", "steps"}


def test_budget_error_type():
    assert issubclass(StepBudgetExceeded, RuntimeError)
