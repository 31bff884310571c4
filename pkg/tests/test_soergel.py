from fractions import Fraction

from foamcalc.poly import Poly
from foamcalc.qcomb import QSeries, graded_dim_invariant_algebra, quantum_multinomial
from foamcalc.soergel import (
    InvariantAlgebra, adjunction_transpose, bimodule, graded_dim_bimodule, graded_dim_formula,
    graded_dim_presentation, hom_graded_dim, hom_space, identity_map, multiplication_map,
    trace_transpose,
)
from foamcalc.webs import BlWeb, Composition, Merge, Split, compositions_of, example_web_k11

MERGE = BlWeb(Composition((1, 1)), (Merge(0),))


def test_invariant_algebra_dims_match_series():
    for c in [(1,), (2,), (1, 1), (2, 1)]:
        A = InvariantAlgebra(Composition(c))
        s = graded_dim_invariant_algebra(c, 8)
        assert [A.dim(d) for d in range(0, 5)] == [int(s.coeff(2 * d)) for d in range(0, 5)]


def test_rank_over_full_symmetric_algebra():
    # Hilb(A_c) / Hilb(A_(k)) is the shifted multinomial
    for c in compositions_of(3):
        ratio = graded_dim_invariant_algebra(c, 12)
        base = graded_dim_invariant_algebra((3,), 12)
        assert ratio == (base * QSeries.from_laurent(quantum_multinomial(c).shift(
            Fraction(3 * 3 - sum(p * p for p in c), 2)), 12)).truncate(12)


def test_identity_web_is_algebra():
    B = bimodule(BlWeb.identity((1, 1)))
    assert B.basis_keys() == ((),)
    assert B.key_degree(()) == 0
    assert graded_dim_bimodule(BlWeb.identity((1, 1)), 4) == graded_dim_invariant_algebra((1, 1), 4)


def test_merge_is_shifted_algebra():
    lo = Fraction(-1, 2)
    s = graded_dim_bimodule(MERGE, 4)
    assert s.coeff(lo) == 1 and s.coeff(lo + 2) == 2 and s.coeff(lo + 4) == 3
    assert min(bimodule(MERGE).key_degree(k) for k in bimodule(MERGE).basis_keys()) == lo


def test_three_dimension_counts_agree_on_example():
    w = example_web_k11()
    assert graded_dim_bimodule(w, 4) == graded_dim_formula(w, 4)


def test_presentation_count_agrees_on_small_webs():
    w = BlWeb(Composition((2, 1)), (Merge(0), Split(0, 1, 2)))
    assert graded_dim_presentation(w, 6) == graded_dim_bimodule(w, 6)


def test_identity_hom_dims():
    idw = BlWeb.identity((1, 1))
    assert [hom_graded_dim(idw, idw, d) for d in (0, 2, 4)] == [1, 2, 3]
    assert hom_graded_dim(idw, idw, 1) == 0


def test_uncertified_when_cutoff_low():
    idw = BlWeb.identity((1, 1))
    assert not hom_space(idw, idw, 4, cutoff=2, with_basis=False).certified
    import pytest
    from foamcalc.soergel import CutoffError

    with pytest.raises(CutoffError):
        hom_graded_dim(idw, idw, 4, cutoff=2)


def test_multiplication_is_bimodule_map():
    x = Poly.var(2, 0)
    phi = multiplication_map(MERGE, x + Poly.var(2, 1))
    assert phi.check_linearity() and phi.degree == 2
    assert identity_map(MERGE).compose(phi).vector() == phi.vector()


def test_transpose_of_merge_identity_and_round_trip():
    phi = identity_map(MERGE)
    t = adjunction_transpose(phi)
    assert t.source == BlWeb(Composition((1, 1)), (Merge(0), Split(0, 1, 1)))
    assert t.target == BlWeb.identity((1, 1))
    assert t.degree == 1
    assert adjunction_transpose(t, inverse=True).vector() == phi.vector()


def test_trace_transpose_shift():
    N = BlWeb(Composition((2,)), (Split(0, 1, 1),))
    table = trace_transpose(MERGE, N, range(-2, 5))
    assert table["shift"] == 2
    assert table["match"]
    assert any(v for v in table["lhs"].values())
