import random
from fractions import Fraction
from itertools import product
from math import comb

from foamcalc.poly import Poly
from foamcalc.symfun import (
    Partition, SymPoly, elementary_sym, expand_split, frobenius_trace, parse_symexpr,
    partitions_in_box, power_sum, rect_dual, schur, schur_poly, split_pairing,
)


def test_partition_basics():
    lam = Partition((3, 1))
    assert lam.size == 4
    assert lam.transpose() == Partition((2, 1, 1))
    assert lam.fits(2, 3) and not lam.fits(1, 3)


def test_box_partitions_count():
    for a in range(4):
        for b in range(4):
            assert len(partitions_in_box(a, b)) == comb(a + b, a)


def test_rect_dual_is_involution():
    for lam in partitions_in_box(2, 3):
        mu = rect_dual(lam, 2, 3)
        assert lam.size + mu.size == 6
        assert rect_dual(mu, 3, 2) == lam


def test_schur_small_cases():
    assert schur(Partition((1,)), 3) == elementary_sym(3, 1)
    assert schur(Partition((1, 1)), 3) == elementary_sym(3, 2)
    # s_(2) = h_2 = p_2 + e_2 in two variables... check via p_2 = s_2 - s_11
    assert power_sum(2, 2) == schur(Partition((2,)), 2) - schur(Partition((1, 1)), 2)


def test_schur_vanishes_with_too_many_rows():
    assert schur_poly(Partition((1, 1, 1)), [0, 1], 2).is_zero()


def test_elementary_expansion_round_trip():
    P = schur(Partition((2, 1)), 3)
    text = P.as_expr()
    assert parse_symexpr(text, 3) == P
    assert parse_symexpr("e1*e2 - e3", 3) == P


def test_parse_constants_and_power_sums():
    assert parse_symexpr("1", 2) == SymPoly.one(2)
    assert parse_symexpr("0", 2).is_zero()
    assert parse_symexpr("p2", 2) == power_sum(2, 2)


def _rand_sym(n, rng, max_deg=3):
    out = SymPoly(n)
    for lam in partitions_in_box(n, max_deg):
        c = rng.randint(-2, 2)
        if c:
            out = out + SymPoly(n, {lam: c})
    return out


def test_split_pairing_matches_evaluation_formula():
    rng = random.Random(7)
    for a, b in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        n = a + b
        P, Q = _rand_sym(a, rng), _rand_sym(b, rng)
        pa, qb = P.to_poly(list(range(a)), n), Q.to_poly(list(range(a, n)), n)
        pair = frobenius_trace(pa * qb, list(range(a)), list(range(a, n)))
        assert pair == split_pairing(P, Q).to_poly(list(range(n)), n)


def test_split_pairing_diagonal():
    # each box partition pairs to the sign (-1)^|dual| with its dual
    for a, b in product(range(1, 3), repeat=2):
        total = SymPoly(a + b)
        for lam in partitions_in_box(a, b):
            dual = rect_dual(lam, a, b)
            term = split_pairing(schur(lam, a), schur(dual, b))
            total = total + (term * -1 if dual.size % 2 else term)
        assert total == SymPoly(a + b, {Partition(): comb(a + b, a)})


def test_frobenius_trace_degree_and_zero():
    n = 3
    x = [Poly.var(n, i) for i in range(n)]
    # symmetric input of degree < 2ab traces to zero
    assert frobenius_trace(x[0] + x[1] + x[2], [0], [1, 2]).is_zero()
    t = frobenius_trace(x[0] ** 2, [0], [1, 2])
    assert t == Poly.const(n, 1)


def test_expand_split_recovers_polynomial():
    P = schur(Partition((2, 1)), 3)
    total = Poly.zero(3)
    for c, L, R in expand_split(P, 1):
        total = total + L.to_poly([0], 3) * R.to_poly([1, 2], 3) * c
    assert total == P.to_poly([0, 1, 2], 3)


def test_from_poly_requires_symmetry():
    import pytest

    with pytest.raises(ValueError):
        SymPoly.from_poly(Poly.var(2, 0))
    assert SymPoly.from_poly(Poly.var(2, 0) + Poly.var(2, 1)) == elementary_sym(2, 1)
    assert SymPoly(2, {Partition(): Fraction(1, 2)}).degree() == 0
