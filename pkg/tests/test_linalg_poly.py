from fractions import Fraction

import pytest

from foamcalc.linalg import EchelonSpace, nullspace, rank, rank_mod_p
from foamcalc.poly import Poly, PolyDivisionError


def test_rank_and_nullspace():
    rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": 1}]
    assert rank(rows) == 2
    null = nullspace(rows, ["a", "b", "c"])
    assert len(null) == 1
    v = null[0]
    assert v.get("c", 0) == 0
    assert Fraction(v["a"]) == -2 * Fraction(v["b"])


def test_echelon_membership():
    E = EchelonSpace()
    assert E.add({0: 1, 1: 1})
    assert not E.add({0: 2, 1: 2})
    assert E.contains({0: Fraction(1, 3), 1: Fraction(1, 3)})
    assert not E.contains({0: 1})


def test_rank_mod_p_agrees():
    rows = [{0: 1, 1: 2, 2: 3}, {0: 4, 1: 5, 2: 6}, {0: 7, 1: 8, 2: 9}]
    assert rank(rows) == rank_mod_p(rows) == 2


def test_poly_arithmetic():
    x, y = Poly.var(2, 0), Poly.var(2, 1)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert p.degree() == 2
    assert (p - p).is_zero()
    assert Poly.const(2, 3).constant_term() == 3


def test_wrong_exponent_length():
    with pytest.raises(ValueError):
        Poly(2, {(1,): 1})


def test_division_error_type():
    assert issubclass(PolyDivisionError, ArithmeticError)
