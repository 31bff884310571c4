from fractions import Fraction

import pytest

from foamcalc.qcomb import (
    LaurentQ, QSeries, binomial, classical_multinomial, graded_dim_invariant_algebra,
    quantum_binomial, quantum_factorial, quantum_integer, quantum_multinomial,
)


def q(e, v=1):
    return LaurentQ.monomial(e, v)


def test_quantum_integer_small():
    assert quantum_integer(0).is_zero()
    assert quantum_integer(1) == LaurentQ.const(1)
    assert quantum_integer(3) == q(-2) + q(0) + q(2)


def test_half_integer_exponents_round_trip():
    x = q(Fraction(1, 2)) * q(Fraction(3, 2))
    assert x == q(2)
    assert x.coeff(2) == 1


def test_binomial_is_bar_invariant_and_specializes():
    for n in range(7):
        for k in range(n + 1):
            b = quantum_binomial(n, k)
            assert b.bar() == b
            assert b.at_one() == binomial(n, k)


def test_binomial_from_factorials():
    for n in range(6):
        for k in range(n + 1):
            lhs = quantum_binomial(n, k) * quantum_factorial(k) * quantum_factorial(n - k)
            assert lhs == quantum_factorial(n)


def test_pascal_rule():
    # [n;k] = q^{-k} [n-1;k] + q^{n-k} [n-1;k-1]
    for n in range(1, 7):
        for k in range(1, n):
            rhs = quantum_binomial(n - 1, k) * q(-k) + quantum_binomial(n - 1, k - 1) * q(n - k)
            assert quantum_binomial(n, k) == rhs


def test_multinomial_factorizes_into_binomials():
    parts = (2, 1, 3)
    assert quantum_multinomial(parts) == quantum_binomial(6, 3) * quantum_binomial(3, 1)
    assert quantum_multinomial(parts).at_one() == classical_multinomial(parts) == 60


def test_generalized_binomial_negative_top():
    assert quantum_binomial(-1, 2) == quantum_binomial(2, 2)
    assert quantum_binomial(-2, 1) == quantum_binomial(2, 1) * -1
    assert quantum_binomial(2, 3).is_zero()


def test_split_signs():
    x = q(1, 2) - q(-1, 3)
    pos, neg = x.split_signs()
    assert pos == q(1, 2) and neg == q(-1, 3)


def test_invariant_algebra_series_one_variable():
    s = graded_dim_invariant_algebra((1,), 10)
    assert [s.coeff(d) for d in range(0, 11)] == [1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_invariant_algebra_series_block_of_two():
    # Q[e1, e2] with degrees 2 and 4
    s = graded_dim_invariant_algebra((2,), 8)
    assert [s.coeff(d) for d in (0, 2, 4, 6, 8)] == [1, 1, 2, 2, 3]


def test_series_truncation_and_division():
    one = QSeries.one(6)
    s = one.divide_one_minus(1)
    assert [s.coeff(d) for d in range(7)] == [1, 0, 1, 0, 1, 0, 1]
    assert s.truncation == 6


def test_negative_integer_rejected():
    with pytest.raises(ValueError):
        quantum_integer(-1)
