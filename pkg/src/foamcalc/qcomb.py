"""Laurent polynomials in q^(1/2) and truncated power series.

Exponents are kept on the half-integer grid by storing ``2*e`` as an int,
so every shift of the form ab/2 is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

Number = int | Fraction


def _half(e) -> int:
    """Return the doubled integer encoding of a half-integer exponent."""
    d = Fraction(e) * 2
    if d.denominator != 1:
        raise ValueError(f"exponent {e} is not a half-integer")
    return int(d)


def _fmt_exp(d: int) -> str:
    if d % 2 == 0:
        return str(d // 2)
    return f"{d}/2"


class LaurentQ:
    """Finite Laurent polynomial in q with half-integer exponents."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | None = None, *, doubled: bool = False):
        c: dict[int, Fraction] = {}
        for e, v in (coeffs or {}).items():
            if v == 0:
                continue
            d = int(e) if doubled else _half(e)
            c[d] = c.get(d, Fraction(0)) + Fraction(v)
            if c[d] == 0:
                del c[d]
        self._c = c

    @classmethod
    def _raw(cls, c: dict[int, Fraction]) -> "LaurentQ":
        obj = cls.__new__(cls)
        obj._c = {d: v for d, v in c.items() if v != 0}
        return obj

    @classmethod
    def const(cls, v: Number) -> "LaurentQ":
        return cls._raw({0: Fraction(v)})

    @classmethod
    def monomial(cls, e, v: Number = 1) -> "LaurentQ":
        """``v * q^e`` for a half-integer ``e``."""
        return cls._raw({_half(e): Fraction(v)})

    # -- access ---------------------------------------------------------
    def items(self):
        """Yield ``(exponent, coefficient)`` pairs in increasing exponent order."""
        for d in sorted(self._c):
            yield Fraction(d, 2), self._c[d]

    def coeff(self, e) -> Fraction:
        return self._c.get(_half(e), Fraction(0))

    def doubled_items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self) -> Fraction:
        return Fraction(min(self._c), 2)

    def max_exp(self) -> Fraction:
        return Fraction(max(self._c), 2)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        other = _as_laurent(other)
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, Fraction(0)) + v
        return LaurentQ._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ._raw({d: -v for d, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __mul__(self, other):
        other = _as_laurent(other)
        c: dict[int, Fraction] = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, Fraction(0)) + v1 * v2
        return LaurentQ._raw(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        out = LaurentQ.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, s) -> "LaurentQ":
        """Multiply by ``q^s``."""
        ds = _half(s)
        return LaurentQ._raw({d + ds: v for d, v in self._c.items()})

    def bar(self) -> "LaurentQ":
        """The involution q -> q^{-1}."""
        return LaurentQ._raw({-d: v for d, v in self._c.items()})

    def at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def split_signs(self) -> tuple["LaurentQ", "LaurentQ"]:
        """(positive part, negated negative part), both with nonnegative coefficients."""
        pos = {d: v for d, v in self._c.items() if v > 0}
        neg = {d: -v for d, v in self._c.items() if v < 0}
        return LaurentQ._raw(pos), LaurentQ._raw(neg)

    def is_nonnegative_integral(self) -> bool:
        return all(v >= 0 and v.denominator == 1 for v in self._c.values())

    def __eq__(self, other):
        try:
            other = _as_laurent(other)
        except TypeError:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"LaurentQ({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for d in sorted(self._c):
            v = self._c[d]
            if d == 0:
                body = str(v)
            else:
                mono = "q" if d == 2 else f"q^{_fmt_exp(d)}"
                if v == 1:
                    body = mono
                elif v == -1:
                    body = "-" + mono
                else:
                    body = f"{v}*{mono}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self) -> dict[str, str]:
        return {_fmt_exp(d): str(v) for d, v in sorted(self._c.items())}


def _as_laurent(x) -> LaurentQ:
    if isinstance(x, LaurentQ):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentQ.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentQ")


class QSeries:
    """Power series in q truncated at exponent ``trunc`` (inclusive)."""

    __slots__ = ("_c", "_t")

    def __init__(self, coeffs: Mapping | None = None, trunc=0, *, doubled: bool = False):
        self._t = int(trunc) if doubled else _half(trunc)
        c: dict[int, Fraction] = {}
        for e, v in (coeffs or {}).items():
            d = int(e) if doubled else _half(e)
            if d <= self._t and v != 0:
                c[d] = c.get(d, Fraction(0)) + Fraction(v)
        self._c = {d: v for d, v in c.items() if v != 0}

    @classmethod
    def from_laurent(cls, p: LaurentQ, trunc) -> "QSeries":
        return cls(dict(p.doubled_items()), _half(trunc), doubled=True)

    @classmethod
    def one(cls, trunc) -> "QSeries":
        return cls({0: 1}, trunc)

    @property
    def truncation(self) -> Fraction:
        return Fraction(self._t, 2)

    def coeff(self, e) -> Fraction:
        return self._c.get(_half(e), Fraction(0))

    def items(self):
        for d in sorted(self._c):
            yield Fraction(d, 2), self._c[d]

    def doubled_items(self):
        return sorted(self._c.items())

    def _combine_trunc(self, other: "QSeries") -> int:
        return min(self._t, other._t)

    def __add__(self, other: "QSeries") -> "QSeries":
        t = self._combine_trunc(other)
        c = dict(self._c)
        for d, v in other._c.items():
            c[d] = c.get(d, Fraction(0)) + v
        return QSeries(c, t, doubled=True)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def scale(self, v: Number) -> "QSeries":
        return QSeries({d: x * v for d, x in self._c.items()}, self._t, doubled=True)

    def __mul__(self, other):
        if isinstance(other, LaurentQ):
            # negative exponents in the factor pull unknown terms into range
            if other.is_zero():
                return QSeries({}, self._t, doubled=True)
            lo = min(d for d, _ in other.doubled_items())
            t = self._t + lo
            c: dict[int, Fraction] = {}
            for d1, v1 in self._c.items():
                for d2, v2 in other.doubled_items():
                    c[d1 + d2] = c.get(d1 + d2, Fraction(0)) + v1 * v2
            return QSeries(c, t, doubled=True)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        lo1 = min(self._c, default=0)
        lo2 = min(other._c, default=0)
        t = min(self._t + lo2, other._t + lo1)
        c = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                if d1 + d2 <= t:
                    c[d1 + d2] = c.get(d1 + d2, Fraction(0)) + v1 * v2
        return QSeries(c, t, doubled=True)

    __rmul__ = __mul__

    def divide_one_minus(self, m: int) -> "QSeries":
        """Divide by (1 - q^(2m)) by recursive coefficient extraction.

        If S = T*(1 - q^{2m}) then t_e = s_e + t_{e-2m}.
        """
        if m <= 0:
            raise ValueError("m must be positive")
        step = 4 * m  # doubled exponent of q^{2m}
        if not self._c:
            return QSeries({}, self._t, doubled=True)
        lo = min(self._c)
        out: dict[int, Fraction] = {}
        for d in range(lo, self._t + 1):
            v = self._c.get(d, Fraction(0)) + out.get(d - step, Fraction(0))
            if v:
                out[d] = v
        return QSeries(out, self._t, doubled=True)

    def shift(self, s) -> "QSeries":
        ds = _half(s)
        return QSeries({d + ds: v for d, v in self._c.items()}, self._t + ds, doubled=True)

    def truncate(self, trunc) -> "QSeries":
        t = _half(trunc)
        if t > self._t:
            raise ValueError("cannot extend a truncated series")
        return QSeries(dict(self._c), t, doubled=True)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self._t, other._t)
        a = {d: v for d, v in self._c.items() if d <= t}
        b = {d: v for d, v in other._c.items() if d <= t}
        return a == b

    def __repr__(self):
        body = str(LaurentQ._raw(dict(self._c)))
        return f"QSeries({body} + O(q^{_fmt_exp(self._t + 1)}))"


def quantum_integer(n: int) -> LaurentQ:
    """[n] = q^{-(n-1)} + q^{-(n-3)} + ... + q^{n-1}."""
    if n < 0:
        raise ValueError("quantum_integer expects n >= 0")
    return LaurentQ._raw({d: Fraction(1) for d in range(-2 * (n - 1), 2 * n - 1, 4)})


def quantum_factorial(n: int) -> LaurentQ:
    out = LaurentQ.const(1)
    for i in range(1, n + 1):
        out = out * quantum_integer(i)
    return out


def _gauss_unbalanced(parts: tuple[int, ...]) -> dict[int, int]:
    """Coefficients of the q^2-multinomial with lowest term 1 (keyed by power of q^2)."""
    # built as a product of binomials [n1+..+ni ; ni]
    poly = {0: 1}
    total = 0
    for p in parts:
        total += p
        poly = _mul_int(poly, _gauss_binom_unbalanced(total, p))
    return poly


def _mul_int(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _gauss_binom_unbalanced(n: int, k: int) -> dict[int, int]:
    """Gaussian binomial in t=q^2 via the Pascal recurrence."""
    if k < 0 or k > n:
        return {}
    # rows[j] holds [i ; j]_t for the current i
    row = [{0: 1}] + [{} for _ in range(k)]
    for i in range(1, n + 1):
        new = [{0: 1}]
        for j in range(1, k + 1):
            # [i;j] = [i-1;j-1] + t^j [i-1;j]
            a = row[j - 1]
            b = {e + j: v for e, v in row[j].items()}
            s = dict(a)
            for e, v in b.items():
                s[e] = s.get(e, 0) + v
            new.append({e: v for e, v in s.items() if v})
        row = new
    return row[k]


def quantum_multinomial(parts: Iterable[int]) -> LaurentQ:
    """Balanced multinomial [k; k_1 ... k_l], palindromic about q^0."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    unb = _gauss_unbalanced(parts)
    k = sum(parts)
    # the q^2 version has degree 2*shift; recentre it
    s = (k * k - sum(p * p for p in parts)) // 2
    return LaurentQ._raw({4 * e - 2 * s: Fraction(v) for e, v in unb.items()})


def quantum_binomial(n: int, k: int) -> LaurentQ:
    """Balanced [n; k]; zero outside 0 <= k <= n, and for n < 0 the generalized value."""
    if k < 0:
        return LaurentQ()
    if n >= 0:
        if k > n:
            return LaurentQ()
        return quantum_multinomial((k, n - k))
    # generalized binomial for negative top: [n;k] = (-1)^k [k-n-1; k]
    return quantum_binomial(k - n - 1, k) * ((-1) ** k)


def classical_multinomial(parts: Iterable[int]) -> int:
    parts = tuple(parts)
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def graded_dim_invariant_algebra(c: Iterable[int], D) -> QSeries:
    """Hilbert series of Q[x_1..x_k]^{S_c} (deg x_i = 2), truncated at q^D.

    Each block of size k_i contributes prod_{j=1..k_i} 1/(1 - q^{2j}); for
    blocks of size one this is the familiar 1/(1 - q^2).
    """
    D = Fraction(D)
    if D < 0:
        raise ValueError("truncation degree must be >= 0")
    s = QSeries.one(D)
    for k in c:
        for j in range(1, k + 1):
            s = s.divide_one_minus(j)
    return s


def block_top_degree_series(c: Iterable[int], D) -> QSeries:
    """prod_i 1/(1 - q^{2 k_i}) truncated at q^D.

    This counts only powers of the top elementary polynomial of each block;
    it agrees with ``graded_dim_invariant_algebra`` exactly when every block
    has size one.
    """
    s = QSeries.one(Fraction(D))
    for k in c:
        s = s.divide_one_minus(k)
    return s


def graded_rank_over_symmetric(c: Iterable[int]) -> LaurentQ:
    """q^{shift(c)} [k; c]: graded rank of A_c over the full symmetric ring."""
    c = tuple(c)
    k = sum(c)
    s = (k * k - sum(p * p for p in c)) // 2
    return quantum_multinomial(c).shift(s)


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
