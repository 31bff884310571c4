"""Partitions, exact symmetric polynomials, Schur polynomials and the split pairing.

The split pairing of P (symmetric in a variables) and Q (symmetric in b
variables) is

    sum over I ⊔ J = {1..a+b}, |I| = a, of  P(x_I) Q(x_J) / prod_{i in I, j in J} (x_i - x_j)

which is the Frobenius trace of Q[x]^{S_a x S_b} over Q[x]^{S_{a+b}}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .poly import Poly, PolyDivisionError, elementary


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"{parts} is not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def transpose(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def boxes(self) -> set[tuple[int, int]]:
        return {(i, j) for i, p in enumerate(self) for j in range(p)}

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def parse_partition(text: str) -> Partition:
    body = text.strip().strip("()")
    if not body:
        return Partition()
    return Partition(int(t) for t in body.split(","))


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most ``rows`` rows and ``cols`` columns."""
    out: list[Partition] = []

    def rec(prefix, maxp):
        out.append(Partition(prefix))
        if len(prefix) == rows:
            return
        for p in range(1, maxp + 1):
            rec(prefix + [p], p)

    rec([], cols)
    return sorted(out, key=lambda lam: (lam.size, lam))


def partitions_of(n: int, max_len: int | None = None) -> list[Partition]:
    out: list[Partition] = []

    def rec(rem, maxp, prefix):
        if rem == 0:
            out.append(Partition(prefix))
            return
        if max_len is not None and len(prefix) == max_len:
            return
        for p in range(min(rem, maxp), 0, -1):
            rec(rem - p, p, prefix + [p])

    rec(n, n, [])
    return out


def rect_dual(lam: Partition, a: int, b: int) -> Partition:
    """Transpose of the complement of ``lam`` in the a x b rectangle."""
    lam = Partition(lam)
    if not lam.fits(a, b):
        raise ValueError(f"{lam} does not fit in a {a}x{b} rectangle")
    padded = list(lam) + [0] * (a - len(lam))
    complement = Partition(sorted((b - p for p in padded), reverse=True))
    return complement.transpose()


# -- polynomial builders ------------------------------------------------------

def monomial_symmetric(mu: Partition, n: int, variables: Sequence[int] | None = None,
                       total: int | None = None) -> Poly:
    """m_mu in the listed variables of a ``total``-variable ring."""
    vs = list(range(n)) if variables is None else list(variables)
    total = n if total is None else total
    if len(mu) > len(vs):
        return Poly.zero(total)
    exps = list(mu) + [0] * (len(vs) - len(mu))
    terms = {}
    for perm in set(permutations(exps)):
        e = [0] * total
        for v, a in zip(vs, perm):
            e[v] = a
        terms[tuple(e)] = Fraction(1)
    return Poly._raw(total, terms)


def complete_homogeneous(j: int, variables: Sequence[int], total: int) -> Poly:
    if j < 0:
        return Poly.zero(total)
    out = Poly.zero(total)
    for mu in partitions_of(j, len(variables)):
        out = out + monomial_symmetric(mu, len(variables), variables, total)
    return out


def _det(mat: list[list[Poly]], n: int) -> Poly:
    if not mat:
        return Poly.const(n, 1)
    if len(mat) == 1:
        return mat[0][0]
    out = Poly.zero(n)
    for j, entry in enumerate(mat[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = entry * _det(minor, n)
        out = out + term if j % 2 == 0 else out - term
    return out


@lru_cache(maxsize=None)
def _schur_cached(lam: tuple, variables: tuple, total: int) -> Poly:
    lam = Partition(lam)
    if len(lam) > len(variables):
        return Poly.zero(total)
    r = len(lam)
    mat = [[complete_homogeneous(lam[i] - i + j, variables, total) for j in range(r)]
           for i in range(r)]
    return _det(mat, total)


def schur_poly(lam: Partition, variables: Sequence[int], total: int) -> Poly:
    """s_lambda in the given variables via the Jacobi-Trudi determinant."""
    return _schur_cached(tuple(lam), tuple(variables), total)


# -- symmetric polynomials  ----------------------------------------------------

class SymPoly:
    """Symmetric polynomial in ``n`` variables, stored in the monomial basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: dict | None = None):
        self.n = n
        self.coeffs = {Partition(k): Fraction(v) for k, v in (coeffs or {}).items() if v}
        for mu in self.coeffs:
            if len(mu) > n:
                raise ValueError(f"{mu} has more than {n} parts")

    @classmethod
    def one(cls, n: int) -> "SymPoly":
        return cls(n, {Partition(): 1})

    @classmethod
    def from_poly(cls, p: Poly, check: bool = True) -> "SymPoly":
        if check and not p.is_symmetric_in(range(p.n)):
            raise ValueError("polynomial is not symmetric")
        coeffs = {}
        for e, v in p.terms.items():
            if all(a >= b for a, b in zip(e, e[1:])):
                coeffs[Partition(e)] = v
        return cls(p.n, coeffs)

    def to_poly(self, variables: Sequence[int] | None = None, total: int | None = None) -> Poly:
        vs = list(range(self.n)) if variables is None else list(variables)
        total = self.n if total is None else total
        out = Poly.zero(total)
        for mu, v in self.coeffs.items():
            out = out + monomial_symmetric(mu, self.n, vs, total) * v
        return out

    def degree(self) -> int:
        return max((mu.size for mu in self.coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mu.size for mu in self.coeffs}) <= 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "SymPoly") -> "SymPoly":
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return SymPoly(self.n, c)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return SymPoly.from_poly(self.to_poly() * other.to_poly(), check=False)
        return SymPoly(self.n, {k: v * other for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def schur_expansion(self) -> dict[Partition, Fraction]:
        """Coefficients in the Schur basis by triangular elimination."""
        rest = self.to_poly()
        out: dict[Partition, Fraction] = {}
        while not rest.is_zero():
            # leading monomial in lex order is a partition with coefficient 1 in s_lead
            lead = max(e for e in rest.terms)
            lam = Partition(lead)
            c = rest.terms[lead]
            out[lam] = c
            rest = rest - schur_poly(lam, range(self.n), self.n) * c
        return out

    def elementary_expansion(self) -> dict[tuple, Fraction]:
        """Coefficients on products e_{j1} e_{j2} ... (indices weakly decreasing)."""
        rest = self.to_poly()
        out: dict[tuple, Fraction] = {}
        while not rest.is_zero():
            lead = max(rest.terms)
            c = rest.terms[lead]
            idx = tuple(Partition(lead).transpose())
            out[idx] = out.get(idx, 0) + c
            term = Poly.const(self.n, c)
            for j in idx:
                term = term * elementary(self.n, j)
            rest = rest - term
        return out

    def as_expr(self) -> str:
        """Text in e1, e2, ... that :func:`parse_symexpr` reads back."""
        parts = []
        for idx, c in sorted(self.elementary_expansion().items(), reverse=True):
            mono = "*".join(f"e{j}" for j in idx)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return f"SymPoly({self.n}, {self.to_poly()})"


def schur(lam: Partition, n: int) -> SymPoly:
    """s_lambda(x_1..x_n); zero if lambda has more than n rows."""
    lam = Partition(lam)
    if len(lam) > n:
        return SymPoly(n)
    return SymPoly.from_poly(schur_poly(lam, range(n), n), check=False)


def elementary_sym(n: int, j: int) -> SymPoly:
    return SymPoly.from_poly(elementary(n, j), check=False)


def power_sum(n: int, j: int) -> SymPoly:
    return SymPoly(n, {Partition((j,)): 1})


# -- the split pairing --------------------------------------------------------

def _vandermonde(vs: Sequence[int], total: int) -> Poly:
    out = Poly.const(total, 1)
    for p, q in combinations(vs, 2):
        out = out * (Poly.var(total, p) - Poly.var(total, q))
    return out


def frobenius_trace(f: Poly, block_a: Sequence[int], block_b: Sequence[int]) -> Poly:
    """Sum over (a,b)-shuffles of sigma(f) / prod_{I x J}(x_i - x_j).

    ``f`` lives in a ring of ``f.n`` variables and must be symmetric in the
    ``block_a`` and ``block_b`` variables separately; other variables are
    spectators.  Uses a common Vandermonde denominator and exact division.
    """
    a_vars = list(block_a)
    b_vars = list(block_b)
    block = a_vars + b_vars
    if len(a_vars) == 0 or len(b_vars) == 0:
        return f
    if block == list(range(block[0], block[0] + len(block))):
        return _grassmannian_divided_difference(f, block[0], len(a_vars), len(b_vars))
    return _shuffle_trace(f, a_vars, b_vars)


def _divided_difference(g: Poly, i: int) -> Poly:
    perm = list(range(g.n))
    perm[i], perm[i + 1] = i + 1, i
    return (g - g.permute(perm)).divide_linear(i, i + 1)


def _grassmannian_divided_difference(f: Poly, p: int, a: int, b: int) -> Poly:
    """Same operator for adjacent blocks: ∂ along a reduced word of the shuffle
    moving x_p..x_{p+a-1} past the b variables after them."""
    g = f
    for i in range(a):
        for j in range(b):
            g = _divided_difference(g, p + a - 1 - i + j)
    return g


def _shuffle_trace(f: Poly, a_vars: list, b_vars: list) -> Poly:
    n = f.n
    order = sorted(a_vars + b_vars)
    numerator = Poly.zero(n)
    for I in combinations(order, len(a_vars)):
        J = [v for v in order if v not in I]
        perm = list(range(n))
        for src, dst in zip(a_vars, I):
            perm[src] = dst
        for src, dst in zip(b_vars, J):
            perm[src] = dst
        inv = sum(1 for i in I for j in J if i > j)
        term = f.permute(perm) * _vandermonde(I, n) * _vandermonde(J, n)
        numerator = numerator - term if inv % 2 else numerator + term
    out = numerator
    try:
        for p, q in combinations(order, 2):
            out = out.divide_linear(p, q)
    except PolyDivisionError as exc:  # the cancellation is a theorem
        raise PolyDivisionError(f"split pairing failed to cancel: {exc}") from exc
    return out


def split_pairing(P: SymPoly, Q: SymPoly) -> SymPoly:
    """Symmetric polynomial in a+b variables from P in a and Q in b variables."""
    a, b = P.n, Q.n
    n = a + b
    f = P.to_poly(range(a), n) * Q.to_poly(range(a, n), n)
    return SymPoly.from_poly(frobenius_trace(f, range(a), range(a, n)), check=False)


def expand_split(P: SymPoly, a: int) -> list[tuple[Fraction, SymPoly, SymPoly]]:
    """Rewrite P as sum_i c_i Q1_i(x_1..x_a) Q2_i(x_{a+1}..x_n) in the monomial bases."""
    n = P.n
    b = n - a
    if not 0 < a < n:
        raise ValueError("split point must be strictly inside")
    poly = P.to_poly()
    out = []
    seen = set()
    for e, v in poly.terms.items():
        left, right = e[:a], e[a:]
        if any(x < y for x, y in zip(left, left[1:])) or any(x < y for x, y in zip(right, right[1:])):
            continue
        key = (Partition(left), Partition(right))
        if key in seen:
            continue
        seen.add(key)
        out.append((v, SymPoly(a, {key[0]: 1}), SymPoly(b, {key[1]: 1})))
    return out


def parse_symexpr(text: str, n: int) -> SymPoly:
    """Parse an expression in e1, e2, ... (elementary), h1.. and p1.. generators."""
    import sympy

    names = {}
    for j in range(1, 13):
        for pre in ("e", "h", "p"):
            names[f"{pre}{j}"] = sympy.Symbol(f"{pre}{j}")
    expr = sympy.expand(sympy.sympify(text.strip(), locals=names))
    poly = sympy.Poly(expr, *names.values()) if expr.free_symbols else None
    if poly is None:
        return SymPoly(n, {Partition(): Fraction(str(expr))}) if expr != 0 else SymPoly(n)
    gens = list(names.keys())
    out = Poly.zero(n)
    cache: dict[str, Poly] = {}

    def gen_poly(name: str) -> Poly:
        if name not in cache:
            kind, j = name[0], int(name[1:])
            if kind == "e":
                cache[name] = elementary(n, j)
            elif kind == "h":
                cache[name] = complete_homogeneous(j, range(n), n)
            else:
                cache[name] = monomial_symmetric(Partition((j,)), n)
        return cache[name]

    for monom, coeff in poly.terms():
        term = Poly.const(n, Fraction(str(coeff)))
        for g, a in zip(gens, monom):
            if a:
                term = term * gen_poly(g) ** a
        out = out + term
    return SymPoly.from_poly(out, check=False)
