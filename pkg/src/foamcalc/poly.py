"""Sparse multivariate polynomials over Q in a fixed number of variables."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence


class PolyDivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class Poly:
    """Polynomial in x_0..x_{n-1}; terms map exponent tuples to Fractions."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, object] | None = None):
        self.n = n
        t: dict[tuple, Fraction] = {}
        for e, v in (terms or {}).items():
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong length for {n} variables")
            if v:
                t[tuple(e)] = t.get(tuple(e), Fraction(0)) + Fraction(v)
        self.terms = {e: v for e, v in t.items() if v}

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.n = n
        p.terms = terms
        return p

    @classmethod
    def const(cls, n: int, v=1) -> "Poly":
        return cls._raw(n, {(0,) * n: Fraction(v)} if v else {})

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls._raw(n, {})

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly._raw(self.n, {e: v for e, v in self.terms.items() if sum(e) == d})

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, v in other.terms.items():
            s = t.get(e, 0) + v
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return Poly._raw(self.n, t)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.n, {e: -v for e, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly.zero(self.n)
            f = Fraction(other)
            return Poly._raw(self.n, {e: v * f for e, v in self.terms.items()})
        if other.n != self.n:
            raise ValueError("variable count mismatch")
        out: dict[tuple, Fraction] = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + v1 * v2
        return Poly._raw(self.n, {e: v for e, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # -- substitutions -------------------------------------------------------
    def permute(self, perm: Sequence[int]) -> "Poly":
        """Substitute x_i -> x_{perm[i]}."""
        out = {}
        for e, v in self.terms.items():
            ne = [0] * self.n
            for i, a in enumerate(e):
                ne[perm[i]] += a
            out[tuple(ne)] = v
        return Poly._raw(self.n, out)

    def embed(self, n: int, positions: Sequence[int]) -> "Poly":
        """Move variable i to position positions[i] in an n-variable ring."""
        out = {}
        for e, v in self.terms.items():
            ne = [0] * n
            for i, a in enumerate(e):
                ne[positions[i]] += a
            key = tuple(ne)
            out[key] = out.get(key, 0) + v
        return Poly._raw(n, {e: v for e, v in out.items() if v})

    def restrict(self, positions: Sequence[int]) -> "Poly":
        """Inverse of embed; requires the polynomial to only involve ``positions``."""
        pos = list(positions)
        others = [i for i in range(self.n) if i not in pos]
        out = {}
        for e, v in self.terms.items():
            if any(e[i] for i in others):
                raise ValueError("polynomial involves variables outside the block")
            out[tuple(e[i] for i in pos)] = v
        return Poly._raw(len(pos), out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, v in self.terms.items():
            m = v
            for x, a in zip(point, e):
                if a:
                    m *= Fraction(x) ** a
            total += m
        return total

    def is_symmetric_in(self, block: Sequence[int]) -> bool:
        block = list(block)
        for i, j in zip(block, block[1:]):
            perm = list(range(self.n))
            perm[i], perm[j] = perm[j], perm[i]
            if self.permute(perm) != self:
                return False
        return True

    def divide_linear(self, i: int, j: int) -> "Poly":
        """Exact quotient by (x_i - x_j); raises PolyDivisionError otherwise."""
        if i == j:
            raise ValueError("x_i - x_i is zero")
        # group by exponent pattern away from x_i, synthetic division in x_i
        groups: dict[tuple, dict[int, Fraction]] = {}
        for e, v in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            groups.setdefault(rest, {})[e[i]] = v
        # coefficients are polynomials in the rest; do division over Poly
        coeffs: dict[int, Poly] = {}
        for rest, row in groups.items():
            for a, v in row.items():
                c = coeffs.setdefault(a, Poly.zero(self.n))
                c.terms[rest] = c.terms.get(rest, 0) + v
        if not coeffs:
            return Poly.zero(self.n)
        top = max(coeffs)
        xj = Poly.var(self.n, j)
        quot: dict[int, Poly] = {}
        carry = Poly.zero(self.n)
        for a in range(top, 0, -1):
            carry = coeffs.get(a, Poly.zero(self.n)) + carry
            quot[a - 1] = carry
            carry = carry * xj
        rem = coeffs.get(0, Poly.zero(self.n)) + carry
        if not rem.is_zero():
            raise PolyDivisionError(f"not divisible by (x{i} - x{j})")
        xi_pows = {}
        out = Poly.zero(self.n)
        for a, c in quot.items():
            if a not in xi_pows:
                xi_pows[a] = Poly.var(self.n, i) ** a
            out = out + c * xi_pows[a]
        return out

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-a for a in e))):
            v = self.terms[e]
            mono = "*".join(
                (f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}") for i, a in enumerate(e) if a
            )
            if not mono:
                chunks.append(str(v))
            elif v == 1:
                chunks.append(mono)
            elif v == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"{v}*{mono}")
        s = chunks[0]
        for c in chunks[1:]:
            s += " - " + c[1:] if c.startswith("-") else " + " + c
        return s


def elementary(n: int, j: int, variables: Iterable[int] | None = None) -> Poly:
    """e_j in the given variables (all n by default)."""
    from itertools import combinations

    vs = list(range(n)) if variables is None else list(variables)
    if j < 0 or j > len(vs):
        return Poly.zero(n)
    out = {}
    for sub in combinations(vs, j):
        e = [0] * n
        for i in sub:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return Poly._raw(n, out)


def symmetrize_check_points(p: Poly, block: Sequence[int], trials: int, rng) -> bool:
    """Check invariance under random permutations of ``block`` at random rational points."""
    block = list(block)
    for _ in range(trials):
        perm_block = block[:]
        rng.shuffle(perm_block)
        point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(p.n)]
        moved = list(point)
        for src, dst in zip(block, perm_block):
            moved[dst] = point[src]
        if p.evaluate(point) != p.evaluate(moved):
            return False
    return True


def all_permutations(block: Sequence[int]):
    return permutations(block)
