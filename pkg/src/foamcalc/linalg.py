"""Exact sparse linear algebra over Q (and a fast mod-p rank)."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict  # column key -> Fraction

PRIME = 2_147_483_647


class EchelonSpace:
    """Incrementally maintained row-echelon basis of a subspace of Q^(keys).

    Pivot columns are eliminated from every stored row, so membership and
    reduction are a single pass.
    """

    def __init__(self):
        self.rows: dict[Hashable, Vector] = {}  # pivot -> row with entry 1 at pivot

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping) -> Vector:
        v = {k: Fraction(x) for k, x in vec.items() if x}
        for piv in [k for k in v if k in self.rows]:
            c = v.get(piv)
            if not c:
                continue
            for k, x in self.rows[piv].items():
                nv = v.get(k, 0) - c * x
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert vec; return True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        piv = min(v, key=_order_key)
        inv = 1 / v[piv]
        v = {k: x * inv for k, x in v.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for k, x in v.items():
                    nv = other.get(k, 0) - c * x
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[piv] = v
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def _order_key(k):
    return repr(k)


def rank(rows: Iterable[Mapping]) -> int:
    space = EchelonSpace()
    for r in rows:
        space.add(r)
    return len(space)


def nullspace(rows: list[Mapping], columns: list[Hashable]) -> list[Vector]:
    """Basis of {x : r . x = 0 for all rows r}, vectors keyed by ``columns``."""
    space = EchelonSpace()
    for r in rows:
        space.add(r)
    pivots = set(space.rows)
    free = [c for c in columns if c not in pivots]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for piv, row in space.rows.items():
            c = row.get(f)
            if c:
                vec[piv] = -c
        basis.append(vec)
    return basis


def rank_mod_p(rows: Iterable[Mapping], p: int = PRIME) -> int:
    """Rank of an integer/rational sparse matrix modulo a large prime."""
    pivots: dict[Hashable, dict] = {}
    for r in rows:
        v = {}
        for k, x in r.items():
            x = Fraction(x)
            val = x.numerator * pow(x.denominator, -1, p) % p
            if val:
                v[k] = val
        while v:
            piv = min(v, key=_order_key)
            if piv not in pivots:
                inv = pow(v[piv], -1, p)
                pivots[piv] = {k: x * inv % p for k, x in v.items()}
                break
            c = v[piv]
            for k, x in pivots[piv].items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
    return len(pivots)
