"""Webs as linear maps between tensor products of exterior powers at q=1.

Merge is wedge multiplication Λ^a ⊗ Λ^b → Λ^{a+b}, split is the shuffle
comultiplication.  Matrices are sparse with exact integer entries.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Sequence

import numpy as np
import scipy.sparse as sp

from .webs import AnnularWeb, BlWeb, Composition, Merge

MAX_DIM = 10_000


class OracleSizeError(ValueError):
    pass


def _shuffle_sign(I: Sequence[int], J: Sequence[int]) -> int:
    inv = sum(1 for i in I for j in J if i > j)
    return -1 if inv % 2 else 1


class WedgeSpace:
    """Λ^{k_1} V ⊗ ... ⊗ Λ^{k_l} V for dim V = N."""

    def __init__(self, N: int, c: Sequence[int]):
        self.N = N
        self.composition = Composition(c)
        if any(p > N for p in self.composition):
            raise OracleSizeError(f"N={N} is smaller than a thickness in {self.composition}")
        self.dim = prod(comb(N, p) for p in self.composition)
        if self.dim > MAX_DIM:
            raise OracleSizeError(f"dimension {self.dim} exceeds {MAX_DIM}")
        self._basis = None
        self._index = None

    @property
    def basis(self) -> list[tuple]:
        if self._basis is None:
            factors = [list(combinations(range(self.N), p)) for p in self.composition]
            self._basis = list(product(*factors))
            self._index = {b: i for i, b in enumerate(self._basis)}
        return self._basis

    def index(self, b: tuple) -> int:
        self.basis
        return self._index[b]


@lru_cache(maxsize=None)
def layer_matrix(layer, c: Composition, N: int) -> sp.csr_matrix:
    src = WedgeSpace(N, c)
    dst = WedgeSpace(N, layer.apply(c))
    rows, cols, vals = [], [], []
    i = layer.slot
    for col, b in enumerate(src.basis):
        if isinstance(layer, Merge):
            I, J = b[i], b[i + 1]
            if set(I) & set(J):
                continue
            K = tuple(sorted(I + J))
            rows.append(dst.index(b[:i] + (K,) + b[i + 2:]))
            cols.append(col)
            vals.append(_shuffle_sign(I, J))
        else:
            K = b[i]
            for I in combinations(K, layer.a):
                J = tuple(x for x in K if x not in I)
                rows.append(dst.index(b[:i] + (I, J) + b[i + 1:]))
                cols.append(col)
                vals.append(_shuffle_sign(I, J))
    return sp.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)),
                         shape=(dst.dim, src.dim), dtype=np.int64)


def web_to_map(web: BlWeb, N: int) -> sp.csr_matrix:
    """Matrix of the web, bottom to top, acting on column vectors."""
    mat = sp.identity(WedgeSpace(N, web.source).dim, dtype=np.int64, format="csr")
    for layer, lev in zip(web.layers, web.levels):
        mat = layer_matrix(layer, lev, N) @ mat
    return mat


def annular_trace(w: AnnularWeb, N: int) -> int:
    return int(web_to_map(w.as_web(), N).diagonal().sum())


def circle_value(c: Sequence[int], N: int) -> int:
    """Trace of the identity on the concentric circles of c."""
    return prod(comb(N, p) for p in c)


def maps_equal(m1: sp.spmatrix, m2: sp.spmatrix) -> bool:
    diff = (m1 - m2).tocoo()
    return not np.any(diff.data)


def dense(m: sp.spmatrix) -> np.ndarray:
    return m.toarray()
