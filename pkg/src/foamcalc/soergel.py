"""Invariant algebras and singular Bott-Samelson bimodules of braid-like webs.

Model: level k, variables x_1..x_k, a composition c splits them into
contiguous blocks and A_c is the ring of polynomials symmetric in each block.
For a web with levels c_0 (bottom) ... c_n (top)

    B(Γ) = A_{c_0} ⊗ A_{c_1} ⊗ ... ⊗ A_{c_n}

where the tensor at layer l is over the coarser of c_l, c_{l+1}.  Left action
by A_{c_0}, right action by A_{c_n}.  Pushing decorations upward gives a
normal form: B(Γ) is free as a right A_{c_n}-module with one basis element
per choice of λ ⊆ a×b at each merge layer, namely s_λ(X_A) placed just below
the merge.  Elements are dicts ``{key: top polynomial}`` where ``key`` is the
tuple of these partitions.

Grading: an element of polynomial degree p has q-degree 2p - shift(Γ).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from . import linalg
from .poly import Poly, elementary
from .qcomb import LaurentQ, QSeries, graded_dim_invariant_algebra, quantum_binomial
from .symfun import (
    Partition,
    frobenius_trace,
    monomial_symmetric,
    partitions_in_box,
    partitions_of,
    rect_dual,
    schur_poly,
)
from .webs import BlWeb, Composition, Merge, Split, shift_composition, shift_web

Element = dict  # key tuple -> Poly


class CutoffError(ValueError):
    """Requested degree exceeds the cutoff we can certify."""


# -- invariant algebras --------------------------------------------------------

def block_sorted(e: Sequence[int], c: Sequence[int]) -> bool:
    """Exponent is weakly decreasing inside every block of c."""
    start = 0
    for p in c:
        for i in range(start, start + p - 1):
            if e[i] < e[i + 1]:
                return False
        start += p
    return True


@lru_cache(maxsize=None)
def invariant_basis(c: tuple, d: int) -> tuple:
    """Block-sorted exponents of polynomial degree d: a basis of (A_c)_d."""
    blocks = list(c)
    out = []

    def rec(i, remaining, prefix):
        if i == len(blocks):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for size in range(remaining + 1):
            for mu in partitions_of(size, blocks[i]):
                rec(i + 1, remaining - size, prefix + list(mu) + [0] * (blocks[i] - len(mu)))

    rec(0, d, [])
    return tuple(out)


@lru_cache(maxsize=None)
def block_monomial(e: tuple, c: tuple) -> Poly:
    """Product over blocks of the monomial symmetric polynomial with exponents e."""
    n = sum(c)
    out = Poly.const(n, 1)
    for blk in Composition(c).blocks():
        mu = Partition(sorted((e[i] for i in blk), reverse=True))
        out = out * monomial_symmetric(mu, len(blk), list(blk), n)
    return out


def invariant_coords(p: Poly, c: Sequence[int]) -> dict:
    """Coordinates of a block-symmetric polynomial in the block-monomial basis."""
    return {e: v for e, v in p.terms.items() if block_sorted(e, c)}


def block_factors(p: Poly, c: Sequence[int]) -> list[tuple[Fraction, list[Poly]]]:
    """Write p (symmetric in each block of c) as sum of coeff * prod of per-block factors."""
    n = p.n
    blocks = Composition(c).blocks()
    out = []
    for e, v in invariant_coords(p, c).items():
        factors = []
        for blk in blocks:
            mu = Partition(sorted((e[i] for i in blk), reverse=True))
            factors.append(monomial_symmetric(mu, len(blk), list(blk), n))
        out.append((v, factors))
    return out


@dataclass(frozen=True)
class InvariantAlgebra:
    composition: Composition

    @property
    def k(self) -> int:
        return self.composition.level

    def generators(self) -> list[tuple[int, int, Poly]]:
        """(block index, j, e_j of the block)."""
        out = []
        n = self.k
        for b, blk in enumerate(self.composition.blocks()):
            for j in range(1, len(blk) + 1):
                out.append((b, j, elementary(n, j, list(blk))))
        return out

    def dim(self, d: int) -> int:
        return len(invariant_basis(tuple(self.composition), d))

    def basis(self, d: int) -> list[Poly]:
        c = tuple(self.composition)
        return [block_monomial(e, c) for e in invariant_basis(c, d)]

    def contains(self, p: Poly) -> bool:
        return all(p.is_symmetric_in(blk) for blk in self.composition.blocks())

    def graded_dim(self, D) -> QSeries:
        return graded_dim_invariant_algebra(self.composition, D)


# -- bimodules -------------------------------------------------------------------

def _merge_blocks(c: Composition, slot: int) -> tuple[list[int], list[int]]:
    blocks = c.blocks()
    return list(blocks[slot]), list(blocks[slot + 1])


@lru_cache(maxsize=200_000)
def _merge_expand(f: Poly, a_vars: tuple, b_vars: tuple) -> tuple:
    """f = sum_λ s_λ(X_A) g_λ with g_λ symmetric in A ∪ B; returns ((λ, g_λ), ...)."""
    n = f.n
    a, b = len(a_vars), len(b_vars)
    out = []
    deg = f.degree()
    for lam in partitions_in_box(a, b):
        if lam.size > deg:
            continue
        dual = rect_dual(lam, a, b)
        g = frobenius_trace(f * schur_poly(dual, b_vars, n), a_vars, b_vars)
        if not g.is_zero():
            out.append((lam, -g if dual.size % 2 else g))
    return tuple(out)


@dataclass(frozen=True)
class Bimodule:
    """Normal-form machinery for B(Γ)."""

    web: BlWeb
    _basis: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_basis", tuple(self._enumerate_basis()))

    @property
    def n(self) -> int:
        return self.web.k

    @property
    def levels(self):
        return self.web.levels

    def merge_layers(self) -> list[int]:
        return [i for i, layer in enumerate(self.web.layers) if isinstance(layer, Merge)]

    def _enumerate_basis(self):
        boxes = []
        for i in self.merge_layers():
            a, b = self.web.layers[i].thicknesses(self.levels[i])
            boxes.append(partitions_in_box(a, b))
        return [tuple(key) for key in product(*boxes)]

    def basis_keys(self) -> tuple:
        return self._basis

    def key_degree(self, key) -> Fraction:
        return 2 * sum(lam.size for lam in key) - shift_web(self.web)

    def top_basis_degree(self) -> Fraction:
        return max(self.key_degree(key) for key in self._basis)

    def basis_chain(self, key) -> list[Poly]:
        n = self.n
        chain = [Poly.const(n, 1) for _ in self.levels]
        for lam, i in zip(key, self.merge_layers()):
            a_vars, _ = _merge_blocks(self.levels[i], self.web.layers[i].slot)
            chain[i] = schur_poly(lam, a_vars, n)
        return chain

    # -- normal form ----------------------------------------------------------
    def normalize(self, chain: Sequence[Poly]) -> Element:
        """Push the decorations of a chain to the top."""
        if len(chain) != len(self.levels):
            raise ValueError("chain length does not match the web")
        current = {(): chain[0]}
        for l, layer in enumerate(self.web.layers):
            nxt: dict = {}
            above = chain[l + 1]
            if isinstance(layer, Split):
                for key, f in current.items():
                    _acc(nxt, key, f * above)
            else:
                a_vars, b_vars = _merge_blocks(self.levels[l], layer.slot)
                for key, f in current.items():
                    for lam, g in _merge_expand(f, tuple(a_vars), tuple(b_vars)):
                        _acc(nxt, key + (lam,), g * above)
            current = nxt
        return current

    def element_from_chain(self, chain) -> Element:
        return self.normalize(chain)

    def chain_of(self, key, top: Poly) -> list[Poly]:
        chain = self.basis_chain(key)
        chain[-1] = chain[-1] * top
        return chain

    def left_multiply(self, f: Poly, elem: Element) -> Element:
        out: dict = {}
        for key, g in elem.items():
            chain = self.basis_chain(key)
            chain[0] = f * chain[0]
            for k2, h in self.normalize(chain).items():
                _acc(out, k2, h * g)
        return out

    def right_multiply(self, elem: Element, g: Poly) -> Element:
        return {k: v * g for k, v in elem.items() if not (v * g).is_zero()}

    def element_degree_set(self, elem: Element) -> set:
        out = set()
        for key, top in elem.items():
            for e in top.terms:
                out.add(self.key_degree(key) + 2 * sum(e))
        return out

    # -- graded pieces --------------------------------------------------------
    def piece_basis(self, degree) -> list[tuple]:
        """(key, block-sorted top exponent) spanning the q-degree ``degree`` piece."""
        out = []
        top = tuple(self.web.target)
        for key in self._basis:
            rest = Fraction(degree) - self.key_degree(key)
            if rest < 0 or rest.denominator != 1 or rest.numerator % 2:
                continue
            for e in invariant_basis(top, rest.numerator // 2):
                out.append((key, e))
        return out

    def piece_element(self, key, e) -> Element:
        return {key: block_monomial(e, tuple(self.web.target))}

    def coords(self, elem: Element) -> dict:
        top = tuple(self.web.target)
        out = {}
        for key, g in elem.items():
            for e, v in invariant_coords(g, top).items():
                out[(key, e)] = v
        return out

    def graded_dim(self, D) -> QSeries:
        return graded_dim_bimodule(self.web, D)


def _acc(d: dict, key, p: Poly):
    if p.is_zero():
        return
    if key in d:
        s = d[key] + p
        if s.is_zero():
            del d[key]
        else:
            d[key] = s
    else:
        d[key] = p


def elem_add(x: Element, y: Element, scale=1) -> Element:
    out = dict(x)
    for k, v in y.items():
        _acc(out, k, v * scale)
    return out


def elem_scale(x: Element, c) -> Element:
    if c == 0:
        return {}
    return {k: v * c for k, v in x.items()}


def elem_equal(x: Element, y: Element) -> bool:
    return not elem_add(x, y, -1)


@lru_cache(maxsize=None)
def bimodule(web: BlWeb) -> Bimodule:
    return Bimodule(web)


def build_bimodule(web: BlWeb) -> Bimodule:
    return bimodule(web)


# -- graded dimensions -------------------------------------------------------------

def graded_dim_bimodule(web: BlWeb, D) -> QSeries:
    """Schur-basis count: sum over right basis keys times the graded dim of A_top."""
    D = Fraction(D)
    top = graded_dim_invariant_algebra(web.target, D + shift_web(web))
    total = QSeries({}, D)
    for key in bimodule(web).basis_keys():
        deg = bimodule(web).key_degree(key)
        total = total + top.shift(deg).truncate(D)
    return total


def graded_dim_formula(web: BlWeb, D) -> QSeries:
    """Closed form: prod over merges q^{ab/2}[a+b;a], over splits q^{-ab/2}, times A_top."""
    D = Fraction(D)
    factor = LaurentQ.const(1)
    for kind, a, b in web.vertices():
        if kind == "merge":
            factor = factor * quantum_binomial(a + b, a) * LaurentQ.monomial(Fraction(a * b, 2))
        else:
            factor = factor * LaurentQ.monomial(Fraction(-a * b, 2))
    lo = factor.min_exp() if not factor.is_zero() else 0
    base = graded_dim_invariant_algebra(web.target, D - lo)
    return (base * factor).truncate(D)


def _web_edges(web: BlWeb):
    """Edge alphabets of the web and the vertex relations between them."""
    edges: list[int] = []  # thickness per edge id
    current = []
    for p in web.source:
        current.append(len(edges))
        edges.append(p)
    vertices = []  # (thick, thin_a, thin_b)
    for layer, lev in zip(web.layers, web.levels):
        i = layer.slot
        if isinstance(layer, Merge):
            t = len(edges)
            edges.append(lev[i] + lev[i + 1])
            vertices.append((t, current[i], current[i + 1]))
            current = current[:i] + [t] + current[i + 2:]
        else:
            ea, eb = len(edges), len(edges) + 1
            edges += [layer.a, layer.b]
            vertices.append((current[i], ea, eb))
            current = current[:i] + [ea, eb] + current[i + 1:]
    return edges, vertices


def graded_dim_presentation(web: BlWeb, D) -> QSeries:
    """Independent count: edge-alphabet generators modulo the vertex relations.

    B(Γ) is the ring generated by e_j(edge) for every edge, modulo
    e_j(T) = sum_i e_i(A) e_{j-i}(B) at each vertex; dimensions are computed
    degree by degree with a modular rank.
    """
    D = Fraction(D)
    edges, vertices = _web_edges(web)
    gens = [(e, j) for e, t in enumerate(edges) for j in range(1, t + 1)]
    gidx = {g: i for i, g in enumerate(gens)}
    weights = [j for _, j in gens]
    n = len(gens)

    def gen_mono(e, j):
        if j == 0:
            return (0,) * n
        m = [0] * n
        m[gidx[(e, j)]] = 1
        return tuple(m)

    relations = []  # (degree, {mono: coeff})
    for t, a, b in vertices:
        for j in range(1, edges[t] + 1):
            rel = {gen_mono(t, j): 1}
            for i in range(0, j + 1):
                if i <= edges[a] and j - i <= edges[b]:
                    m = tuple(x + y for x, y in zip(gen_mono(a, i), gen_mono(b, j - i)))
                    rel[m] = rel.get(m, 0) - 1
            relations.append((j, {m: v for m, v in rel.items() if v}))

    max_poly = int((D + shift_web(web)) // 2)
    monos_by_deg = _weighted_monomials(weights, max_poly)
    coeffs = {}
    for d in range(max_poly + 1):
        rows = []
        for rd, rel in relations:
            if rd > d:
                continue
            for m in monos_by_deg[d - rd]:
                rows.append({tuple(x + y for x, y in zip(m, r)): v for r, v in rel.items()})
        dim = len(monos_by_deg[d]) - linalg.rank_mod_p(rows)
        if dim:
            coeffs[Fraction(2 * d) - shift_web(web)] = dim
    return QSeries(coeffs, D).truncate(D)


def _weighted_monomials(weights: list[int], max_deg: int) -> list[list[tuple]]:
    out = [[] for _ in range(max_deg + 1)]
    n = len(weights)

    def rec(i, deg, prefix):
        if i == n:
            out[deg].append(tuple(prefix))
            return
        a = 0
        while deg + a * weights[i] <= max_deg:
            rec(i + 1, deg + a * weights[i], prefix + [a])
            a += 1

    rec(0, 0, [])
    return out


# -- bimodule maps -------------------------------------------------------------------

@dataclass
class BimoduleMap:
    """Bimodule map given by the images of the right basis of the source."""

    source: BlWeb
    target: BlWeb
    degree: Fraction
    images: dict  # source key -> Element of B(target)

    def __post_init__(self):
        if self.source.source != self.target.source or self.source.target != self.target.target:
            raise ValueError("bimodule maps need webs with the same boundary")
        self.degree = Fraction(self.degree)

    def apply(self, elem: Element) -> Element:
        out: dict = {}
        B1 = bimodule(self.target)
        for key, g in elem.items():
            img = self.images.get(key, {})
            for k2, h in B1.right_multiply(img, g).items():
                _acc(out, k2, h)
        return out

    def compose(self, first: "BimoduleMap") -> "BimoduleMap":
        """self ∘ first."""
        if first.target != self.source:
            raise ValueError("maps are not composable")
        images = {key: self.apply(img) for key, img in first.images.items()}
        return BimoduleMap(first.source, self.target, self.degree + first.degree, images)

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        keys = set(self.images) | set(other.images)
        images = {k: elem_add(self.images.get(k, {}), other.images.get(k, {})) for k in keys}
        return BimoduleMap(self.source, self.target, self.degree, images)

    def scaled(self, c) -> "BimoduleMap":
        return BimoduleMap(self.source, self.target, self.degree,
                           {k: elem_scale(v, c) for k, v in self.images.items()})

    def __eq__(self, other):
        if not isinstance(other, BimoduleMap):
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            return False
        keys = set(self.images) | set(other.images)
        return all(elem_equal(self.images.get(k, {}), other.images.get(k, {})) for k in keys)

    def is_zero(self) -> bool:
        return all(not v for v in self.images.values())

    def is_homogeneous(self) -> bool:
        B0, B1 = bimodule(self.source), bimodule(self.target)
        for key, img in self.images.items():
            want = B0.key_degree(key) + self.degree
            if any(d != want for d in B1.element_degree_set(img)):
                return False
        return True

    def vector(self) -> dict:
        B1 = bimodule(self.target)
        out = {}
        for key, img in self.images.items():
            for c, v in B1.coords(img).items():
                out[(key, c)] = v
        return out

    def check_linearity(self) -> bool:
        """Compare φ(e_j β) with e_j φ(β) for every left generator and basis element."""
        B0, B1 = bimodule(self.source), bimodule(self.target)
        for _, _, gen in InvariantAlgebra(self.source.source).generators():
            for key in B0.basis_keys():
                lhs = self.apply(B0.left_multiply(gen, {key: Poly.const(B0.n, 1)}))
                rhs = B1.left_multiply(gen, self.images.get(key, {}))
                if not elem_equal(lhs, rhs):
                    return False
        return self.is_homogeneous()


def identity_map(web: BlWeb) -> BimoduleMap:
    B = bimodule(web)
    return BimoduleMap(web, web, 0, {key: {key: Poly.const(B.n, 1)} for key in B.basis_keys()})


def multiplication_map(web: BlWeb, p: Poly, side: str = "left") -> BimoduleMap:
    """Left action of p ∈ A_source or right action of p ∈ A_target as an endomorphism."""
    B = bimodule(web)
    deg = 2 * p.degree() if not p.is_zero() else 0
    images = {}
    for key in B.basis_keys():
        unit = {key: Poly.const(B.n, 1)}
        images[key] = B.left_multiply(p, unit) if side == "left" else B.right_multiply(unit, p)
    return BimoduleMap(web, web, deg, images)


# -- hom spaces -----------------------------------------------------------------------

@dataclass
class HomSpace:
    source: BlWeb
    target: BlWeb
    degree: Fraction
    basis: list  # BimoduleMaps
    unknowns: int
    cutoff: Fraction
    certified: bool

    @property
    def dim(self) -> int:
        return len(self.basis)


def hom_space(web0: BlWeb, web1: BlWeb, d, cutoff=None, with_basis: bool = True) -> HomSpace:
    """Degree-d bimodule maps B(web0) -> B(web1), solved exactly.

    Unknowns are the images of the finitely many right-basis elements of
    B(web0); they live in finite graded pieces of B(web1).  Constraints are
    left-linearity for the elementary generators of each block of the source
    composition.  The largest degree touched is d + top basis degree of
    B(web0); when ``cutoff`` is below it the result is flagged uncertified.
    """
    if web0.source != web1.source or web0.target != web1.target:
        raise ValueError("hom spaces need webs with the same boundary")
    d = Fraction(d)
    B0, B1 = bimodule(web0), bimodule(web1)
    need = d + B0.top_basis_degree()
    certified = cutoff is None or Fraction(cutoff) >= need
    columns = []
    col_image = {}
    for key in B0.basis_keys():
        for key1, e in B1.piece_basis(B0.key_degree(key) + d):
            columns.append((key, key1, e))
    gens = InvariantAlgebra(web0.source).generators()
    one = Poly.const(B0.n, 1)
    # expansions e_j β = sum β' g'
    left = {(j, key): B0.left_multiply(g, {key: one}) for j, (_, _, g) in enumerate(gens)
            for key in B0.basis_keys()}
    rows: dict = {}
    for col in columns:
        key, key1, e = col
        val = B1.piece_element(key1, e)
        contrib = {}
        for j, (_, _, g) in enumerate(gens):
            # -e_j φ(β) term in constraint (j, β)
            for c, v in B1.coords(B1.left_multiply(g, val)).items():
                contrib[((j, key), c)] = contrib.get(((j, key), c), 0) - v
            # φ(β) appears in φ(e_j β'') = sum φ(β') g' for every β'' with coefficient on β
            for key2 in B0.basis_keys():
                g2 = left[(j, key2)].get(key)
                if g2 is None:
                    continue
                for c, v in B1.coords(B1.right_multiply(val, g2)).items():
                    contrib[((j, key2), c)] = contrib.get(((j, key2), c), 0) + v
        col_image[col] = {r: v for r, v in contrib.items() if v}
        for r, v in col_image[col].items():
            rows.setdefault(r, {})[col] = v
    null = linalg.nullspace(list(rows.values()), columns)
    basis = []
    if with_basis:
        for vec in null:
            images: dict = {key: {} for key in B0.basis_keys()}
            for (key, key1, e), v in vec.items():
                _acc(images[key], key1, block_monomial(e, tuple(web1.target)) * v)
            basis.append(BimoduleMap(web0, web1, d, images))
    else:
        basis = [None] * len(null)
    return HomSpace(web0, web1, d, basis, len(columns),
                    Fraction(cutoff) if cutoff is not None else need, certified)


def hom_graded_dim(web0: BlWeb, web1: BlWeb, d, cutoff=None) -> int:
    space = hom_space(web0, web1, d, cutoff, with_basis=False)
    if not space.certified:
        raise CutoffError(f"cutoff {cutoff} below the required degree {d + bimodule(web0).top_basis_degree()}")
    return space.dim


def hom_dim_table(web0: BlWeb, web1: BlWeb, degrees: Iterable) -> dict:
    return {Fraction(d): hom_graded_dim(web0, web1, d) for d in degrees}


def hom_degree_range(web0: BlWeb, web1: BlWeb, max_degree) -> list[Fraction]:
    """Half-integer degrees ≤ max_degree where maps can live (parity and lower bound)."""
    B0, B1 = bimodule(web0), bimodule(web1)
    lo = min(B1.key_degree(k) for k in B1.basis_keys()) - B0.top_basis_degree()
    out = []
    d = lo
    while d <= max_degree:
        out.append(d)
        d += 2
    return out


# -- adjunctions ----------------------------------------------------------------------

def adjunction_transpose(phi: BimoduleMap, layer: Merge | Split | None = None,
                         inverse: bool = False) -> BimoduleMap:
    """Move a top vertex across a hom, using the Frobenius structure.

    forward:  φ: B(Γ0) -> B(Γ1·V)   ↦  φ': B(Γ0·V†) -> B(Γ1)
    inverse:  φ': B(Γ0·V†) -> B(Γ1) ↦  φ: B(Γ0) -> B(Γ1·V)

    V is the top layer of the target (forward) or the dagger of the top layer
    of the source (inverse).  For V a split the counit is the Frobenius trace
    (degree -ab); for V a merge it is multiplication (degree +ab).
    """
    if not inverse:
        target = phi.target
        if not target.layers:
            raise ValueError("target has no top vertex to transpose")
        V = target.layers[-1]
        lev = target.levels[-2]
        gamma1 = BlWeb(target.source, target.layers[:-1])
        vdag = V.dagger(lev)
        gamma0v = BlWeb(phi.source.source, phi.source.layers + (vdag,))
        return _transpose_forward(phi, gamma0v, gamma1, V, lev)
    source = phi.source
    if not source.layers:
        raise ValueError("source has no top vertex to transpose")
    vdag = source.layers[-1]
    lev_top = source.levels[-1]
    gamma0 = BlWeb(source.source, source.layers[:-1])
    V = vdag.dagger(source.levels[-2])
    gamma1v = BlWeb(phi.target.source, phi.target.layers + (V,))
    return _transpose_inverse(phi, gamma0, gamma1v, V, lev_top)


def _transpose_forward(phi, gamma0v: BlWeb, gamma1: BlWeb, V, lev) -> BimoduleMap:
    Bs, B1 = bimodule(gamma0v), bimodule(gamma1)
    n = Bs.n
    a, b = V.thicknesses(lev)
    images = {}
    if isinstance(V, Split):
        a_vars, b_vars = [list(r) for r in V.apply(lev).blocks()[V.slot:V.slot + 2]]
        for key in Bs.basis_keys():
            key0, lam = key[:-1], key[-1]
            sl = schur_poly(lam, a_vars, n)
            out: dict = {}
            for key1, h in phi.images.get(key0, {}).items():
                _acc(out, key1, frobenius_trace(h * sl, a_vars, b_vars))
            images[key] = out
        deg = phi.degree - a * b
    else:
        for key in Bs.basis_keys():
            out = {}
            for key1, h in phi.images.get(key, {}).items():
                chain = B1.chain_of(key1[:-1], Poly.const(n, 1))
                a_vars = list(lev.blocks()[V.slot])
                chain[-1] = chain[-1] * schur_poly(key1[-1], a_vars, n) * h
                for k2, v in B1.normalize(chain).items():
                    _acc(out, k2, v)
            images[key] = out
        deg = phi.degree + a * b
    return BimoduleMap(gamma0v, gamma1, deg, images)


def _transpose_inverse(phi, gamma0: BlWeb, gamma1v: BlWeb, V, lev_top) -> BimoduleMap:
    B0, Bt = bimodule(gamma0), bimodule(gamma1v)
    n = B0.n
    lev = gamma1v.levels[-2]
    a, b = V.thicknesses(lev)
    images = {}
    if isinstance(V, Split):
        a_vars, b_vars = [list(r) for r in V.apply(lev).blocks()[V.slot:V.slot + 2]]
        for key in B0.basis_keys():
            out: dict = {}
            for lam in partitions_in_box(a, b):
                dual = rect_dual(lam, a, b)
                sign = -1 if dual.size % 2 else 1
                sb = schur_poly(dual, b_vars, n)
                for key1, g in phi.images.get(key + (lam,), {}).items():
                    _acc(out, key1, g * sb * sign)
            images[key] = out
        deg = phi.degree + a * b
    else:
        for key in B0.basis_keys():
            out = {}
            for key1, g in phi.images.get(key, {}).items():
                chain = Bt.chain_of(key1 + (Partition(),), Poly.const(n, 1))
                chain[-2] = chain[-2] * g
                for k2, v in Bt.normalize(chain).items():
                    _acc(out, k2, v)
            images[key] = out
        deg = phi.degree - a * b
    return BimoduleMap(gamma0, gamma1v, deg, images)


def trace_transpose(M: BlWeb, N: BlWeb, degrees: Iterable) -> dict:
    """Dimension tables of HOM(A_c', M·N) and HOM(A_c, N·M) with the predicted shift.

    M goes from c' to c and N from c back to c'.
    """
    if M.target != N.source or N.target != M.source:
        raise ValueError("M and N must form a cycle c' -> c -> c'")
    c_prime, c = M.source, M.target
    shift = 2 * shift_composition(c_prime) - 2 * shift_composition(c)
    mn = M.compose(N)
    nm = N.compose(M)
    left = {}
    right = {}
    for d in degrees:
        d = Fraction(d)
        left[d] = hom_graded_dim(BlWeb.identity(c_prime), mn, d)
        right[d] = hom_graded_dim(BlWeb.identity(c), nm, d - shift)
    return {"shift": Fraction(shift), "lhs": left, "rhs": right,
            "match": all(left[d] == right[d] for d in left)}
