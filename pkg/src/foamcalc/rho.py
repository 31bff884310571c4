"""The foam-to-bimodule functor ρ.

A web goes to its singular Bott-Samelson bimodule B(Γ).  A generator acts on
chain representatives (one decoration per level) and the result is brought
back to normal form; since every action below is well defined on the tensor
product, any representative gives the same answer.

    Dot      multiply the decoration of its level
    Zip      Σ (-1)^{|λ̂|} s_λ(A) below, 1 on the merged strand, s_λ̂(B) above
    Unzip    multiply the three decorations together
    Birth    new levels decorated by 1
    Death    Frobenius trace of the middle level, then multiply
    Exchange split the middle decoration by blocks and slide each half away;
             for (co)associativity push it onto the finer neighbouring level
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .foams import (
    DigonBirth,
    DigonDeath,
    Dot,
    Exchange,
    FoamError,
    FoamWord,
    Unzip,
    Zip,
    degree,
)
from .linalg import EchelonSpace
from .poly import Poly
from .soergel import (
    Bimodule,
    BimoduleMap,
    Element,
    _acc,
    bimodule,
    block_factors,
    hom_degree_range,
    hom_graded_dim,
    identity_map,
)
from .symfun import frobenius_trace, partitions_in_box, rect_dual, schur_poly
from .webs import BlWeb, Merge, Split, compositions_of, enumerate_webs
from .webdecomp import _outputs, associate, exchange as exchange_layers


def rho_web(web: BlWeb) -> Bimodule:
    return bimodule(web)


# -- chain actions ---------------------------------------------------------------------

def act_on_chain(gen, web: BlWeb, chain: Sequence[Poly]) -> list[tuple[int, list[Poly]]]:
    """Images of one chain of B(web) under a generator, as signed chains of the new web."""
    n = web.k
    chain = list(chain)
    if isinstance(gen, Dot):
        blk = list(web.levels[gen.level].blocks()[gen.slot])
        chain[gen.level] = chain[gen.level] * gen.P.to_poly(blk, n)
        return [(1, chain)]
    if isinstance(gen, Zip):
        a, b = gen.thicknesses(web)
        l = gen.level
        blocks = web.levels[l].blocks()
        a_vars, b_vars = list(blocks[gen.slot]), list(blocks[gen.slot + 1])
        out = []
        for lam in partitions_in_box(a, b):
            dual = rect_dual(lam, a, b)
            sign = -1 if dual.size % 2 else 1
            below = chain[l] * schur_poly(lam, a_vars, n)
            above = schur_poly(dual, b_vars, n)
            out.append((sign, chain[:l] + [below, Poly.const(n, 1), above] + chain[l + 1:]))
        return out
    if isinstance(gen, Unzip):
        gen.thicknesses(web)
        l = gen.layer
        merged = chain[l] * chain[l + 1] * chain[l + 2]
        return [(1, chain[:l] + [merged] + chain[l + 3:])]
    if isinstance(gen, DigonBirth):
        gen.target(web)
        l = gen.level
        return [(1, chain[:l + 1] + [Poly.const(n, 1), Poly.const(n, 1)] + chain[l + 1:])]
    if isinstance(gen, DigonDeath):
        gen.thicknesses(web)
        l = gen.layer
        fine = web.levels[l + 1].blocks()
        s = web.layers[l].slot
        tr = frobenius_trace(chain[l + 1], list(fine[s]), list(fine[s + 1]))
        return [(1, chain[:l] + [chain[l] * tr * chain[l + 2]] + chain[l + 3:])]
    if isinstance(gen, Exchange):
        kind = gen.kind(web)
        l = gen.layer
        if kind == "assoc":
            # both sides are A_fine ⊗ A_coarse; the middle factor joins the finer level
            one = Poly.const(n, 1)
            if isinstance(web.layers[l], Merge):
                new = chain[:l] + [chain[l] * chain[l + 1], one, chain[l + 2]] + chain[l + 3:]
            else:
                new = chain[:l] + [chain[l], one, chain[l + 1] * chain[l + 2]] + chain[l + 3:]
            return [(1, new)]
        up_slots = _outputs(web.layers[l])
        mid = web.levels[l + 1]
        out = []
        for coeff, factors in block_factors(chain[l + 1], mid):
            up = Poly.const(n, 1)
            down = Poly.const(n, 1)
            for slot, f in enumerate(factors):
                if slot in up_slots:
                    up = up * f
                else:
                    down = down * f
            new = chain[:l] + [chain[l] * down * coeff, Poly.const(n, 1), up * chain[l + 2]] + chain[l + 3:]
            out.append((1, new))
        return out
    raise FoamError(f"unknown generator {gen!r}")


def act_on_element(gen, web: BlWeb, elem: Element) -> Element:
    B0 = bimodule(web)
    B1 = bimodule(gen.target(web))
    out: dict = {}
    for key, top in elem.items():
        for sign, chain in act_on_chain(gen, web, B0.chain_of(key, top)):
            for k2, v in B1.normalize(chain).items():
                _acc(out, k2, v * sign)
    return out


def rho_generator(gen, web: BlWeb) -> BimoduleMap:
    B0 = bimodule(web)
    one = Poly.const(B0.n, 1)
    images = {key: act_on_element(gen, web, {key: one}) for key in B0.basis_keys()}
    return BimoduleMap(web, gen.target(web), gen.degree(web), images)


def apply_word(word: FoamWord, phi: BimoduleMap) -> BimoduleMap:
    """ρ(word) ∘ φ, pushing every image through the generators one by one."""
    if phi.target != word.source:
        raise FoamError("map target is not the source of the foam word")
    images = dict(phi.images)
    web = word.source
    for g in word.generators:
        images = {key: act_on_element(g, web, img) for key, img in images.items()}
        web = g.target(web)
    return BimoduleMap(phi.source, web, phi.degree + degree(word), images)


def rho_foam(word: FoamWord) -> BimoduleMap:
    return apply_word(word, identity_map(word.source))


def rho_by_composition(word: FoamWord) -> BimoduleMap:
    """Same map, as the composite of the generator maps."""
    phi = identity_map(word.source)
    web = word.source
    for g in word.generators:
        phi = rho_generator(g, web).compose(phi)
        web = g.target(web)
    return phi


# -- element foams ---------------------------------------------------------------------

def tree_normalize(E, chain: Sequence[Poly] | None = None) -> ElementFoam:
    """Tree-like normal form of an element-type foam.

    ``E`` is a word acting on the unit of its source, a decorated web given
    as ``(web, chain)`` (one decoration per level), or an ElementFoam.
    """
    if isinstance(E, ElementFoam):
        return ElementFoam.from_element(E.web, E.element())
    if isinstance(E, FoamWord):
        return ElementFoam.from_element(E.target, element_of(E))
    if chain is None:
        raise FoamError("a decorated web needs one decoration per level")
    if len(chain) != len(E.levels):
        raise FoamError(f"need {len(E.levels)} level decorations, got {len(chain)}")
    return ElementFoam.from_element(E, bimodule(E).normalize(chain))


def element_of(word: FoamWord, start: Element | None = None) -> Element:
    """Image of an element of B(source) (default the unit) under ρ(word)."""
    B = bimodule(word.source)
    if start is None:
        start = B.normalize([Poly.const(B.n, 1)] * len(word.source.levels))
    elem = start
    web = word.source
    for g in word.generators:
        elem = act_on_element(g, web, elem)
        web = g.target(web)
    return elem


# -- full faithfulness -----------------------------------------------------------------

def moves(web: BlWeb, max_vertices: int) -> list:
    """All non-dot generators applicable to ``web`` staying within the vertex bound."""
    out = []
    n = len(web.layers)
    if n + 2 <= max_vertices:
        for l, lev in enumerate(web.levels):
            for s in range(len(lev) - 1):
                out.append(Zip(l, s))
            for s, t in enumerate(lev):
                for a in range(1, t):
                    out.append(DigonBirth(l, s, a, t - a))
    for l in range(n - 1):
        l1, l2 = web.layers[l], web.layers[l + 1]
        if isinstance(l1, Merge) and isinstance(l2, Split) and l1.slot == l2.slot \
                and (l2.a, l2.b) == l1.thicknesses(web.levels[l]):
            out.append(Unzip(l))
        if isinstance(l1, Split) and isinstance(l2, Merge) and l1.slot == l2.slot:
            out.append(DigonDeath(l))
        if exchange_layers(l1, l2) is not None or associate(l1, l2, web.levels[l]) is not None:
            out.append(Exchange(l))
    return out


def web_edges(web: BlWeb) -> list[tuple[int, int]]:
    """(level, slot) of the lowest point of every edge of the web."""
    out = [(0, s) for s in range(len(web.source))]
    for l, layer in enumerate(web.layers):
        i = layer.slot
        if isinstance(layer, Merge):
            out.append((l + 1, i))
        else:
            out += [(l + 1, i), (l + 1, i + 1)]
    return out


def dot_generators(web: BlWeb) -> list[Dot]:
    """Elementary dots, one set per edge (dots slide freely along an edge)."""
    from .symfun import elementary_sym

    out = []
    for l, s in web_edges(web):
        t = web.levels[l][s]
        for j in range(1, t + 1):
            out.append(Dot(l, s, elementary_sym(t, j)))
    return out


@dataclass
class FaithfulnessReport:
    source: BlWeb
    max_degree: Fraction
    rows: list = field(default_factory=list)  # (target web, degree, foam dim, hom dim)
    states: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(f == h for _, _, f, h in self.rows)

    def to_json(self) -> dict:
        return {
            "source": str(self.source),
            "max_degree": str(self.max_degree),
            "states": self.states,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
            "rows": [{"target": str(w), "degree": str(d), "foam_dim": f, "hom_dim": h}
                     for w, d, f, h in self.rows],
        }


def foam_spans(web0: BlWeb, max_vertices: int, max_degree) -> dict:
    """Span of ρ(foams) in Hom(web0, S) per reachable web S and degree ≤ max_degree.

    Fixpoint search: every new spanning map is pushed through all dot
    generators and all local moves whose result stays within the degree and
    vertex bounds.
    """
    max_degree = Fraction(max_degree)
    spans: dict = {}

    def insert(phi: BimoduleMap) -> bool:
        per = spans.setdefault(phi.target, {})
        space, maps = per.setdefault(phi.degree, (EchelonSpace(), []))
        if space.add(phi.vector()):
            maps.append(phi)
            return True
        return False

    queue = deque()
    start = identity_map(web0)
    insert(start)
    queue.append(start)
    while queue:
        phi = queue.popleft()
        web = phi.target
        for g in dot_generators(web) + moves(web, max_vertices):
            d = phi.degree + g.degree(web)
            if d > max_degree:
                continue
            psi = apply_word(FoamWord(web, (g,)), phi)
            if psi.is_zero():
                continue
            if insert(psi):
                queue.append(psi)
    return spans


def verify_fully_faithful(web0: BlWeb, web1: BlWeb | Iterable[BlWeb] | None = None, max_degree=6,
                          extra_vertices: int = 2, slack: int = 0) -> FaithfulnessReport:
    """Compare foam-side and bimodule-side hom dimensions from ``web0``.

    ``web1`` is one target web, several, or None for every web with at most
    two vertices and the same boundary.  Intermediate maps may exceed
    ``max_degree`` by ``slack`` so that later deaths can bring them back
    down; no slack was needed for the webs tested.  The foam side is only ever a
    subspace, so equality of dimensions is a proof of surjectivity in those
    degrees; the bimodule side is certified or raises CutoffError.
    """
    t0 = time.perf_counter()
    if web1 is None:
        targets = [w for w in enumerate_webs(web0.source, 2) if w.target == web0.target]
    elif isinstance(web1, BlWeb):
        targets = [web1]
    else:
        targets = list(web1)
    for w in targets:
        if (w.source, w.target) != (web0.source, web0.target):
            raise FoamError(f"boundary mismatch: {w.source}->{w.target} vs {web0.source}->{web0.target}")
    vmax = max([len(web0.layers)] + [len(w.layers) for w in targets]) + extra_vertices
    spans = foam_spans(web0, vmax, Fraction(max_degree) + slack)
    report = FaithfulnessReport(web0, Fraction(max_degree), states=len(spans))
    for w in targets:
        for d in hom_degree_range(web0, w, max_degree):
            hdim = hom_graded_dim(web0, w, d)
            fdim = len(spans.get(w, {}).get(d, (EchelonSpace(), []))[0])
            report.rows.append((w, d, fdim, hdim))
    report.seconds = time.perf_counter() - t0
    return report


def small_webs(k_max: int = 3, max_vertices: int = 2) -> list[BlWeb]:
    out = []
    for k in range(1, k_max + 1):
        for c in compositions_of(k):
            out.extend(enumerate_webs(c, max_vertices))
    return out


def fully_faithful_sweep(k_max: int = 3, max_vertices: int = 2, max_degree=6) -> list[FaithfulnessReport]:
    """One report per source web, covering all targets with the same boundary."""
    webs = small_webs(k_max, max_vertices)
    reports = []
    for w0 in webs:
        targets = [w for w in webs if (w.source, w.target) == (w0.source, w0.target)]
        reports.append(verify_fully_faithful(w0, targets, max_degree))
    return reports


# -- horizontal composition ----------------------------------------------------------------

def tensor_maps(phi: BimoduleMap, psi: BimoduleMap) -> BimoduleMap:
    """φ ⊗ ψ on B(Γ ⊔ Γ') = B(Γ) ⊗ B(Γ'), variables of Γ' placed after those of Γ."""
    left = phi.source.disjoint_union(psi.source)
    right = phi.target.disjoint_union(psi.target)
    k1, k2 = phi.source.k, psi.source.k
    n = k1 + k2
    pos1, pos2 = list(range(k1)), list(range(k1, n))
    images = {}
    for key1, img1 in phi.images.items():
        for key2, img2 in psi.images.items():
            out: dict = {}
            for a, f in img1.items():
                for b, g in img2.items():
                    _acc(out, a + b, f.embed(n, pos1) * g.embed(n, pos2))
            images[key1 + key2] = out
    return BimoduleMap(left, right, phi.degree + psi.degree, images)


# -- element-type foams --------------------------------------------------------------------

@dataclass(frozen=True)
class ElementFoam:
    """Tree-like foam on Γ: the standard tree decorated by s_λ's, dots on top."""

    web: BlWeb
    decorations: tuple  # ((key, top Poly), ...)

    @classmethod
    def from_element(cls, web: BlWeb, elem: Element) -> "ElementFoam":
        items = sorted(elem.items(), key=lambda kv: repr(kv[0]))
        return cls(web, tuple(items))

    def element(self) -> Element:
        return dict(self.decorations)

    def __eq__(self, other):
        if not isinstance(other, ElementFoam):
            return NotImplemented
        from .soergel import elem_equal

        return self.web == other.web and elem_equal(self.element(), other.element())

    def __hash__(self):
        return hash(self.web)
