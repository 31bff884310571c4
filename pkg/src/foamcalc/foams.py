"""Foams as movie words of elementary generators.

A foam word starts on a web Γ0 and applies generators one after the other;
each generator changes the web locally:

    Dot(level, slot, P)          decorate the strand ``slot`` at ``level``
    Zip(level, slot)             insert merge+split of strands slot, slot+1
    Unzip(layer)                 remove merge (layer) + split (layer+1)
    DigonBirth(level, slot,a,b)  insert split (a,b) + merge on strand slot
    DigonDeath(layer)            remove split (layer) + merge (layer+1)
    Exchange(layer)              swap two layers on disjoint strands, or
                                 reassociate two merges (two splits)

Levels are 0-based (level 0 is the source), slots and layers are 0-based.
Degrees: Dot 2·deg P, Zip/Unzip ab, Birth/Death -ab, Exchange 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .poly import Poly
from .symfun import (
    SymPoly,
    expand_split,
    frobenius_trace,
    parse_symexpr,
    partitions_in_box,
    rect_dual,
    schur,
    split_pairing,
)
from .webs import BlWeb, Composition, FlowError, Merge, Split, parse_web
from .webdecomp import associate, exchange as exchange_layers


class FoamError(ValueError):
    """A generator does not apply to the web it is given."""


# -- generators -------------------------------------------------------------------

@dataclass(frozen=True)
class Dot:
    level: int
    slot: int
    P: SymPoly

    def target(self, web: BlWeb) -> BlWeb:
        lev = _level(web, self.level)
        if not 0 <= self.slot < len(lev):
            raise FoamError(f"dot slot {self.slot + 1} out of range at level {self.level}")
        if self.P.n != lev[self.slot]:
            raise FoamError(f"dot polynomial in {self.P.n} variables on a strand of thickness {lev[self.slot]}")
        if not self.P.is_homogeneous():
            raise FoamError("dot decorations must be homogeneous")
        return web

    def degree(self, web: BlWeb) -> Fraction:
        return Fraction(2 * max(self.P.degree(), 0))

    def __str__(self):
        return f"dot {self.level} {self.slot + 1} {self.P.as_expr()}"


@dataclass(frozen=True)
class Zip:
    level: int
    slot: int

    def thicknesses(self, web: BlWeb) -> tuple[int, int]:
        lev = _level(web, self.level)
        if not 0 <= self.slot < len(lev) - 1:
            raise FoamError(f"zip needs strands {self.slot + 1},{self.slot + 2} at level {self.level}")
        return lev[self.slot], lev[self.slot + 1]

    def target(self, web: BlWeb) -> BlWeb:
        a, b = self.thicknesses(web)
        layers = list(web.layers)
        layers[self.level:self.level] = [Merge(self.slot), Split(self.slot, a, b)]
        return BlWeb(web.source, tuple(layers))

    def degree(self, web: BlWeb) -> Fraction:
        a, b = self.thicknesses(web)
        return Fraction(a * b)

    def __str__(self):
        return f"zip {self.level} {self.slot + 1}"


@dataclass(frozen=True)
class Unzip:
    layer: int

    def thicknesses(self, web: BlWeb) -> tuple[int, int]:
        l = self.layer
        if not 0 <= l < len(web.layers) - 1:
            raise FoamError(f"unzip needs layers {l + 1},{l + 2}")
        m, s = web.layers[l], web.layers[l + 1]
        if not (isinstance(m, Merge) and isinstance(s, Split) and s.slot == m.slot):
            raise FoamError(f"layers {l + 1},{l + 2} are not a merge followed by a split")
        a, b = m.thicknesses(web.levels[l])
        if (s.a, s.b) != (a, b):
            raise FoamError("unzip needs the split to restore the merged thicknesses")
        return a, b

    def target(self, web: BlWeb) -> BlWeb:
        self.thicknesses(web)
        layers = list(web.layers)
        del layers[self.layer:self.layer + 2]
        return BlWeb(web.source, tuple(layers))

    def degree(self, web: BlWeb) -> Fraction:
        a, b = self.thicknesses(web)
        return Fraction(a * b)

    def __str__(self):
        return f"unzip {self.layer + 1}"


@dataclass(frozen=True)
class DigonBirth:
    level: int
    slot: int
    a: int
    b: int

    def target(self, web: BlWeb) -> BlWeb:
        lev = _level(web, self.level)
        if not 0 <= self.slot < len(lev) or lev[self.slot] != self.a + self.b or min(self.a, self.b) < 1:
            raise FoamError(f"no strand of thickness {self.a + self.b} at slot {self.slot + 1}")
        layers = list(web.layers)
        layers[self.level:self.level] = [Split(self.slot, self.a, self.b), Merge(self.slot)]
        return BlWeb(web.source, tuple(layers))

    def degree(self, web: BlWeb) -> Fraction:
        return Fraction(-self.a * self.b)

    def __str__(self):
        return f"birth {self.level} {self.slot + 1} ({self.a},{self.b})"


@dataclass(frozen=True)
class DigonDeath:
    layer: int

    def thicknesses(self, web: BlWeb) -> tuple[int, int]:
        l = self.layer
        if not 0 <= l < len(web.layers) - 1:
            raise FoamError(f"death needs layers {l + 1},{l + 2}")
        s, m = web.layers[l], web.layers[l + 1]
        if not (isinstance(s, Split) and isinstance(m, Merge) and m.slot == s.slot):
            raise FoamError(f"layers {l + 1},{l + 2} are not a digon")
        return s.a, s.b

    def target(self, web: BlWeb) -> BlWeb:
        self.thicknesses(web)
        layers = list(web.layers)
        del layers[self.layer:self.layer + 2]
        return BlWeb(web.source, tuple(layers))

    def degree(self, web: BlWeb) -> Fraction:
        a, b = self.thicknesses(web)
        return Fraction(-a * b)

    def __str__(self):
        return f"death {self.layer + 1}"


@dataclass(frozen=True)
class Exchange:
    layer: int

    def kind(self, web: BlWeb) -> str:
        """'far' for vertices on disjoint strands, 'assoc' for (co)associativity."""
        l = self.layer
        if not 0 <= l < len(web.layers) - 1:
            raise FoamError(f"exchange needs layers {l + 1},{l + 2}")
        l1, l2 = web.layers[l], web.layers[l + 1]
        if exchange_layers(l1, l2) is not None:
            return "far"
        if associate(l1, l2, web.levels[l]) is not None:
            return "assoc"
        raise FoamError(f"layers {l + 1},{l + 2} neither commute nor associate")

    def swapped(self, web: BlWeb):
        l1, l2 = web.layers[self.layer], web.layers[self.layer + 1]
        if self.kind(web) == "far":
            return exchange_layers(l1, l2)
        return associate(l1, l2, web.levels[self.layer])

    def target(self, web: BlWeb) -> BlWeb:
        ex = self.swapped(web)
        layers = list(web.layers)
        layers[self.layer:self.layer + 2] = ex
        return BlWeb(web.source, tuple(layers))

    def degree(self, web: BlWeb) -> Fraction:
        self.swapped(web)
        return Fraction(0)

    def __str__(self):
        return f"exchange {self.layer + 1}"


Generator = Dot | Zip | Unzip | DigonBirth | DigonDeath | Exchange


def _level(web: BlWeb, level: int) -> Composition:
    if not 0 <= level < len(web.levels):
        raise FoamError(f"level {level} out of range 0..{len(web.levels) - 1}")
    return web.levels[level]


# -- words ------------------------------------------------------------------------

@dataclass(frozen=True)
class FoamWord:
    source: BlWeb
    generators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        self.webs()  # validates

    def webs(self) -> list[BlWeb]:
        out = [self.source]
        for i, g in enumerate(self.generators):
            try:
                out.append(g.target(out[-1]))
            except (FoamError, FlowError) as exc:
                raise FoamError(f"generator {i + 1} ({g}): {exc}") from None
        return out

    @property
    def target(self) -> BlWeb:
        return self.webs()[-1]

    def then(self, other: "FoamWord") -> "FoamWord":
        """Vertical composition: ``other`` after ``self``."""
        if other.source != self.target:
            raise FoamError("foam words are not composable")
        return FoamWord(self.source, self.generators + other.generators)

    def __len__(self):
        return len(self.generators)

    def __str__(self):
        lines = ["foam", *(str(g) for g in self.generators)]
        return str(self.source) + "\n" + "\n".join(lines)


def degree(word: FoamWord) -> Fraction:
    webs = word.webs()
    return sum((g.degree(w) for g, w in zip(word.generators, webs)), Fraction(0))


def compose(f: FoamWord, g: FoamWord) -> FoamWord:
    """f ∘ g (g first)."""
    return g.then(f)


def _shift_generator(g, dlevel: int, dslot: int):
    if isinstance(g, Dot):
        return Dot(g.level + dlevel, g.slot + dslot, g.P)
    if isinstance(g, Zip):
        return Zip(g.level + dlevel, g.slot + dslot)
    if isinstance(g, DigonBirth):
        return DigonBirth(g.level + dlevel, g.slot + dslot, g.a, g.b)
    return type(g)(g.layer + dlevel)


def whisker_below(word: FoamWord, web: BlWeb) -> FoamWord:
    """Id_web stacked below: the result acts on web·Γ (web first)."""
    m = len(web.layers)
    gens = [_shift_generator(g, m, 0) for g in word.generators]
    return FoamWord(web.compose(word.source), gens)


def whisker_above(word: FoamWord, web: BlWeb) -> FoamWord:
    """Id_web stacked on top: acts on Γ·web; level indices are unchanged."""
    return FoamWord(word.source.compose(web), word.generators)


def disjoint_union(f: FoamWord, g: FoamWord) -> FoamWord:
    """f on the left, g on the right; g's vertices sit above f's in the layer word."""
    web = f.source.disjoint_union(g.source)
    gens = list(f.generators)
    n1 = len(f.target.layers)
    width = len(f.target.target)
    gens += [_shift_generator(x, n1, width) for x in g.generators]
    return FoamWord(web, gens)


def _counit(web: BlWeb, layer: int):
    """Counit generator removing layers (layer, layer+1) = V V†."""
    first = web.layers[layer]
    return DigonDeath(layer) if isinstance(first, Split) else Unzip(layer)


def _unit(level_web: BlWeb, level: int, V, lev: Composition):
    """Unit generator creating V† V at ``level`` (V acting on ``lev`` after V†)."""
    if isinstance(V, Split):
        # V† V is merge then split
        return Zip(level, V.slot)
    a, b = V.thicknesses(lev)
    return DigonBirth(level, V.slot, a, b)


def bend(word: FoamWord) -> FoamWord:
    """Transpose F: Γ0 → Γ1·V into Γ0·V† → Γ1 by whiskering with V† and capping."""
    target = word.target
    if not target.layers:
        raise FoamError("nothing to bend: the target web has no vertex")
    V = target.layers[-1]
    vdag = V.dagger(target.levels[-2])
    tail = BlWeb(target.target, (vdag,))
    w = whisker_above(word, tail)
    n = len(target.layers)
    return FoamWord(w.source, w.generators + (_counit(w.target, n - 1),))


def unbend(word: FoamWord) -> FoamWord:
    """Inverse of :func:`bend`: F': Γ0·V† → Γ1 becomes Γ0 → Γ1·V."""
    source = word.source
    if not source.layers:
        raise FoamError("nothing to unbend: the source web has no vertex")
    vdag = source.layers[-1]
    V = vdag.dagger(source.levels[-2])
    gamma0 = BlWeb(source.source, source.layers[:-1])
    n0 = len(gamma0.layers)
    unit = _unit(gamma0, n0, V, source.levels[-1])
    # the unit inserts V† V on top of Γ0; F' then acts on the Γ0·V† part
    start = FoamWord(gamma0, (unit,))
    rest = FoamWord(start.target, word.generators)
    return start.then(rest)


# -- formal combinations and local rewrites ------------------------------------------

Combination = list  # [(Fraction, FoamWord)]


def dot_migrate(word: FoamWord, index: int) -> Combination:
    """Move the dot at ``index`` across the adjacent vertex onto the thin strands."""
    g = word.generators[index]
    if not isinstance(g, Dot):
        raise FoamError("dot_migrate needs a dot generator")
    web = word.webs()[index]
    l, i = g.level, g.slot
    if g.P.n < 2:
        raise FoamError("a thickness-one strand has no thin side")
    moves = []
    if l < len(web.layers) and isinstance(web.layers[l], Split) and web.layers[l].slot == i:
        a = web.layers[l].a
        moves = [(c, Dot(l + 1, i, p1), Dot(l + 1, i + 1, p2)) for c, p1, p2 in expand_split(g.P, a)]
    elif l > 0 and isinstance(web.layers[l - 1], Merge) and web.layers[l - 1].slot == i:
        a = web.levels[l - 1][i]
        moves = [(c, Dot(l - 1, i, p1), Dot(l - 1, i + 1, p2)) for c, p1, p2 in expand_split(g.P, a)]
    else:
        raise FoamError(f"no vertex adjacent to the thick strand {i + 1} at level {l}")
    out = []
    for c, d1, d2 in moves:
        gens = word.generators[:index] + (d1, d2) + word.generators[index + 1:]
        out.append((Fraction(c), FoamWord(word.source, gens)))
    return out


def bubble_remove(word: FoamWord, index: int) -> Combination:
    """DigonBirth, dots on the two facets, DigonDeath  ↦  dot split_pairing(P, Q)."""
    gens = word.generators
    birth = gens[index]
    if not isinstance(birth, DigonBirth):
        raise FoamError("bubble site must start with a digon birth")
    l, i = birth.level, birth.slot
    P = SymPoly.one(birth.a)
    Q = SymPoly.one(birth.b)
    j = index + 1
    while j < len(gens) and isinstance(gens[j], Dot) and gens[j].level == l + 1 and gens[j].slot in (i, i + 1):
        if gens[j].slot == i:
            P = P * gens[j].P
        else:
            Q = Q * gens[j].P
        j += 1
    if j >= len(gens) or gens[j] != DigonDeath(l):
        raise FoamError("bubble site must end with the matching digon death")
    R = split_pairing(P, Q)
    if R.is_zero():
        return []
    new = gens[:index] + (Dot(l, i, R),) + gens[j + 1:]
    return [(Fraction(1), FoamWord(word.source, new))]


def diabolo_remove(word: FoamWord, index: int) -> Combination:
    """Zip then Unzip on strands (a, b)  ↦  Σ (-1)^{|λ̂|} dot s_λ on a, dot s_λ̂ on b."""
    gens = word.generators
    z = gens[index]
    if not isinstance(z, Zip) or index + 1 >= len(gens) or gens[index + 1] != Unzip(z.level):
        raise FoamError("diabolo site must be a zip immediately followed by its unzip")
    a, b = z.thicknesses(word.webs()[index])
    out = []
    for lam in partitions_in_box(a, b):
        dual = rect_dual(lam, a, b)
        sign = -1 if dual.size % 2 else 1
        new = gens[:index] + (Dot(z.level, z.slot, schur(lam, a)), Dot(z.level, z.slot + 1, schur(dual, b))) + gens[index + 2:]
        out.append((Fraction(sign), FoamWord(word.source, new)))
    return out


# -- capped annular foams ----------------------------------------------------------------

def capped_word(gamma: BlWeb, decorations: Sequence[SymPoly]) -> FoamWord:
    """Γ×S¹ capped by decorated disks on the source side of Γ, as a word on Id.

    ``gamma`` goes from p' (disk side) to p; the word acts on the identity of
    π(p): cups build X·X† with X = Γ†, the disks sit at the middle level,
    caps remove the vertex pairs from the inside out.
    """
    X = gamma.dagger()
    c = X.source
    if len(decorations) != len(X.target):
        raise FoamError(f"need {len(X.target)} disk decorations, got {len(decorations)}")
    gens = []
    for m, layer in enumerate(X.layers):
        if isinstance(layer, Split):
            gens.append(DigonBirth(m, layer.slot, layer.a, layer.b))
        else:
            gens.append(Zip(m, layer.slot))
    mid = len(X.layers)
    for s, P in enumerate(decorations):
        if not P.is_zero() and P != SymPoly.one(P.n):
            gens.append(Dot(mid, s, P))
    for m in reversed(range(len(X.layers))):
        if isinstance(X.layers[m], Split):
            gens.append(DigonDeath(m))
        else:
            gens.append(Unzip(m))
    return FoamWord(BlWeb.identity(c), gens)


@dataclass
class AnnularReduction:
    polynomial: Poly  # element of A_c in global variables
    disks: list  # [(coeff, [SymPoly per strand])]
    steps: list


def uncap(word: FoamWord) -> tuple[BlWeb, list[SymPoly]]:
    """Recover (Γ, disk decorations) from a word built like :func:`capped_word`."""
    gens = list(word.generators)
    if word.source.layers:
        raise FoamError("input not in trace-like form: a capped foam acts on an identity web")
    m = 0
    while m < len(gens) and isinstance(gens[m], (Zip, DigonBirth)) and gens[m].level == m:
        m += 1
    webs = word.webs()
    X = BlWeb(word.source.source, webs[m].layers[:m])
    decorations = [SymPoly.one(t) for t in X.target]
    j = m
    while j < len(gens) and isinstance(gens[j], Dot):
        if gens[j].level != m:
            raise FoamError("input not in trace-like form: dots must sit on the disks")
        decorations[gens[j].slot] = decorations[gens[j].slot] * gens[j].P
        j += 1
    expected = [DigonDeath(i) if isinstance(X.layers[i], Split) else Unzip(i) for i in reversed(range(m))]
    if webs[m].layers[m:] != X.dagger().layers or gens[j:] != expected:
        raise FoamError("input not in trace-like form: cups, disk dots, then caps in reverse order")
    return X.dagger(), decorations


def annular_reduce(gamma: BlWeb | FoamWord, decorations: Sequence[SymPoly] | None = None) -> AnnularReduction:
    """Remove the vertices of a capped Γ×S¹ one at a time, innermost first.

    Accepts either Γ with its disk decorations or the capped word itself.
    """
    if isinstance(gamma, FoamWord):
        gamma, decorations = uncap(gamma)
    if decorations is None:
        decorations = [SymPoly.one(t) for t in gamma.source]
    if len(decorations) != len(gamma.source):
        raise FoamError(f"need {len(gamma.source)} disk decorations, got {len(decorations)}")
    X = gamma.dagger()
    k = X.k
    mid = X.target
    Q = Poly.const(k, 1)
    for blk, P in zip(mid.blocks(), decorations):
        Q = Q * P.to_poly(list(blk), k)
    steps = []
    for m in reversed(range(len(X.layers))):
        layer, lev = X.layers[m], X.levels[m]
        if isinstance(layer, Split):
            # digon at the middle: bubble with the accumulated decoration
            a_vars, b_vars = [list(r) for r in layer.apply(lev).blocks()[layer.slot:layer.slot + 2]]
            Q = frobenius_trace(Q, a_vars, b_vars)
            steps.append(f"bubble ({layer.a},{layer.b})")
        else:
            a_vars, b_vars = [list(r) for r in lev.blocks()[layer.slot:layer.slot + 2]]
            a, b = len(a_vars), len(b_vars)
            casimir = Poly.zero(k)
            for lam in partitions_in_box(a, b):
                dual = rect_dual(lam, a, b)
                term = schur(lam, a).to_poly(a_vars, k) * schur(dual, b).to_poly(b_vars, k)
                casimir = casimir - term if dual.size % 2 else casimir + term
            Q = Q * casimir
            steps.append(f"migrate + diabolo ({a},{b})")
    disks = []
    from .soergel import block_factors

    for coeff, factors in block_factors(Q, X.source):
        polys = [SymPoly.from_poly(f.restrict(list(blk)), check=False)
                 for f, blk in zip(factors, X.source.blocks())]
        disks.append((coeff, polys))
    return AnnularReduction(Q, disks, steps)


# -- independent degree oracle --------------------------------------------------------------

@dataclass(frozen=True)
class CellFoam:
    """Foam given by its facets (thickness, χ, dot degree) and bindings (a, b, χ)."""

    k: int
    facets: tuple
    bindings: tuple
    bottom: Composition
    top: Composition


def facet_copies(t: int, N: int) -> int:
    return t * (N - t)


def seam_multiplicity(a: int, b: int, N: int) -> int:
    return a * b + (a + b) * (N - a - b)


def count_seam_sheets(a: int, b: int, N: int) -> tuple[int, dict]:
    """Brute force: unordered colour pairs {i, j} whose bicoloured surface crosses the seam.

    Colours 0..a-1 are the a-facet pigments, a..a+b-1 the b-facet ones.
    Returns the number of sheets and the number of copies of each facet.
    """
    A = set(range(a))
    B = set(range(a, a + b))
    T = A | B
    sheets = 0
    copies = {"a": 0, "b": 0, "ab": 0}
    for i, j in combinations(range(N), 2):
        touched = []
        for name, S in (("a", A), ("b", B), ("ab", T)):
            if (i in S) != (j in S):
                touched.append(name)
                copies[name] += 1
        if touched:
            if len(touched) != 2:
                raise AssertionError("a bicoloured surface must meet exactly two facets at a seam")
            sheets += 1
    return sheets, copies


def cw_degree(foam: CellFoam, N: int | None = None) -> Fraction:
    N = foam.k if N is None else N
    chi = 0
    dots = 0
    for t, x, d in foam.facets:
        chi += facet_copies(t, N) * x
        dots += d
    for a, b, x in foam.bindings:
        chi -= seam_multiplicity(a, b, N) * x
    k = foam.k
    boundary = Fraction(sum(p * (k - p) for p in foam.bottom) + sum(p * (k - p) for p in foam.top), 2)
    return -chi + 2 * dots + boundary


def reference_foams(a: int, b: int, dot_degrees: tuple = (0, 0)) -> dict:
    """Cell structures of the identity, zip, bubble and diabolo foams on a+b."""
    k = a + b
    T, AB = Composition((k,)), Composition((a, b))
    da, db = dot_degrees
    return {
        "identity": CellFoam(k, ((a, 1, 0), (b, 1, 0), (k, 1, 0)), ((a, b, 1),), AB, Composition((k,))),
        "zip": CellFoam(k, ((a, 1, 0), (b, 1, 0), (k, 1, 0)), ((a, b, 1),), AB, AB),
        "birth": CellFoam(k, ((a, 1, 0), (b, 1, 0), (k, 1, 0)), ((a, b, 1),), T, T),
        "bubble": CellFoam(k, ((a, 1, da), (b, 1, db), (k, 0, 0)), ((a, b, 0),), T, T),
        "diabolo": CellFoam(k, ((a, 0, 0), (b, 0, 0), (k, 1, 0)), ((a, b, 0),), AB, AB),
    }


def reference_words(a: int, b: int, P: SymPoly | None = None, Q: SymPoly | None = None) -> dict:
    """The same reference foams as generator words."""
    T, AB = BlWeb.identity((a + b,)), BlWeb.identity((a, b))
    bubble = [DigonBirth(0, 0, a, b)]
    if P is not None:
        bubble.append(Dot(1, 0, P))
    if Q is not None:
        bubble.append(Dot(1, 1, Q))
    bubble.append(DigonDeath(0))
    return {
        "identity": FoamWord(BlWeb((a, b), (Merge(0),))),
        "zip": FoamWord(AB, (Zip(0, 0),)),
        "birth": FoamWord(T, (DigonBirth(0, 0, a, b),)),
        "bubble": FoamWord(T, tuple(bubble)),
        "diabolo": FoamWord(AB, (Zip(0, 0), Unzip(0))),
    }


# -- text format ---------------------------------------------------------------------------

def parse_foam(text: str, base_dir: str | None = None) -> FoamWord:
    """``web ...`` lines (or ``foam on <file>``) followed by ``foam`` and generator lines."""
    import os

    lines = text.splitlines()
    web_lines, gen_lines = [], []
    target = web_lines
    web = None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for part in [p.strip() for p in line.split(";") if p.strip()]:
            if part.startswith("foam on "):
                path = part[len("foam on "):].strip()
                if base_dir and not os.path.isabs(path):
                    path = os.path.join(base_dir, path)
                with open(path, encoding="utf-8") as fh:
                    web = parse_web(fh.read())
                target = gen_lines
            elif part == "foam":
                target = gen_lines
            else:
                target.append((lineno, part))
    if web is None:
        web = parse_web("\n".join(p for _, p in web_lines))
    if not isinstance(web, BlWeb):
        raise FoamError("foam words live on bl-webs, not annular webs")
    gens = []
    current = web
    for lineno, part in gen_lines:
        g = _parse_generator(part, current, lineno)
        gens.append(g)
        try:
            current = g.target(current)
        except (FoamError, FlowError) as exc:
            raise FoamError(f"line {lineno}: {exc}") from None
    return FoamWord(web, gens)


def _parse_generator(part: str, web: BlWeb, lineno: int):
    toks = part.split()
    name = toks[0]
    try:
        if name == "dot":
            level, slot = int(toks[1]), int(toks[2]) - 1
            n = _level(web, level)[slot]
            return Dot(level, slot, parse_symexpr(" ".join(toks[3:]), n))
        if name == "zip":
            return Zip(int(toks[1]), int(toks[2]) - 1)
        if name == "unzip":
            return Unzip(int(toks[1]) - 1)
        if name == "birth":
            a, b = (int(x) for x in toks[3].strip("()").split(","))
            return DigonBirth(int(toks[1]), int(toks[2]) - 1, a, b)
        if name == "death":
            return DigonDeath(int(toks[1]) - 1)
        if name == "exchange":
            return Exchange(int(toks[1]) - 1)
    except (IndexError, ValueError) as exc:
        raise FoamError(f"line {lineno}: cannot parse {part!r}: {exc}") from None
    raise FoamError(f"line {lineno}: unknown generator {name!r}")


def classical_count_check(a: int, b: int, N: int) -> bool:
    """Sheet-end count 2m equals the total facet-copy count at a seam."""
    _, copies = count_seam_sheets(a, b, N)
    ok = (copies["a"], copies["b"], copies["ab"]) == (facet_copies(a, N), facet_copies(b, N),
                                                     facet_copies(a + b, N))
    return ok and sum(copies.values()) == 2 * seam_multiplicity(a, b, N)
