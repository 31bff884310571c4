"""Compositions, positions and braid-like webs as layer words.

A web is stored in well-presented form: a source composition and a list of
layers, each layer carrying exactly one trivalent vertex.  ``Merge(i)`` fuses
strands i and i+1, ``Split(i, a, b)`` splits strand i of thickness a+b into
(a, b).  Slots are 0-based internally and 1-based in the text format.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


class FlowError(ValueError):
    """A layer does not fit the thickness sequence it is applied to."""

    def __init__(self, message: str, layer: int | None = None):
        super().__init__(message if layer is None else f"layer {layer}: {message}")
        self.layer = layer


class WebSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Composition(tuple):
    """Finite sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def level(self) -> int:
        return sum(self)

    def blocks(self) -> list[range]:
        """Contiguous variable ranges, one per part."""
        out, start = [], 0
        for p in self:
            out.append(range(start, start + p))
            start += p
        return out

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


def parse_composition(text: str) -> Composition:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"composition must be parenthesised: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        return Composition()
    return Composition(int(t) for t in inner.split(","))


def shift_composition(c: Sequence[int]) -> int:
    """sum_{i<j} k_i k_j."""
    total = 0
    run = 0
    for p in c:
        total += run * p
        run += p
    return total


def is_decomposition(fine: Sequence[int], coarse: Sequence[int]) -> tuple[bool, bool]:
    """(fine refines coarse blockwise in order, the refinement is elementary)."""
    if sum(fine) != sum(coarse):
        raise ValueError("compositions of different levels")
    it = iter(fine)
    for target in coarse:
        acc = 0
        while acc < target:
            try:
                acc += next(it)
            except StopIteration:
                return False, False
        if acc != target:
            return False, False
    ok = next(it, None) is None
    return ok, ok and len(fine) == len(coarse) + 1


def compositions_of(k: int) -> list[Composition]:
    if k == 0:
        return [Composition()]
    out = []
    for first in range(1, k + 1):
        for rest in compositions_of(k - first):
            out.append(Composition((first,) + tuple(rest)))
    return out


@dataclass(frozen=True)
class Position:
    composition: Composition
    points: tuple = ()

    def __post_init__(self):
        pts = tuple(Fraction(p) for p in self.points) or tuple(
            Fraction(i + 1, len(self.composition) + 1) for i in range(len(self.composition))
        )
        if len(pts) != len(self.composition):
            raise ValueError("points and parts have different lengths")
        if any(not 0 < p < 1 for p in pts) or any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("points must be strictly increasing in (0,1)")
        object.__setattr__(self, "points", pts)

    def __eq__(self, other):
        if isinstance(other, Position):
            return self.composition == other.composition
        return NotImplemented

    def __hash__(self):
        return hash(self.composition)


# -- layers -------------------------------------------------------------------

@dataclass(frozen=True)
class Merge:
    slot: int

    def apply(self, c: Composition) -> Composition:
        i = self.slot
        if not 0 <= i < len(c) - 1:
            raise FlowError(f"merge slot {i + 1} out of range for {c}")
        return Composition(c[:i] + (c[i] + c[i + 1],) + c[i + 2:])

    def thicknesses(self, c: Composition) -> tuple[int, int]:
        return c[self.slot], c[self.slot + 1]

    def dagger(self, c: Composition) -> "Split":
        a, b = self.thicknesses(c)
        return Split(self.slot, a, b)

    def shifted(self, offset: int) -> "Merge":
        return Merge(self.slot + offset)

    def __str__(self):
        return f"merge {self.slot + 1}"


@dataclass(frozen=True)
class Split:
    slot: int
    a: int
    b: int

    def apply(self, c: Composition) -> Composition:
        i = self.slot
        if self.a < 1 or self.b < 1:
            raise FlowError(f"split thicknesses must be positive: ({self.a},{self.b})")
        if not 0 <= i < len(c):
            raise FlowError(f"split slot {i + 1} out of range for {c}")
        if c[i] != self.a + self.b:
            raise FlowError(f"cannot split strand of thickness {c[i]} into ({self.a},{self.b})")
        return Composition(c[:i] + (self.a, self.b) + c[i + 1:])

    def thicknesses(self, c: Composition) -> tuple[int, int]:
        return self.a, self.b

    def dagger(self, c: Composition) -> Merge:
        return Merge(self.slot)

    def shifted(self, offset: int) -> "Split":
        return Split(self.slot + offset, self.a, self.b)

    def __str__(self):
        return f"split {self.slot + 1} ({self.a},{self.b})"


Layer = Merge | Split


def run_layers(source: Composition, layers: Sequence[Layer]) -> list[Composition]:
    levels = [Composition(source)]
    for idx, layer in enumerate(layers):
        try:
            levels.append(layer.apply(levels[-1]))
        except FlowError as exc:
            raise FlowError(str(exc), idx + 1) from None
    return levels


@dataclass(frozen=True)
class BlWeb:
    """Braid-like web from ``source`` (bottom) to ``target`` (top)."""

    source: Composition
    layers: tuple = ()
    levels: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "source", Composition(self.source))
        object.__setattr__(self, "layers", tuple(self.layers))
        object.__setattr__(self, "levels", tuple(run_layers(self.source, self.layers)))

    @classmethod
    def identity(cls, c: Sequence[int]) -> "BlWeb":
        return cls(Composition(c))

    @property
    def target(self) -> Composition:
        return self.levels[-1]

    @property
    def k(self) -> int:
        return self.source.level

    def vertex_count(self) -> int:
        return len(self.layers)

    def vertices(self) -> list[tuple[str, int, int]]:
        """(kind, a, b) for each layer, bottom to top."""
        out = []
        for layer, lev in zip(self.layers, self.levels):
            a, b = layer.thicknesses(lev)
            out.append(("merge" if isinstance(layer, Merge) else "split", a, b))
        return out

    def compose(self, other: "BlWeb") -> "BlWeb":
        """``other`` stacked on top of ``self`` (self first)."""
        if self.target != other.source:
            raise FlowError(f"cannot stack: {self.target} vs {other.source}")
        return BlWeb(self.source, self.layers + other.layers)

    def dagger(self) -> "BlWeb":
        layers = [layer.dagger(lev) for layer, lev in zip(self.layers, self.levels)]
        return BlWeb(self.target, tuple(reversed(layers)))

    def disjoint_union(self, other: "BlWeb") -> "BlWeb":
        """Side by side; the right web's vertices are listed after the left ones."""
        width = len(self.target)
        layers = list(self.layers)
        layers += [layer.shifted(width) for layer in other.layers]
        return BlWeb(self.source + other.source, tuple(layers))

    def __str__(self):
        lines = [f"web k={self.k} source={self.source}"]
        lines += [str(layer) for layer in self.layers]
        return "\n".join(lines)


def compose(g: BlWeb, f: BlWeb) -> BlWeb:
    """g after f."""
    return f.compose(g)


def dagger(f: BlWeb) -> BlWeb:
    return f.dagger()


def disjoint_union(f: BlWeb, g: BlWeb) -> BlWeb:
    return f.disjoint_union(g)


def shift_web(f: BlWeb) -> Fraction:
    return sum((Fraction(a * b, 2) for _, a, b in f.vertices()), Fraction(0))


def standard_tree(p: Position | Sequence[int]) -> BlWeb:
    """Left comb of splits from (k) to p: peel off the first part each time."""
    c = p.composition if isinstance(p, Position) else Composition(p)
    layers = []
    rest = c.level
    for i, part in enumerate(c[:-1]):
        layers.append(Split(i, part, rest - part))
        rest -= part
    return BlWeb(Composition((c.level,)), tuple(layers))


# -- annular webs ---------------------------------------------------------------

@dataclass(frozen=True)
class AnnularWeb:
    """Cyclic layer word; ``cut`` is the composition where the circle is cut."""

    cut: Composition
    layers: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cut", Composition(self.cut))
        object.__setattr__(self, "layers", tuple(self.layers))
        levels = run_layers(self.cut, self.layers)
        if levels[-1] != self.cut:
            raise FlowError(f"annular word ends at {levels[-1]}, not at the cut {self.cut}")

    @property
    def k(self) -> int:
        return self.cut.level

    def as_web(self) -> BlWeb:
        return BlWeb(self.cut, self.layers)

    def levels(self) -> list[Composition]:
        return run_layers(self.cut, self.layers)[:-1]

    def rotate(self, r: int) -> "AnnularWeb":
        n = len(self.layers)
        if n == 0:
            return self
        r %= n
        levels = self.levels()
        return AnnularWeb(levels[r], self.layers[r:] + self.layers[:r])

    def canonical(self) -> "AnnularWeb":
        """Lexicographically least rotation."""
        n = len(self.layers)
        if n == 0:
            return self
        return min((self.rotate(r) for r in range(n)), key=_annular_key)

    def is_rotation_of(self, other: "AnnularWeb") -> bool:
        return _annular_key(self.canonical()) == _annular_key(other.canonical())

    def vertex_count(self) -> int:
        return len(self.layers)

    def __str__(self):
        lines = [f"annular k={self.k} cut={self.cut}"]
        lines += [str(layer) for layer in self.layers]
        return "\n".join(lines)


def _layer_key(layer: Layer) -> tuple:
    if isinstance(layer, Merge):
        return (0, layer.slot, 0, 0)
    return (1, layer.slot, layer.a, layer.b)


def _annular_key(w: AnnularWeb) -> tuple:
    return (tuple(w.cut), tuple(_layer_key(layer) for layer in w.layers))


def closure(f: BlWeb) -> AnnularWeb:
    if f.source != f.target:
        raise FlowError(f"closure needs an endomorphism, got {f.source} -> {f.target}")
    return AnnularWeb(f.source, f.layers)


def circles(c: Sequence[int]) -> AnnularWeb:
    """The concentric-circle object for the composition c."""
    return AnnularWeb(Composition(c))


# -- text format ----------------------------------------------------------------

_HEADER = re.compile(r"^(web|annular)\b(.*)$")
_KV = re.compile(r"(\w+)\s*=\s*(\([^)]*\)|\S+)")
_SPLIT = re.compile(r"^split\s+(\d+)\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)$")
_MERGE = re.compile(r"^merge\s+(\d+)$")


def _directives(text: str):
    """Yield (line, column, directive) for ';'- or newline-separated directives."""
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        col = 0
        for chunk in line.split(";"):
            stripped = chunk.strip()
            if stripped:
                yield lineno, col + chunk.index(stripped[0]) + 1, stripped
            col += len(chunk) + 1


def parse_layer(directive: str, line: int = 1, column: int = 1) -> Layer:
    m = _SPLIT.match(directive)
    if m:
        return Split(int(m.group(1)) - 1, int(m.group(2)), int(m.group(3)))
    m = _MERGE.match(directive)
    if m:
        return Merge(int(m.group(1)) - 1)
    raise WebSyntaxError(f"unknown layer directive {directive!r}", line, column)


def parse_web(text: str) -> BlWeb | AnnularWeb:
    """Parse ``web k=.. source=(..) ; split i (a,b) ; merge i`` (or ``annular ... cut=(..)``)."""
    items = list(_directives(text))
    if not items:
        raise WebSyntaxError("empty web description", 1, 1)
    line, col, head = items[0]
    m = _HEADER.match(head)
    if not m:
        raise WebSyntaxError("expected 'web' or 'annular' header", line, col)
    kind = m.group(1)
    opts = dict(_KV.findall(m.group(2)))
    key = "source" if kind == "web" else "cut"
    if key not in opts:
        raise WebSyntaxError(f"missing {key}=(...)", line, col)
    try:
        start = parse_composition(opts[key])
    except ValueError as exc:
        raise WebSyntaxError(str(exc), line, col) from None
    if "k" in opts and int(opts["k"]) != start.level:
        raise WebSyntaxError(f"k={opts['k']} but {key} has level {start.level}", line, col)
    layers = [parse_layer(d, ln, cl) for ln, cl, d in items[1:]]
    if kind == "web":
        web = BlWeb(start, tuple(layers))
        if "target" in opts and parse_composition(opts["target"]) != web.target:
            raise FlowError(f"declared target {opts['target']} but web ends at {web.target}")
        return web
    return AnnularWeb(start, tuple(layers))


def example_web_k11() -> BlWeb:
    """Layer-word transcription of the k=11 example web from (4,5,2) to (2,4,2,3)."""
    return BlWeb(
        Composition((4, 5, 2)),
        (Split(0, 2, 2), Merge(1), Split(1, 4, 3), Merge(2), Split(2, 2, 3)),
    )


def enumerate_webs(source: Composition, max_vertices: int) -> list[BlWeb]:
    """All layer words from ``source`` with at most ``max_vertices`` layers."""
    out = [BlWeb(source)]
    frontier = [BlWeb(source)]
    for _ in range(max_vertices):
        nxt = []
        for w in frontier:
            c = w.target
            for i in range(len(c) - 1):
                nxt.append(BlWeb(w.source, w.layers + (Merge(i),)))
            for i, p in enumerate(c):
                for a in range(1, p):
                    nxt.append(BlWeb(w.source, w.layers + (Split(i, a, p - a),)))
        out += nxt
        frontier = nxt
    return out
