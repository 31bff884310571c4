"""Annular web corpora: closures of small bl-webs and the shipped text files."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .webs import AnnularWeb, closure, compositions_of, enumerate_webs, parse_web


def annular_corpus(k_max: int = 4, max_vertices: int = 4) -> list[AnnularWeb]:
    """Closures of every endomorphism web with 1..max_vertices vertices, up to rotation."""
    seen: dict = {}
    for k in range(1, k_max + 1):
        for c in compositions_of(k):
            for w in enumerate_webs(c, max_vertices):
                if w.layers and w.target == w.source:
                    a = closure(w).canonical()
                    seen.setdefault((tuple(a.cut), a.layers), a)
    return sorted(seen.values(), key=lambda a: (a.k, len(a.layers), str(a)))


def data_dir() -> Path:
    return Path(str(resources.files("foamcalc") / "data"))


def shipped_corpus() -> list[tuple[str, AnnularWeb]]:
    """(file name, web) for every file in the packaged annular corpus."""
    out = []
    for path in sorted((data_dir() / "corpus").glob("*.web")):
        w = parse_web(path.read_text(encoding="utf-8"))
        if not isinstance(w, AnnularWeb):
            raise ValueError(f"{path.name} is not an annular web")
        out.append((path.name, w))
    return out
