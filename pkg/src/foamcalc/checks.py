"""The acceptance checks, as plain functions returning a CheckResult.

Shared by ``foamcalc selftest`` and the acceptance tests.  Every check
compares two independently computed quantities exactly.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .qcomb import graded_dim_invariant_algebra, graded_rank_over_symmetric, quantum_binomial
from .symfun import (
    Partition,
    SymPoly,
    frobenius_trace,
    partitions_in_box,
    partitions_of,
    rect_dual,
    schur_poly,
    split_pairing,
)
from .poly import Poly
from .webs import BlWeb, Merge, Split, compositions_of, enumerate_webs


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "ok": self.ok,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


def _timed(number: int, name: str):
    def wrap(fn):
        def run(*args, **kwargs) -> CheckResult:
            t0 = time.perf_counter()
            ok, detail = fn(*args, **kwargs)
            return CheckResult(number, name, ok, detail, time.perf_counter() - t0)
        run.__name__ = fn.__name__
        run.__doc__ = fn.__doc__
        return run
    return wrap


@_timed(1, "rank coherence")
def check_rank_coherence(k_max: int = 5, D: int = 20):
    """Hilbert series of A_c versus q^{shift(c)} [k; c] times that of A_(k)."""
    bad = []
    count = 0
    for k in range(1, k_max + 1):
        full = graded_dim_invariant_algebra((k,), D)
        for c in compositions_of(k):
            count += 1
            lhs = graded_dim_invariant_algebra(c, D)
            rhs = (full * graded_rank_over_symmetric(c)).truncate(D)
            if lhs != rhs:
                bad.append(c)
    return not bad, f"{count} compositions to q^{D}" + (f", mismatches {bad}" if bad else "")


@_timed(2, "orthogonality and dual Cauchy")
def check_orthogonality(max_ab: int = 3):
    bad = []
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            n = a + b
            A, B = list(range(a)), list(range(a, n))
            box = partitions_in_box(a, b)
            for lam in box:
                sa = schur_poly(lam, A, n)
                for mu in partitions_in_box(b, a):
                    got = frobenius_trace(sa * schur_poly(mu, B, n), A, B)
                    want = (-1) ** mu.size if mu == rect_dual(lam, a, b) else 0
                    if got != Poly.const(n, want):
                        bad.append(("orth", a, b, lam, mu))
            lhs = Poly.const(n, 1)
            for i in A:
                for j in B:
                    lhs = lhs * (Poly.const(n, 1) + Poly.var(n, i) * Poly.var(n, j))
            rhs = Poly.zero(n)
            for lam in box:
                rhs = rhs + schur_poly(lam, A, n) * schur_poly(lam.transpose(), B, n)
            if lhs != rhs:
                bad.append(("cauchy", a, b))
    return not bad, f"a,b ≤ {max_ab}" + (f", failures {bad[:5]}" if bad else "")


def _random_sym(n: int, max_deg: int, rng: random.Random) -> SymPoly:
    coeffs = {}
    for d in range(max_deg + 1):
        for mu in partitions_of(d, n):
            if rng.random() < 0.5:
                coeffs[mu] = rng.randint(-3, 3)
    if not coeffs:
        coeffs[Partition()] = 1
    return SymPoly(n, coeffs)


def _pairing_by_evaluation(P: SymPoly, Q: SymPoly, point) -> Fraction:
    """Σ_{I⊔J} P(x_I) Q(x_J) / ∏_{i∈I, j∈J} (x_i - x_j) at a numeric point."""
    a, b = P.n, Q.n
    n = a + b
    p, q = P.to_poly(), Q.to_poly()
    total = Fraction(0)
    for I in combinations(range(n), a):
        J = [j for j in range(n) if j not in I]
        den = Fraction(1)
        for i in I:
            for j in J:
                den *= point[i] - point[j]
        total += p.evaluate([point[i] for i in I]) * q.evaluate([point[j] for j in J]) / den
    return total


@_timed(3, "split pairing")
def check_split_pairing(samples: int = 100, max_ab: int = 3, max_deg: int = 4, seed: int = 7):
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        a, b = rng.randint(1, max_ab), rng.randint(1, max_ab)
        P, Q = _random_sym(a, max_deg, rng), _random_sym(b, max_deg, rng)
        n = a + b
        f = P.to_poly(range(a), n) * Q.to_poly(range(a, n), n)
        R = frobenius_trace(f, range(a), range(a, n))  # raises unless polynomial
        if not R.is_symmetric_in(range(n)):
            bad.append(("symmetry", a, b))
            continue
        point = [Fraction(rng.randint(-40, 40), rng.randint(1, 7)) + i for i in range(n)]
        if len(set(point)) < n:
            continue
        if R.evaluate(point) != _pairing_by_evaluation(P, Q, point):
            bad.append(("value", a, b))
    diag = []
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            total = SymPoly(a + b)
            for lam in partitions_in_box(a, b):
                dual = rect_dual(lam, a, b)
                sa = SymPoly.from_poly(schur_poly(lam, range(a), a), check=False)
                sb = SymPoly.from_poly(schur_poly(dual, range(b), b), check=False)
                term = split_pairing(sa, sb)
                total = total + (term * -1 if dual.size % 2 else term)
            if total != SymPoly.one(a + b) * comb(a + b, a):
                diag.append((a, b))
    ok = not bad and not diag
    return ok, f"{samples} random pairs, diagonal sums for a,b ≤ {max_ab}" + (
        f", failures {bad[:5]} {diag}" if not ok else "")


@_timed(4, "digon and square relations")
def check_relations(max_param: int = 2, D: int = 10, extra_N: int = 3):
    from .glnoracle import OracleSizeError, maps_equal, web_to_map
    from .qcomb import QSeries
    from .soergel import graded_dim_bimodule
    from .webdecomp import SquareConfig, ladder_web, switch_terms

    bad = []
    graded = 0
    oracle = 0
    for a in range(1, max_param + 1):
        for b in range(1, max_param + 1):
            k = a + b
            digon = BlWeb((k,), (Split(0, a, b), Merge(0)))
            rhs = (graded_dim_bimodule(BlWeb((k,)), D + 2 * a * b) * quantum_binomial(k, a)).truncate(D)
            graded += 1
            if graded_dim_bimodule(digon, D) != rhs:
                bad.append(("digon graded", a, b))
            for N in range(k, k + extra_N + 1):
                oracle += 1
                m = web_to_map(digon, N)
                if not maps_equal(m, web_to_map(BlWeb((k,)), N) * comb(k, a)):
                    bad.append(("digon oracle", a, b, N))
    for x in range(0, max_param + 1):
        for y in range(0, max_param + 1):
            if x + y == 0:
                continue
            for r in range(0, max_param + 1):
                for s in range(0, max_param + 1):
                    for order in ("FE", "EF"):
                        cfg = SquareConfig(x, y, r, s, order)
                        if not cfg.valid_rungs(cfg.rungs()):
                            continue
                        lhs = ladder_web((x, y), cfg.rungs())
                        terms = [(c, ladder_web((x, y), rungs)) for c, rungs in switch_terms(cfg)]
                        if cfg.defect() >= 0:
                            graded += 1
                            tot = QSeries({}, D)
                            for c, w in terms:
                                tot = tot + graded_dim_bimodule(w, D + 4 * max_param ** 2) * c
                            if graded_dim_bimodule(lhs, D) != tot.truncate(D):
                                bad.append(("square graded", cfg))
                        for N in range(x + y, x + y + extra_N + 1):
                            try:
                                m = web_to_map(lhs, N)
                            except OracleSizeError:
                                continue
                            oracle += 1
                            tot = None
                            for c, w in terms:
                                t = web_to_map(w, N) * int(c.at_one())
                                tot = t if tot is None else tot + t
                            ok = (m.nnz == 0 or not m.count_nonzero()) if tot is None else maps_equal(m, tot)
                            if not ok:
                                bad.append(("square oracle", cfg, N))
    return not bad, f"{graded} graded comparisons to q^{D}, {oracle} oracle maps" + (
        f", failures {bad[:5]}" if bad else "")


@_timed(5, "annular web decomposition")
def check_decomposition(corpus=None, extra_N: int = 3):
    from .corpus import shipped_corpus
    from .glnoracle import annular_trace, circle_value
    from .webdecomp import qr_decompose

    corpus = shipped_corpus() if corpus is None else corpus
    bad = []
    for name, w in corpus:
        r1 = qr_decompose(w, "bfs")
        r2 = qr_decompose(w, "reverse")
        if r1.normal_form() != r2.normal_form():
            bad.append((name, "strategies"))
        signed = r1.signed()
        for N in range(w.k, w.k + extra_N + 1):
            pred = sum(v.at_one() * circle_value(c, N) for c, v in signed.items())
            if annular_trace(w, N) != pred:
                bad.append((name, N))
    return not bad and len(corpus) >= 20, f"{len(corpus)} annular webs, N = k..k+{extra_N}" + (
        f", failures {bad[:5]}" if bad else "")


@_timed(6, "foam degrees")
def check_foam_degrees(max_ab: int = 3):
    from .foams import classical_count_check, cw_degree, degree, reference_foams, reference_words
    from .symfun import elementary_sym, power_sum

    bad = []
    count = 0
    for a in range(1, max_ab + 1):
        for b in range(1, max_ab + 1):
            P, Q = power_sum(a, 2), elementary_sym(b, 1)
            cells = reference_foams(a, b, (2, 1))
            words = reference_words(a, b, P, Q)
            expected = {"identity": 0, "zip": a * b, "birth": -a * b,
                        "bubble": -2 * a * b + 2 * (2 + 1), "diabolo": 2 * a * b}
            for name, want in expected.items():
                count += 1
                if not (cw_degree(cells[name]) == degree(words[name]) == want):
                    bad.append((name, a, b))
            for N in range(a + b, a + b + 4):
                if not classical_count_check(a, b, N):
                    bad.append(("multiplicity", a, b, N))
    return not bad, f"{count} reference foams, seam counts for N ≤ a+b+3" + (
        f", failures {bad[:5]}" if bad else "")


def _random_word(web: BlWeb, length: int, rng: random.Random, max_vertices: int = 3):
    from .foams import Dot, FoamWord
    from .rho import moves
    from .symfun import elementary_sym

    gens = []
    cur = web
    for _ in range(length):
        opts = list(moves(cur, max_vertices))
        for l, lev in enumerate(cur.levels):
            for s, t in enumerate(lev):
                opts.append(Dot(l, s, elementary_sym(t, rng.randint(1, t))))
        g = rng.choice(opts)
        gens.append(g)
        cur = g.target(cur)
    return FoamWord(web, gens)


@_timed(7, "functoriality of rho")
def check_functoriality(pairs: int = 200, max_degree: int = 6, seed: int = 11):
    from .foams import degree
    from .rho import rho_foam

    rng = random.Random(seed)
    webs = []
    for k in (2, 3):
        for c in compositions_of(k):
            webs += enumerate_webs(c, 3)
    bad = []
    done = 0
    attempts = 0
    while done < pairs and attempts < 50 * pairs:
        attempts += 1
        G = _random_word(rng.choice(webs), rng.randint(1, 3), rng)
        F = _random_word(G.target, rng.randint(1, 3), rng)
        if abs(degree(G)) > max_degree or abs(degree(F)) > max_degree or abs(degree(G) + degree(F)) > max_degree:
            continue
        done += 1
        FG = G.then(F)
        lhs = rho_foam(FG)
        rhs = rho_foam(F).compose(rho_foam(G))
        if not (lhs == rhs and lhs.degree == degree(FG) and lhs.is_homogeneous()):
            bad.append(str(FG))
    ok = not bad and done == pairs
    return ok, f"{done} composable pairs" + (f", failures {len(bad)}" if bad else "")


@_timed(8, "full faithfulness")
def check_full_faithfulness(k_max: int = 3, max_vertices: int = 2, max_degree: int = 6):
    from .rho import fully_faithful_sweep

    reports = fully_faithful_sweep(k_max, max_vertices, max_degree)
    bad = [(r.source, w, d, f, h) for r in reports for w, d, f, h in r.rows if f != h]
    rows = sum(len(r.rows) for r in reports)
    # identity webs: dimensions are those of A_c
    id_bad = []
    for r in reports:
        if r.source.layers:
            continue
        series = graded_dim_invariant_algebra(r.source.source, max_degree)
        for w, d, f, h in r.rows:
            if not w.layers and f != series.coeff(d):
                id_bad.append((r.source.source, d))
    ok = not bad and not id_bad
    return ok, f"{len(reports)} source webs, {rows} (target, degree) comparisons" + (
        f", failures {bad[:3]} {id_bad[:3]}" if not ok else "")


@_timed(9, "annular reduction")
def check_annular_reduction(k_max: int = 3, max_vertices: int = 3, seed: int = 5):
    from .foams import annular_reduce, capped_word
    from .rho import element_of
    from .symfun import elementary_sym

    rng = random.Random(seed)
    bad = []
    count = 0
    for k in range(1, k_max + 1):
        for c in compositions_of(k):
            for gamma in enumerate_webs(c, max_vertices):
                decs = []
                for t in gamma.source:
                    P = SymPoly.one(t)
                    for _ in range(rng.randint(0, 2)):
                        P = P * elementary_sym(t, rng.randint(1, t))
                    decs.append(P)
                count += 1
                word = capped_word(gamma, decs)
                direct = element_of(word).get((), Poly.zero(k))
                red = annular_reduce(word)
                disks = Poly.zero(k)
                for coeff, polys in red.disks:
                    term = Poly.const(k, coeff)
                    for P, blk in zip(polys, word.source.source.blocks()):
                        term = term * P.to_poly(list(blk), k)
                    disks = disks + term
                if direct != red.polynomial or disks != red.polynomial:
                    bad.append(str(gamma))
    return not bad, f"{count} capped foams" + (f", failures {bad[:3]}" if bad else "")


ALL_CHECKS = [
    check_rank_coherence,
    check_orthogonality,
    check_split_pairing,
    check_relations,
    check_decomposition,
    check_foam_degrees,
    check_functoriality,
    check_full_faithfulness,
    check_annular_reduction,
]


def run_all(skip_slow: bool = False) -> list[CheckResult]:
    out = []
    for check in ALL_CHECKS:
        if skip_slow and check is check_full_faithfulness:
            continue
        out.append(check())
    return out

