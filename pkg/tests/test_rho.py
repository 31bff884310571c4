import random
from fractions import Fraction

from foamcalc import foams
from foamcalc.corpus import data_dir
from foamcalc.foams import (
    DigonBirth, DigonDeath, Dot, FoamWord, Zip, bend, degree, parse_foam, unbend,
)
from foamcalc.poly import Poly
from foamcalc.rho import (
    ElementFoam, element_of, moves, rho_by_composition, rho_foam, tensor_maps, tree_normalize,
    verify_fully_faithful,
)
from foamcalc.soergel import adjunction_transpose, bimodule, identity_map, multiplication_map
from foamcalc.symfun import Partition, SymPoly, elementary_sym, schur, split_pairing
from foamcalc.webs import BlWeb, Composition, Merge, Split

ID11 = BlWeb.identity((1, 1))
MERGE = BlWeb(Composition((1, 1)), (Merge(0),))
DIGON = BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0)))


def same_map(f, g):
    return f.source == g.source and f.target == g.target and f.degree == g.degree and f.vector() == g.vector()


def load(name):
    folder = data_dir() / "foams"
    return parse_foam((folder / name).read_text(), str(folder))


def test_identity_foam_is_identity_map():
    for w in (ID11, MERGE, DIGON):
        assert same_map(rho_foam(FoamWord(w)), identity_map(w))


def test_bubble_multiplies_by_split_pairing():
    for a, b in [(1, 1), (1, 2), (2, 1)]:
        P = schur(Partition((b,) * a), a) * elementary_sym(a, 1)
        Q = SymPoly.one(b)
        T = BlWeb.identity((a + b,))
        word = FoamWord(T, (DigonBirth(0, 0, a, b), Dot(1, 0, P), Dot(1, 1, Q), DigonDeath(0)))
        R = split_pairing(P, Q).to_poly(list(range(a + b)), a + b)
        assert not R.is_zero()
        assert same_map(rho_foam(word), multiplication_map(T, R))


def test_zip_is_bilinear_of_degree_one():
    phi = rho_foam(load("zip_11.foam"))
    assert phi.degree == 1 and phi.check_linearity() and phi.is_homogeneous()


def test_sequential_and_composite_agree():
    for name in ("dotted_diabolo.foam", "k3_walk.foam", "bend_split.foam", "capped_three_vertex.foam"):
        word = load(name)
        assert same_map(rho_foam(word), rho_by_composition(word))
        assert rho_foam(word).degree == degree(word)


def test_functoriality_on_random_pairs():
    rng = random.Random(3)
    start = BlWeb.identity((1, 2))
    for _ in range(15):
        web, g1 = start, []
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(moves(web, 3))
            g1.append(g)
            web = g.target(web)
        f = FoamWord(start, tuple(g1))
        g2 = []
        for _ in range(rng.randint(1, 3)):
            g = rng.choice(moves(web, 3))
            g2.append(g)
            web = g.target(web)
        g = FoamWord(f.target, tuple(g2))
        assert same_map(rho_foam(foams.compose(g, f)), rho_foam(g).compose(rho_foam(f)))


def test_boundary_dots_are_the_bimodule_actions():
    e1 = elementary_sym(2, 1)
    x = Poly.var(2, 0) + Poly.var(2, 1)
    split = BlWeb(Composition((2,)), (Split(0, 1, 1),))
    left = rho_foam(FoamWord(split, (Dot(0, 0, e1),)))
    assert same_map(left, multiplication_map(split, x, "left"))
    x1 = elementary_sym(1, 1)
    right = rho_foam(FoamWord(split, (Dot(1, 0, x1),)))
    assert same_map(right, multiplication_map(split, Poly.var(2, 0), "right"))


def test_bend_matches_adjunction():
    f = load("bend_split.foam")
    assert same_map(rho_foam(bend(f)), adjunction_transpose(rho_foam(f)))
    assert same_map(rho_foam(unbend(bend(f))), rho_foam(f))


def test_disjoint_union_is_tensor_product():
    f = FoamWord(ID11, (Zip(0, 0),))
    g = FoamWord(BlWeb.identity((2,)), (DigonBirth(0, 0, 1, 1),))
    u = foams.disjoint_union(f, g)
    assert same_map(rho_foam(u), tensor_maps(rho_foam(f), rho_foam(g)))


def test_tree_normalize_is_idempotent():
    word = load("k3_walk.foam")
    E = tree_normalize(word)
    assert isinstance(E, ElementFoam)
    assert tree_normalize(E) == E
    assert E.element() == element_of(word)


def test_tree_normalize_migrates_dot_below_split():
    split = BlWeb(Composition((2,)), (Split(0, 1, 1),))
    e1 = Poly.var(2, 0) + Poly.var(2, 1)
    one = Poly.const(2, 1)
    below = tree_normalize(split, [e1, one])
    above = tree_normalize(split, [one, e1])
    assert below == above


def test_tree_normalize_removes_bubble():
    T = BlWeb.identity((2,))
    x1 = elementary_sym(1, 1)
    word = FoamWord(T, (DigonBirth(0, 0, 1, 1), Dot(1, 0, x1), DigonDeath(0)))
    assert tree_normalize(word).element() == bimodule(T).normalize([Poly.const(2, 1)])


def test_full_faithfulness_identity_strands():
    report = verify_fully_faithful(ID11, ID11, max_degree=4)
    assert report.ok
    assert [(r[1], r[2], r[3]) for r in report.rows] == [(0, 1, 1), (2, 2, 2), (4, 3, 3)]


def test_full_faithfulness_merge_endomorphisms():
    report = verify_fully_faithful(MERGE, MERGE, max_degree=4)
    assert report.ok and report.rows


def test_full_faithfulness_digon_against_strand():
    report = verify_fully_faithful(DIGON, [DIGON, BlWeb.identity((2,))], max_degree=4)
    assert report.ok
    dims = {(str(w), d): h for w, d, _, h in report.rows}
    assert dims[(str(BlWeb.identity((2,))), Fraction(-1))] == 1
