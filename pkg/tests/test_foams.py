import pytest

from foamcalc import foams
from foamcalc.corpus import data_dir
from foamcalc.foams import (
    DigonBirth, DigonDeath, Dot, Exchange, FoamError, FoamWord, Unzip, Zip, annular_reduce, bend,
    bubble_remove, capped_word, classical_count_check, cw_degree, degree, diabolo_remove,
    dot_migrate, parse_foam, reference_foams, reference_words, uncap, unbend, whisker_above,
    whisker_below,
)
from foamcalc.poly import Poly
from foamcalc.symfun import SymPoly, elementary_sym, power_sum
from foamcalc.webs import BlWeb, Composition, Merge, Split

X1 = elementary_sym(1, 1)
ONE1 = SymPoly.one(1)
ID11 = BlWeb.identity((1, 1))
ID2 = BlWeb.identity((2,))


def _migrated_total(word, index):
    """Sum of the two thin dots of each migrated term, as a polynomial in x1, x2."""
    total = Poly.zero(2)
    for c, w in dot_migrate(word, index):
        d1, d2 = w.generators[index], w.generators[index + 1]
        total = total + d1.P.to_poly([0], 2) * d2.P.to_poly([1], 2) * c
    return total


SEAM = BlWeb(Composition((2,)), (Split(0, 1, 1),))


def test_dot_migrate_elementary():
    x1, x2 = Poly.var(2, 0), Poly.var(2, 1)
    e1 = FoamWord(SEAM, (Dot(0, 0, elementary_sym(2, 1)),))
    assert len(dot_migrate(e1, 0)) == 2
    assert _migrated_total(e1, 0) == x1 + x2
    e2 = FoamWord(SEAM, (Dot(0, 0, elementary_sym(2, 2)),))
    terms = dot_migrate(e2, 0)
    assert len(terms) == 1 and _migrated_total(e2, 0) == x1 * x2


def test_dot_migrate_power_sum():
    x1, x2 = Poly.var(2, 0), Poly.var(2, 1)
    p2 = FoamWord(SEAM, (Dot(0, 0, power_sum(2, 2)),))
    assert _migrated_total(p2, 0) == x1 * x1 + x2 * x2


def test_dot_migrate_needs_a_vertex():
    with pytest.raises(FoamError):
        dot_migrate(FoamWord(ID2, (Dot(0, 0, elementary_sym(2, 1)),)), 0)


def _bubble(P, Q):
    return FoamWord(ID2, (DigonBirth(0, 0, 1, 1), Dot(1, 0, P), Dot(1, 1, Q), DigonDeath(0)))


def test_bubble_removal_values():
    (c, w), = bubble_remove(_bubble(X1, ONE1), 0)
    assert c == 1 and w.generators == (Dot(0, 0, SymPoly.one(2)),)
    assert bubble_remove(_bubble(ONE1, ONE1), 0) == []
    (c, w), = bubble_remove(_bubble(X1 * X1, ONE1), 0)
    assert w.generators == (Dot(0, 0, elementary_sym(2, 1)),)


def test_diabolo_removal_term_counts():
    terms = diabolo_remove(FoamWord(ID11, (Zip(0, 0), Unzip(0))), 0)
    assert sorted(c for c, _ in terms) == [-1, 1]
    signed = {(str(w.generators[0].P.as_expr()), str(w.generators[1].P.as_expr())): c for c, w in terms}
    assert signed == {("1", "e1"): -1, ("e1", "1"): 1}
    assert len(diabolo_remove(FoamWord(BlWeb.identity((1, 2)), (Zip(0, 0), Unzip(0))), 0)) == 3


def test_generator_degrees():
    assert degree(FoamWord(ID11)) == 0
    assert Zip(0, 0).degree(BlWeb.identity((2, 3))) == 6
    assert DigonBirth(0, 0, 1, 2).degree(BlWeb.identity((3,))) == -2
    assert Dot(0, 0, elementary_sym(2, 1)).degree(ID2) == 2


def test_degree_matches_cell_oracle():
    for a in range(1, 4):
        for b in range(1, 4):
            cells = reference_foams(a, b)
            words = reference_words(a, b)
            for name in ("zip", "birth", "diabolo"):
                assert cw_degree(cells[name]) == degree(words[name]), (a, b, name)
            assert cw_degree(cells["identity"]) == 0
            assert classical_count_check(a, b, a + b + 1)


def test_bubble_degree_counts_dots():
    P, Q = elementary_sym(1, 1), SymPoly.one(2)
    words = reference_words(1, 2, P, Q)
    assert degree(words["bubble"]) == cw_degree(reference_foams(1, 2, (1, 0))["bubble"])


def test_degree_additive_under_composition_and_union():
    f = FoamWord(ID11, (Zip(0, 0),))
    g = FoamWord(f.target, (Dot(1, 0, elementary_sym(2, 1)), Unzip(0)))
    assert degree(foams.compose(g, f)) == degree(f) + degree(g)
    h = FoamWord(ID2, (DigonBirth(0, 0, 1, 1),))
    u = foams.disjoint_union(f, h)
    assert u.source == BlWeb.identity((1, 1, 2))
    assert degree(u) == degree(f) + degree(h)


def test_whiskering_keeps_degree():
    f = FoamWord(ID11, (Zip(0, 0),))
    below = whisker_below(f, BlWeb(Composition((2,)), (Split(0, 1, 1),)))
    above = whisker_above(f, BlWeb(Composition((1, 1)), (Merge(0),)))
    assert degree(below) == degree(above) == degree(f)
    assert below.source.source == (2,)
    assert above.target.target == (2,)


def test_bend_round_trip():
    f = parse_foam((data_dir() / "foams" / "bend_split.foam").read_text(), str(data_dir() / "foams"))
    b = bend(f)
    assert len(b.target.layers) == len(f.target.layers) - 1
    assert unbend(b).target == f.target
    with pytest.raises(FoamError):
        bend(FoamWord(ID11))


def test_exchange_kinds():
    far = BlWeb(Composition((1, 1, 1, 1)), (Merge(0), Merge(1)))
    assert Exchange(0).kind(far) == "far"
    assoc = BlWeb(Composition((1, 1, 1)), (Merge(0), Merge(0)))
    assert Exchange(0).kind(assoc) == "assoc"
    assert Exchange(0).target(assoc).target == assoc.target
    assert Exchange(0).degree(assoc) == 0


def test_generator_errors():
    with pytest.raises(FoamError):
        Unzip(0).target(ID11)
    with pytest.raises(FoamError):
        Dot(0, 0, elementary_sym(2, 1)).target(ID11)
    with pytest.raises(FoamError):
        FoamWord(ID11, (DigonDeath(0),)).target


def test_capped_word_round_trip():
    gamma = BlWeb(Composition((1, 1, 1)), (Merge(0), Merge(0)))
    decs = [X1, ONE1, X1]
    word = capped_word(gamma, decs)
    g2, d2 = uncap(word)
    assert g2 == gamma and d2 == decs
    with pytest.raises(FoamError):
        uncap(FoamWord(ID11, (Zip(0, 0),)))


def test_annular_reduce_without_vertices():
    decs = [X1, SymPoly.one(1)]
    red = annular_reduce(BlWeb.identity((1, 1)), decs)
    assert red.steps == []
    assert red.disks == [(1, decs)]


def test_annular_reduce_single_merge():
    red = annular_reduce(BlWeb(Composition((1, 1)), (Merge(0),)), [X1, ONE1])
    assert red.steps == ["bubble (1,1)"]
    assert red.disks == [(1, [SymPoly.one(2)])]


def test_annular_reduce_single_split():
    red = annular_reduce(BlWeb(Composition((2,)), (Split(0, 1, 1),)), [SymPoly.one(2)])
    assert sorted(c for c, _ in red.disks) == [-1, 1]
    assert red.polynomial == Poly.var(2, 0) - Poly.var(2, 1)


def test_shipped_foam_files_parse():
    folder = data_dir() / "foams"
    expected = {"zip_11.foam": 1, "dotted_diabolo.foam": 4, "bubble_2.foam": 0, "bend_split.foam": 3,
                "k3_walk.foam": 1, "capped_three_vertex.foam": 4}
    for name, d in expected.items():
        word = parse_foam((folder / name).read_text(), str(folder))
        assert degree(word) == d, name
        assert parse_foam(str(word)) == word


def test_parse_errors():
    with pytest.raises((FoamError, ValueError)) as err:
        parse_foam("web k=2 source=(1,1)\nfoam\nunzip 1\n")
    assert "line 3" in str(err.value)
    with pytest.raises((FoamError, ValueError)):
        parse_foam("web k=2 source=(1,1)\nfoam\nspin 1\n")
