from fractions import Fraction

import pytest

from foamcalc.webs import (
    AnnularWeb, BlWeb, Composition, FlowError, Merge, Split, WebSyntaxError, circles, closure,
    compose, dagger, example_web_k11, is_decomposition, parse_web, shift_composition, shift_web,
    standard_tree,
)


def test_composition_shift():
    assert shift_composition((1, 1, 1, 1)) == 6
    assert shift_composition((5,)) == 0
    assert shift_composition((3, 4, 3, 4)) == 73


def test_decomposition_relation():
    assert is_decomposition((3, 4, 1, 2, 4), (3, 4, 3, 4)) == (True, True)
    assert is_decomposition((1, 1, 1), (3,)) == (True, False)
    assert is_decomposition((2, 1), (1, 2))[0] is False


def test_compositions_reject_nonpositive_parts():
    with pytest.raises(ValueError):
        Composition((2, 0))


def test_layers_apply():
    c = Composition((1, 1))
    assert Merge(0).apply(c) == Composition((2,))
    assert Split(0, 1, 2).apply(Composition((3,))) == Composition((1, 2))
    with pytest.raises(FlowError):
        Merge(1).apply(c)
    with pytest.raises(FlowError):
        Split(0, 1, 1).apply(Composition((3,)))


def test_example_web_boundary_and_shift():
    w = example_web_k11()
    assert w.source == (4, 5, 2) and w.target == (2, 4, 2, 3)
    assert w.vertex_count() == len(w.layers)
    total = Fraction(0)
    for lev, layer in zip(w.levels, w.layers):
        a, b = layer.thicknesses(lev)
        total += Fraction(a * b, 2)
    assert shift_web(w) == total


def test_dagger_compose_identity():
    w = example_web_k11()
    assert dagger(dagger(w)) == w
    assert compose(w, BlWeb.identity(w.source)) == w
    assert compose(BlWeb.identity(w.target), w) == w


def test_dagger_of_single_merge():
    w = BlWeb(Composition((1, 1)), (Merge(0),))
    d = dagger(w)
    assert d.source == (2,) and d.target == (1, 1)
    assert isinstance(d.layers[0], Split) and d.layers[0].thicknesses(Composition((2,))) == (1, 1)


def test_single_merge_shift():
    assert shift_web(BlWeb.identity((2, 3))) == 0
    assert shift_web(BlWeb(Composition((1, 1)), (Merge(0),))) == Fraction(1, 2)


def test_standard_tree():
    assert standard_tree((4,)).layers == ()
    t = standard_tree((1, 1, 1))
    assert t.source == (3,) and t.target == (1, 1, 1)
    assert len(t.layers) == 2 and all(isinstance(l, Split) for l in t.layers)
    assert t.levels[1] == (1, 2)


def test_disjoint_union_side_by_side():
    f = BlWeb(Composition((1, 1)), (Merge(0),))
    g = BlWeb(Composition((2,)), (Split(0, 1, 1),))
    u = f.disjoint_union(g)
    assert u.source == (1, 1, 2) and u.target == (2, 1, 1)


def test_closure_and_circles():
    assert closure(BlWeb.identity((2, 1))) == circles((2, 1))
    digon = closure(BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0))))
    assert isinstance(digon, AnnularWeb) and digon.vertex_count() == 2
    with pytest.raises(FlowError):
        closure(BlWeb(Composition((1, 1)), (Merge(0),)))


def test_rotation_is_an_equivalence():
    a = closure(BlWeb(Composition((1, 2)), (Merge(0), Split(0, 1, 2))))
    r = a.rotate(1)
    assert r.is_rotation_of(a)
    assert r.canonical() == a.canonical()


def test_parse_round_trip():
    w = example_web_k11()
    assert parse_web(str(w)) == w
    assert parse_web("web k=2 source=(1,1); merge 1") == BlWeb(Composition((1, 1)), (Merge(0),))


def test_parse_errors_carry_position():
    with pytest.raises(WebSyntaxError) as err:
        parse_web("web source=(1,1)\n  twist 1")
    assert (err.value.line, err.value.column) == (2, 3)
    with pytest.raises(WebSyntaxError):
        parse_web("web k=3 source=(1,1)")
    with pytest.raises(FlowError):
        parse_web("web source=(1,1) target=(1,1); merge 1")
