from math import comb

import numpy as np
import pytest

from foamcalc.glnoracle import (
    OracleSizeError, WedgeSpace, annular_trace, circle_value, dense, maps_equal, web_to_map,
)
from foamcalc.webs import BlWeb, Composition, Merge, Split, circles, closure

DIGON = BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0)))


def test_identity_web_is_identity_matrix():
    m = dense(web_to_map(BlWeb.identity((1, 2)), 4))
    assert np.array_equal(m, np.eye(comb(4, 1) * comb(4, 2)))


def test_circle_trace_is_product_of_binomials():
    for N in range(3, 6):
        assert annular_trace(circles((1, 2)), N) == comb(N, 1) * comb(N, 2) == circle_value((1, 2), N)


def test_digon_circle():
    assert annular_trace(closure(DIGON), 3) == 6
    # q=1 digon relation: split then merge is twice the identity
    assert maps_equal(web_to_map(DIGON, 4), 2 * web_to_map(BlWeb.identity((2,)), 4))


def test_merge_then_split_differs_from_identity():
    hi = BlWeb(Composition((1, 1)), (Merge(0), Split(0, 1, 1)))
    assert not maps_equal(web_to_map(hi, 3), web_to_map(BlWeb.identity((1, 1)), 3))


def test_wedge_space_indexing():
    V = WedgeSpace(3, (1, 1))
    assert V.dim == 9
    for i, b in enumerate(V.basis):
        assert V.index(b) == i


def test_oracle_rejects_thick_strands():
    with pytest.raises((OracleSizeError, ValueError)):
        annular_trace(circles((4,)), 3)
