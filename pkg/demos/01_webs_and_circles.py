"""Walk through a web, its bimodule and the circle decomposition of an annular closure.

Run with ``python demos/01_webs_and_circles.py``.
"""

from foamcalc.glnoracle import annular_trace, circle_value
from foamcalc.soergel import graded_dim_bimodule, graded_dim_formula
from foamcalc.webdecomp import qr_decompose
from foamcalc.webs import BlWeb, Composition, Merge, Split, closure, example_web_k11, shift_web


def main():
    w = example_web_k11()
    print(w)
    print(f"{w.source} -> {w.target}, {w.vertex_count()} vertices, shift {shift_web(w)}")

    # two independent counts of the same graded pieces
    print("chain count  ", graded_dim_bimodule(w, 4))
    print("Schur count  ", graded_dim_formula(w, 4))

    # a square on (1,2): merge, then split the other way
    square = BlWeb(Composition((1, 2)), (Merge(0), Split(0, 1, 2)))
    ann = closure(square)
    res = qr_decompose(ann)
    print("\nclosure of", square.layers)
    for c, coeff in res.signed().items():
        print(f"  ({coeff}) S_{c}")

    # at q = 1 the gl_N trace of the web must equal the weighted circle count
    for N in range(ann.k, ann.k + 3):
        predicted = sum(v.at_one() * circle_value(c, N) for c, v in res.signed().items())
        print(f"  N={N}: trace {annular_trace(ann, N)}, circles {predicted}")


if __name__ == "__main__":
    main()
