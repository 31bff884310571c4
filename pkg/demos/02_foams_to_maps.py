"""Build a few foams as generator words and look at the bimodule maps they induce."""

from foamcalc.foams import (
    DigonBirth, DigonDeath, Dot, FoamWord, Unzip, Zip, annular_reduce, bend, capped_word, degree,
)
from foamcalc.rho import rho_by_composition, rho_foam
from foamcalc.soergel import adjunction_transpose
from foamcalc.symfun import SymPoly, elementary_sym
from foamcalc.webs import BlWeb, Composition, Merge, Split


def show(title, word):
    phi = rho_foam(word)
    print(f"{title}: degree {degree(word)}")
    for key, img in phi.images.items():
        print(f"  basis {key} -> {dict((k, str(v)) for k, v in img.items())}")
    # same map generator by generator and as a composite
    assert phi.vector() == rho_by_composition(word).vector()


def main():
    x = elementary_sym(1, 1)
    strands = BlWeb.identity((1, 1))
    show("zip", FoamWord(strands, (Zip(0, 0),)))
    show("dotted diabolo", FoamWord(strands, (Zip(0, 0), Dot(1, 0, elementary_sym(2, 1)), Unzip(0))))
    show("bubble with x", FoamWord(BlWeb.identity((2,)), (DigonBirth(0, 0, 1, 1), Dot(1, 0, x), DigonDeath(0))))

    # bending a vertex across the hom is the adjunction on the algebra side
    f = FoamWord(strands, (Zip(0, 0),))
    same = rho_foam(bend(f)).vector() == adjunction_transpose(rho_foam(f)).vector()
    print("bend agrees with adjunction:", same)

    # a capped annular foam reduces to decorated disks
    gamma = BlWeb(Composition((1, 1, 1)), (Merge(0), Merge(0), Split(0, 1, 2)))
    word = capped_word(gamma, [x * x, SymPoly.one(1), x])
    red = annular_reduce(word)
    print("\ncapped foam steps:", red.steps)
    print("disk polynomial:", red.polynomial)


if __name__ == "__main__":
    main()
