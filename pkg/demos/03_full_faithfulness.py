"""Compare foam-side and bimodule-side hom dimensions for a few small webs."""

from foamcalc.rho import verify_fully_faithful
from foamcalc.webs import BlWeb, Composition, Merge, Split

WEBS = {
    "strands (1,1)": BlWeb.identity((1, 1)),
    "merge (1,1)": BlWeb(Composition((1, 1)), (Merge(0),)),
    "digon on (2)": BlWeb(Composition((2,)), (Split(0, 1, 1), Merge(0))),
}


def main():
    for name, w in WEBS.items():
        targets = [v for v in WEBS.values() if (v.source, v.target) == (w.source, w.target)]
        if w.source == w.target and w.layers:
            targets.append(BlWeb.identity(w.source))
        report = verify_fully_faithful(w, targets, max_degree=4)
        print(f"{name}: {'equal' if report.ok else 'MISMATCH'} in {report.seconds:.2f}s")
        for target, d, foam_dim, hom_dim in report.rows:
            print(f"  -> {target.layers or 'id'} deg {d}: foams {foam_dim}, bimodule maps {hom_dim}")


if __name__ == "__main__":
    main()
