"""Tour of the bundled knot table: dessin counts, quasi-trees, bracket,
Jones polynomial, and the determinant via every applicable route.

Run:  python3 demos/table_tour.py
"""

from dessinlink import (
    build_dessin,
    dessin_counts,
    determinant,
    bracket_via_dessin,
    jones_polynomial,
    knot_table,
    quasi_tree_counts,
    table_pd,
)


def main() -> None:
    for name in sorted(knot_table()):
        pd = table_pd(name)
        d = build_dessin(pd, 0)
        c = dessin_counts(d)
        s = quasi_tree_counts(d)
        rep = determinant(pd)
        jones = jones_polynomial(pd)
        print(f"=== {name} ===")
        print(f"  all-A dessin: v={c.v} e={c.e} f={c.f} genus={c.g}")
        print(f"  quasi-trees by genus: {list(s)}")
        print(f"  bracket: {bracket_via_dessin(pd).to_string('A')}")
        print(f"  Jones (writhe {jones.writhe}): {jones.to_string()}")
        print(f"  determinant {rep.value} via {sorted(rep.methods)}")
        if rep.skipped:
            for method, reason in sorted(rep.skipped.items()):
                print(f"    skipped {method}: {reason}")
        print()


if __name__ == "__main__":
    main()
