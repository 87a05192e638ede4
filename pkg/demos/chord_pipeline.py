"""From a twist-knot diagram to its determinant through the chord pipeline.

The (2,3)-twist knot (a figure-8 diagram) is reduced to a diagram whose
all-A state has a single circle; the resulting one-vertex dessin is a
chord diagram whose interlacement matrix packs every spanning
quasi-tree count into one characteristic polynomial.

Run:  python3 demos/chord_pipeline.py
"""

from dessinlink import (
    build_dessin,
    char_poly,
    chords_to_text,
    dessin_counts,
    intersection_matrix,
    pd_to_text,
    quasi_counts_and_det,
    reduce_to_one_vertex,
    to_chord_diagram,
    twist_pd,
)


def main() -> None:
    pd = twist_pd(2, 3)
    print(f"(2,3)-twist diagram: {pd_to_text(pd)}")
    c = dessin_counts(build_dessin(pd, 0))
    print(f"  all-A dessin: v={c.v} e={c.e} f={c.f} genus={c.g}")

    red = reduce_to_one_vertex(pd)
    c = dessin_counts(build_dessin(red, 0))
    print(f"reduced diagram: {pd_to_text(red)}")
    print(f"  one-vertex dessin: v={c.v} e={c.e} f={c.f} genus={c.g}")

    cd = to_chord_diagram(build_dessin(red, 0))
    print(f"chord word: {chords_to_text(cd)}")
    print("interlacement matrix:")
    for row in intersection_matrix(cd):
        print("  " + " ".join(f"{x:2d}" for x in row))

    poly = char_poly(cd)
    s, det = quasi_counts_and_det(cd)
    print(f"characteristic polynomial: {poly.to_string('x')}")
    print(f"quasi-tree counts {list(s)}, alternating sum -> determinant {det}")


if __name__ == "__main__":
    main()
