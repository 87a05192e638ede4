"""Closed-form determinant laws on generated families.

Twist diagrams obey det = p*q - 1; pretzels with positive and negative
columns obey the product/harmonic-sum formula, cross-checked here against
the quasi-tree engine.  The weighted one-vertex expansion collapses each
class of parallel chords to a single binomial factor and still reproduces
the full bracket.

Run:  python3 demos/family_laws.py
"""

from dessinlink import (
    bracket_via_dessin,
    build_dessin,
    contract_parallel,
    determinant,
    pretzel_determinant,
    pretzel_pd,
    twist_pd,
    weighted_bracket,
)


def main() -> None:
    print("twist family: det(twist(p,q)) = p*q - 1")
    for p in range(1, 5):
        row = []
        for q in range(1, 5):
            value = determinant(twist_pd(p, q)).value
            assert value == p * q - 1
            row.append(f"{value:3d}")
        print(f"  p={p}: " + " ".join(row))

    print()
    params = (2, 3, -5)
    pd = pretzel_pd(params)
    closed = pretzel_determinant((2, 3), (5,))
    engine = determinant(pd).value
    print(f"pretzel {params}: closed form {closed}, engine {engine}")

    print()
    pd = twist_pd(2, 3)
    wd = contract_parallel(build_dessin(pd, 0))
    print(f"twist(2,3) contracted to {wd.dessin.n_edges} weighted chords "
          f"{list(wd.weights)}")
    full = bracket_via_dessin(pd)
    weighted = weighted_bracket(wd)
    print(f"  full bracket:     {full.to_string('A')}")
    print(f"  weighted bracket: {weighted.to_string('A')}")
    print(f"  equal: {full == weighted}")


if __name__ == "__main__":
    main()
