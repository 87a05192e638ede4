"""Chord diagrams, interlacement matrices, and characteristic polynomials."""

import random

import pytest
import sympy

from dessinlink.chord import (
    ChordDiagram,
    bareiss_det,
    char_poly,
    chords_to_text,
    intersection_matrix,
    parse_chords,
    quasi_counts_and_det,
    rotate,
    to_chord_diagram,
    to_dessin,
    unit_principal_minors,
)
from dessinlink.dessin import build_dessin, dessin_counts
from dessinlink.diagram import reduce_to_one_vertex, twist_pd
from dessinlink.poly import LaurentPoly

FIG8_WORD = "1 2 3 4 5 2 1 5 4 3"


def random_word(rng: random.Random, m: int):
    word = list(range(m)) * 2
    rng.shuffle(word)
    return ChordDiagram(word=tuple(word))


# ==========================================================================
# words and parsing
# ==========================================================================


def test_parse_and_canonical_relabeling():
    cd = parse_chords("7 3 7 3")
    assert cd.word == (0, 1, 0, 1)
    assert cd.m == 2
    assert chords_to_text(cd) == "1 2 1 2"


def test_parse_rejects_bad_words():
    with pytest.raises(ValueError):
        parse_chords("1 2 1")
    with pytest.raises(ValueError):
        parse_chords("1 1 2 2 2 2")


def test_round_trip_through_dessin():
    cd = parse_chords(FIG8_WORD)
    assert to_chord_diagram(to_dessin(cd)) == cd


def test_chord_word_of_reduced_twist():
    red = reduce_to_one_vertex(twist_pd(2, 3))
    cd = to_chord_diagram(build_dessin(red, 0))
    assert chords_to_text(cd) == FIG8_WORD


# ==========================================================================
# interlacement matrix
# ==========================================================================


def test_intersection_matrix_frozen():
    assert intersection_matrix(parse_chords("1 2 1 2")) == [[0, -1], [1, 0]]
    assert intersection_matrix(parse_chords("1 1 2 2")) == [[0, 0], [0, 0]]
    m = intersection_matrix(parse_chords(FIG8_WORD))
    assert m == [
        [0, 0, -1, -1, -1],
        [0, 0, -1, -1, -1],
        [1, 1, 0, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 1, 0, 0, 0],
    ]


def test_intersection_matrix_antisymmetric():
    rng = random.Random(3)
    for _ in range(20):
        cd = random_word(rng, rng.randint(1, 8))
        m = intersection_matrix(cd)
        for i in range(cd.m):
            for j in range(cd.m):
                assert m[i][j] == -m[j][i]


# ==========================================================================
# characteristic polynomial
# ==========================================================================


def test_char_poly_frozen():
    assert char_poly(parse_chords(FIG8_WORD)) == LaurentPoly({5: -1, 3: -6})
    assert char_poly(parse_chords("1 2 1 2")) == LaurentPoly({2: 1, 0: 1})
    assert char_poly(parse_chords("1 1")) == LaurentPoly({1: -1})


def test_char_poly_matches_sympy():
    rng = random.Random(17)
    x = sympy.Symbol("x")
    for _ in range(20):
        cd = random_word(rng, rng.randint(1, 8))
        mat = sympy.Matrix(intersection_matrix(cd))
        want = (mat - x * sympy.eye(cd.m)).det(method="berkowitz")
        want = sympy.Poly(sympy.expand(want), x).all_coeffs()
        got = char_poly(cd)
        coeffs = [got.coefficient(e) for e in range(cd.m, -1, -1)]
        assert [int(c) for c in want] == coeffs


def test_char_poly_basepoint_invariance():
    rng = random.Random(29)
    for _ in range(10):
        cd = random_word(rng, rng.randint(2, 7))
        base = char_poly(cd)
        for k in range(1, 2 * cd.m):
            assert char_poly(rotate(cd, k)) == base


def test_quasi_counts_frozen():
    s, det = quasi_counts_and_det(parse_chords(FIG8_WORD))
    assert s == (1, 6, 0)
    assert det == 5
    s2, det2 = quasi_counts_and_det(parse_chords("1 2 1 2"))
    assert s2 == (1, 1)
    assert det2 == 0


# ==========================================================================
# principal minors
# ==========================================================================


def test_unit_principal_minors_match_face_counts():
    rng = random.Random(59)
    for _ in range(6):
        cd = random_word(rng, rng.randint(1, 6))
        d = to_dessin(cd)
        minors = unit_principal_minors(cd)
        for mask, value in minors.items():
            edges = [i for i in range(cd.m) if mask >> i & 1]
            c = dessin_counts(d, edges)
            assert value in (0, 1)
            assert (value == 1) == (c.f == 1)


def test_bareiss_det():
    assert bareiss_det([]) == 1
    assert bareiss_det([[7]]) == 7
    assert bareiss_det([[1, 2], [3, 4]]) == -2
    rng = random.Random(71)
    for _ in range(15):
        n = rng.randint(1, 6)
        mat = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(mat) == int(sympy.Matrix(mat).det())
