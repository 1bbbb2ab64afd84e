import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import KINK, TREFOIL, connected_sum
from knotslope.diagram import (
    Color,
    build_diagram,
    checkerboard_coloring,
    crossing_signs,
    diagram_from_text,
    is_alternating,
    is_reduced,
    mirror,
    parse_pd,
)
from knotslope.errors import (
    LabelMultiplicity,
    LabelOutOfRange,
    MalformedSyntax,
    MultiComponent,
    NonPlanar,
)
from knotslope.randomgen import random_diagram

seeds = st.integers(0, 2**32 - 1)


def rand(seed, max_crossings=6):
    return random_diagram(random.Random(seed), max_crossings)


def test_parse_trefoil():
    code = parse_pd(TREFOIL)
    assert code.n == 3
    assert code.crossings[0] == (1, 4, 2, 5)
    assert str(code) == TREFOIL


def test_parse_name_and_comments():
    code = parse_pd("3_1: X(1,4,2,5) X(3,6,4,1)  # first two\n X(5,2,6,3)")
    assert code.name == "3_1" and code.n == 3


def test_parse_empty_is_unknot():
    assert parse_pd("").n == 0
    assert parse_pd("  # nothing\n").n == 0


@pytest.mark.parametrize("text, err", [
    ("X(1,2,3)", MalformedSyntax),
    ("X(1,2,2,1) junk", MalformedSyntax),
    ("X(1,-2,2,1)", MalformedSyntax),
    ("X(1,2,2,3)", LabelOutOfRange),
    ("X(1,1,1,2)", LabelMultiplicity),
    ("X(1,2,3,4) X(3,4,1,2)", MultiComponent),
    ("X(1,2,5,4) X(3,6,4,1) X(5,2,6,3)", MultiComponent),
    ("X(2,1,4,5) X(3,6,4,1) X(5,2,6,3)", MalformedSyntax),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_pd(text)


def test_trefoil_faces(trefoil):
    assert trefoil.n == 3 and trefoil.num_faces == 5
    assert sorted(len(f) for f in trefoil.faces) == [2, 2, 2, 3, 3]


def test_corrupted_tuple_is_non_planar():
    # reflect one tuple (a,b,c,d) -> (a,d,c,b): same strands, wrong cyclic order.
    # Face counts of a connected 4-valent map have the parity of n, so 3 not 4.
    with pytest.raises(NonPlanar, match="3 faces on 3"):
        diagram_from_text("X(1,5,2,4) X(3,6,4,1) X(5,2,6,3)")


def test_empty_diagram(empty):
    assert empty.num_faces == 2
    assert crossing_signs(empty) == ((), 0, 0, 0)
    assert is_alternating(empty) and is_reduced(empty)
    col = checkerboard_coloring(empty)
    assert col[empty.outer] is Color.WHITE and col.faces_of(Color.BLACK) == [1 - empty.outer]


def test_signs_left_trefoil(trefoil, right_trefoil):
    assert crossing_signs(trefoil) == ((-1, -1, -1), 0, 3, -3)
    assert crossing_signs(right_trefoil)[1:] == (3, 0, 3)


def test_alternating_and_reduced(trefoil, kink):
    assert is_alternating(trefoil) and is_reduced(trefoil)
    assert not is_reduced(kink)
    t = parse_pd(TREFOIL)
    assert not is_alternating(build_diagram(connected_sum(t, mirror(t), 1)))
    assert is_alternating(build_diagram(connected_sum(t, mirror(t), 0)))


def test_trefoil_coloring(trefoil):
    col = checkerboard_coloring(trefoil)
    counts = sorted(len(col.faces_of(c)) for c in Color)
    assert counts == [2, 3]
    assert col[trefoil.outer] is Color.WHITE


def test_outer_face_selection(trefoil):
    for k in range(trefoil.num_faces):
        d = build_diagram(trefoil.code, k)
        assert d.outer == k
        assert checkerboard_coloring(d)[k] is Color.WHITE
    with pytest.raises(ValueError):
        build_diagram(trefoil.code, 5)


def test_default_outer_face_is_first_discovered(trefoil):
    assert trefoil.outer == 0 and trefoil.dart_face[0] == 0


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_random_diagram_map_invariants(seed):
    d = rand(seed)
    assert d.num_faces == d.n + 2
    assert sorted(x for f in d.faces for x in f) == list(range(4 * d.n))
    col = checkerboard_coloring(d)
    for dart in range(4 * d.n):
        left = d.dart_face[dart]
        right = d.dart_face[4 * (dart // 4) + (dart % 4 + 1) % 4]
        assert col[left] is not col[right]
    signs, plus, minus, w = crossing_signs(d)
    assert sum(signs) == w == plus - minus and abs(w) <= d.n


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_mirror_properties(seed):
    d = rand(seed)
    m = build_diagram(mirror(d.code))
    assert mirror(mirror(d.code)) == d.code
    _, p, q, w = crossing_signs(d)
    _, mp, mq, mw = crossing_signs(m)
    assert (mp, mq, mw) == (q, p, -w)
    assert is_alternating(m) == is_alternating(d)


def test_kinks_parse():
    d = diagram_from_text(KINK)
    assert d.n == 1 and d.num_faces == 3 and d.signs == (-1,)
    assert diagram_from_text("X(1,1,2,2)").signs == (1,)
