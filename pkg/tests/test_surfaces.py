import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import KINKED_UNKNOT, reduced_alternating, table_diagrams
from knotslope.diagram import Color, build_diagram, checkerboard_coloring, diagram_from_text, mirror
from knotslope.errors import IncompleteState, NotAlternating, NotReduced
from knotslope.randomgen import random_diagram
from knotslope.state_sum import State, all_negative, all_positive
from knotslope.surfaces import (
    boundary_slope,
    checkerboard_slopes,
    exceptional_crossings,
    layered_slope,
)


def test_trefoil_exceptional_sets(trefoil):
    col = checkerboard_coloring(trefoil)
    sets = {c: exceptional_crossings(trefoil, col, c) for c in Color}
    assert sorted(len(s) for s in sets.values()) == [0, 3]
    slopes = sorted(boundary_slope(trefoil, col, c).slope for c in Color)
    assert slopes == [-6, 0]


def test_figure_eight_exceptional_sets(figure_eight):
    col = checkerboard_coloring(figure_eight)
    for c in Color:
        exc = exceptional_crossings(figure_eight, col, c)
        assert len(exc) == 2 and len({figure_eight.signs[x] for x in exc}) == 1
    assert checkerboard_slopes(figure_eight) == (4, -4)


def test_slopes_of_trefoil_and_mirror(trefoil, right_trefoil):
    assert checkerboard_slopes(trefoil) == (0, -6)
    assert checkerboard_slopes(right_trefoil) == (6, 0)


def test_empty_diagram(empty):
    col = checkerboard_coloring(empty)
    assert all(boundary_slope(empty, col, c).slope == 0 for c in Color)
    assert checkerboard_slopes(empty) == (0, 0)


def test_contributions():
    d = table_diagrams()["5_2"]
    col = checkerboard_coloring(d)
    for c in Color:
        r = boundary_slope(d, col, c)
        assert sum(r.contributions) == r.slope
        exc = exceptional_crossings(d, col, c)
        assert all((v != 0) == (i in exc) for i, v in enumerate(r.contributions))
        assert set(r.contributions) <= {-2, 0, 2}


def test_layered_slope(trefoil):
    assert layered_slope(trefoil, all_positive(trefoil)) == 0
    assert layered_slope(trefoil, all_negative(trefoil)) == -6
    with pytest.raises(IncompleteState):
        layered_slope(trefoil, State((True,), ((0,),), (0,)))


def test_hypotheses_enforced(kink):
    with pytest.raises(NotReduced):
        checkerboard_slopes(kink)
    with pytest.raises(NotAlternating):
        checkerboard_slopes(diagram_from_text(KINKED_UNKNOT))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_complementarity_and_ranges(seed):
    d = random_diagram(random.Random(seed), 7)
    col = checkerboard_coloring(d)
    b = exceptional_crossings(d, col, Color.BLACK)
    w = exceptional_crossings(d, col, Color.WHITE)
    assert b | w == set(range(d.n)) and not b & w
    plus = sum(1 for s in d.signs if s > 0)
    for s in (all_positive(d), all_negative(d)):
        assert -2 * (d.n - plus) <= layered_slope(d, s) <= 2 * plus


def test_alternating_corpus_same_sign_and_layered_agreement():
    for name, d in reduced_alternating().items():
        col = checkerboard_coloring(d)
        for c in Color:
            exc = exceptional_crossings(d, col, c)
            assert len({d.signs[x] for x in exc}) <= 1, name
        assert checkerboard_slopes(d) == (layered_slope(d, all_positive(d)), layered_slope(d, all_negative(d))), name


def test_mirror_negates_and_swaps_slopes():
    for name in ("5_2", "7_6", "9_20"):
        d = table_diagrams()[name]
        hi, lo = checkerboard_slopes(d)
        assert checkerboard_slopes(build_diagram(mirror(d.code))) == (-lo, -hi)


def test_slopes_agree_across_alternative_diagrams():
    diagrams = table_diagrams()
    alternates = [k for k in diagrams if k.endswith("~1")]
    assert len(alternates) >= 10
    for alt in alternates:
        base = alt[:-2]
        assert checkerboard_slopes(diagrams[alt]) == checkerboard_slopes(diagrams[base]), alt
