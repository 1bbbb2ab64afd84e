import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from knotslope.diagram import build_diagram, mirror
from knotslope.errors import IncompleteState, TooManyCrossings, ZeroPolynomial
from knotslope.laurent import LaurentPolynomial as L
from knotslope.randomgen import random_diagram
from knotslope.state_sum import (
    all_negative,
    all_positive,
    degree_bounds,
    is_adequate,
    jones_degrees,
    jones_polynomial,
    kauffman_bracket,
    smooth,
)

seeds = st.integers(0, 2**32 - 1)


def test_empty_diagram(empty):
    s = smooth(empty, [])
    assert s.count == 1 and is_adequate(empty, s)
    assert kauffman_bracket(empty) == 1
    assert jones_polynomial(empty) == 1
    assert degree_bounds(empty) == (0, 0)


def test_kink(kink):
    counts = sorted((smooth(kink, [x]).count, x) for x in (True, False))
    assert [c for c, _ in counts] == [1, 2]
    one_circle = counts[0][1]
    assert not is_adequate(kink, smooth(kink, [one_circle]))
    assert kauffman_bracket(kink) == L({-3: -1}, "A")
    assert jones_polynomial(kink) == 1


def test_trefoil_states(trefoil):
    assert all_positive(trefoil).count == 3
    assert all_negative(trefoil).count == 2
    assert is_adequate(trefoil, all_positive(trefoil))
    assert is_adequate(trefoil, all_negative(trefoil))


def test_trefoil_jones(trefoil):
    v = jones_polynomial(trefoil)
    assert v == L.parse("-t^-4 + t^-3 + t^-1")
    assert jones_degrees(v) == (-4, -1)
    assert degree_bounds(trefoil) == (Fraction(-1), Fraction(-4))


def test_figure_eight(figure_eight):
    v = jones_polynomial(figure_eight)
    assert v == L.parse("t^-2 - t^-1 + 1 - t + t^2")
    assert v == v.invert_variable()
    assert jones_degrees(v) == (-2, 2)
    assert degree_bounds(figure_eight) == (2, -2)


def test_jones_degrees_of_constant():
    assert jones_degrees(L.constant(1)) == (0, 0)
    with pytest.raises(ZeroPolynomial):
        jones_degrees(L())


def test_incomplete_state(trefoil):
    with pytest.raises(IncompleteState):
        smooth(trefoil, [True, False])


def test_crossing_cap(trefoil):
    with pytest.raises(TooManyCrossings):
        kauffman_bracket(trefoil, max_crossings=2)


@settings(max_examples=40, deadline=None)
@given(seeds, st.data())
def test_single_flip_changes_circle_count_by_one(seed, data):
    d = random_diagram(random.Random(seed), 7)
    choices = data.draw(st.lists(st.booleans(), min_size=d.n, max_size=d.n))
    c = data.draw(st.integers(0, d.n - 1))
    flipped = list(choices)
    flipped[c] = not flipped[c]
    assert abs(smooth(d, choices).count - smooth(d, flipped).count) == 1


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_mirror_inverts_jones(seed):
    d = random_diagram(random.Random(seed), 7)
    m = build_diagram(mirror(d.code))
    assert jones_polynomial(m) == jones_polynomial(d).invert_variable()


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_degrees_within_bounds(seed):
    d = random_diagram(random.Random(seed), 8)
    lo, hi = jones_degrees(jones_polynomial(d))
    upper, lower = degree_bounds(d)
    assert lower <= lo and hi <= upper
    if is_adequate(d, all_negative(d)):
        assert hi == upper
    if is_adequate(d, all_positive(d)):
        assert lo == lower


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_circle_counts_match_union_find(seed):
    from knotslope.state_sum import state_histogram

    d = random_diagram(random.Random(seed), 6)
    hist = state_histogram(d)
    expect = {}
    for s in range(1 << d.n):
        choices = [(s >> c) & 1 == 1 for c in range(d.n)]
        key = (sum(choices), smooth(d, choices).count)
        expect[key] = expect.get(key, 0) + 1
    got = {(a, k): int(hist[a, k]) for a in range(hist.shape[0]) for k in range(hist.shape[1]) if hist[a, k]}
    assert got == expect
