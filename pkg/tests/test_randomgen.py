import random

from knotslope.diagram import build_diagram
from knotslope.randomgen import gauss_to_pd, random_diagram, random_diagrams


def test_seeded_generation_is_reproducible():
    a = [str(d.code) for d in random_diagrams(7, 15, 6)]
    b = [str(d.code) for d in random_diagrams(7, 15, 6)]
    assert a == b
    assert a != [str(d.code) for d in random_diagrams(8, 15, 6)]


def test_crossing_range():
    rng = random.Random(1)
    ns = {random_diagram(rng, 5, 3).n for _ in range(40)}
    assert ns <= {3, 4, 5} and len(ns) == 3


def test_gauss_word_of_trefoil():
    # over/under alternates along 0 1 2 0 1 2
    code = gauss_to_pd([0, 1, 2, 0, 1, 2], [True, False, True], [-1, -1, -1])
    d = build_diagram(code)
    assert d.n == 3 and d.signs == (-1, -1, -1)
