from __future__ import annotations

import functools
import sys

import pytest

from knotslope.diagram import PDCode, build_diagram, mirror, parse_pd, relabel
from knotslope.table import load_bundled_table

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"  # left-handed
KINKED_UNKNOT = "X(1,4,2,5) X(3,6,4,1) X(2,6,3,5)"
KINK = "X(1,2,2,1)"


def connected_sum(a: PDCode, b: PDCode, b_edge: int = 0) -> PDCode:
    """Splice the edge entering ``a``'s first walk dart with the edge entering ``b.walk[b_edge]``."""
    da, db = build_diagram(a), build_diagram(b)
    xs = [[("a", lab) for lab in x] for x in a.crossings]
    xs += [[("b", lab) for lab in x] for x in b.crossings]
    ai = da.walk[0]
    ao = da.partner[ai]
    bi = db.walk[b_edge]
    bo = db.partner[bi]
    xs[ai // 4][ai % 4] = "y"
    xs[ao // 4][ao % 4] = "x"
    xs[a.n + bi // 4][bi % 4] = "x"
    xs[a.n + bo // 4][bo % 4] = "y"
    return relabel(xs)


@functools.lru_cache(maxsize=None)
def table_entries():
    return tuple(load_bundled_table())


@functools.lru_cache(maxsize=None)
def table_diagrams():
    return {e.name: build_diagram(e.code) for e in table_entries()}


def reduced_alternating():
    from knotslope.diagram import is_alternating, is_reduced

    return {k: d for k, d in table_diagrams().items() if is_alternating(d) and is_reduced(d)}


@pytest.fixture
def trefoil():
    return build_diagram(parse_pd(TREFOIL))


@pytest.fixture
def right_trefoil():
    return build_diagram(mirror(parse_pd(TREFOIL)))


@pytest.fixture
def figure_eight():
    return table_diagrams()["4_1"]


@pytest.fixture
def empty():
    return build_diagram(parse_pd(""))


@pytest.fixture
def kink():
    return build_diagram(parse_pd(KINK))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.format_line(k))
