"""Smoothings, state circles, the Kauffman bracket and the Jones polynomial.

The positive smoothing of a crossing is the bracket's A-smoothing, which joins
arms 0-1 and 2-3 (merging corners 1 and 3); the negative smoothing joins arms
0-3 and 1-2 (merging corners 0 and 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _kernels
from .diagram import PlanarDiagram, crossing_signs
from .errors import IncompleteState, TooManyCrossings
from .laurent import LaurentPolynomial

POSITIVE = True
NEGATIVE = False
DEFAULT_MAX_CROSSINGS = 16

_A_ARMS = ((0, 1), (2, 3))
_B_ARMS = ((0, 3), (1, 2))


def smoothing_arms(positive: bool) -> tuple[tuple[int, int], tuple[int, int]]:
    return _A_ARMS if positive else _B_ARMS


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class State:
    """A smoothing choice per crossing (True = positive/A) and its circles."""

    choices: tuple[bool, ...]
    circles: tuple[tuple[int, ...], ...]
    dart_circle: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.circles)

    @property
    def a(self) -> int:
        return sum(self.choices)

    @property
    def b(self) -> int:
        return len(self.choices) - self.a


def smooth(d: PlanarDiagram, choices: Sequence[bool]) -> State:
    """Split the diagram into state circles for the given smoothing choices."""
    if len(choices) != d.n:
        raise IncompleteState(f"state assigns {len(choices)} of {d.n} crossings")
    if d.n == 0:
        return State((), ((),), ())
    uf = _UnionFind(4 * d.n)
    for dart, p in enumerate(d.partner):
        uf.union(dart, p)
    for c, positive in enumerate(choices):
        for i, j in smoothing_arms(bool(positive)):
            uf.union(4 * c + i, 4 * c + j)
    roots: dict[int, int] = {}
    dart_circle = []
    members: list[list[int]] = []
    for dart in range(4 * d.n):
        r = uf.find(dart)
        if r not in roots:
            roots[r] = len(members)
            members.append([])
        members[roots[r]].append(dart)
        dart_circle.append(roots[r])
    return State(tuple(bool(x) for x in choices), tuple(tuple(m) for m in members), tuple(dart_circle))


def all_positive(d: PlanarDiagram) -> State:
    return smooth(d, [POSITIVE] * d.n)


def all_negative(d: PlanarDiagram) -> State:
    return smooth(d, [NEGATIVE] * d.n)


def is_adequate(d: PlanarDiagram, s: State) -> bool:
    """At every crossing the two replacement arcs lie on different circles."""
    for c, positive in enumerate(s.choices):
        (i, _), (k, _) = smoothing_arms(positive)
        if s.dart_circle[4 * c + i] == s.dart_circle[4 * c + k]:
            return False
    return True


def loop_value() -> LaurentPolynomial:
    """The value ``-A^2 - A^-2`` of a disjoint circle."""
    return LaurentPolynomial({2: -1, -2: -1}, "A")


def state_histogram(d: PlanarDiagram) -> np.ndarray:
    """``H[a, k]`` = number of states with ``a`` positive smoothings and ``k`` circles."""
    n = d.n
    counts = _kernels.circle_counts(d.partner, n)
    a = _kernels.popcounts(n)
    width = 2 * n + 2
    flat = np.bincount(a * width + counts, minlength=(n + 1) * width)
    return flat.reshape(n + 1, width)


def kauffman_bracket(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPolynomial:
    """Sum over all 2^n states of ``A^(a-b) (-A^2-A^-2)^(|s|-1)``."""
    if d.n > max_crossings:
        raise TooManyCrossings(f"{d.n} crossings exceeds the limit of {max_crossings}")
    if d.n == 0:
        return LaurentPolynomial.constant(1, "A")
    hist = state_histogram(d)
    delta = loop_value()
    powers = [LaurentPolynomial.constant(1, "A")]
    for _ in range(hist.shape[1]):
        powers.append(powers[-1] * delta)
    total = LaurentPolynomial({}, "A")
    for a in range(d.n + 1):
        for k in np.nonzero(hist[a])[0]:
            total = total + powers[k - 1].shift(2 * a - d.n) * int(hist[a, k])
    return total


def jones_from_bracket(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """``(-A)^(-3w) <D>`` with ``t = A^-4``; every exponent must be divisible by 4."""
    sign = -1 if writhe % 2 else 1
    normalized = bracket.shift(-3 * writhe) * sign
    return normalized.contract(-4, "t")


def jones_polynomial(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPolynomial:
    _, _, _, w = crossing_signs(d)
    return jones_from_bracket(kauffman_bracket(d, max_crossings), w)


def degree_bounds(d: PlanarDiagram) -> tuple[Fraction, Fraction]:
    """(upper, lower) bounds on the exponents of the Jones polynomial."""
    if d.n == 0:
        return Fraction(0), Fraction(0)
    _, plus, minus, _ = crossing_signs(d)
    s_plus = all_positive(d).count
    s_minus = all_negative(d).count
    upper = Fraction(2 * plus - minus + s_minus - 1, 2)
    lower = Fraction(plus - 2 * minus - s_plus + 1, 2)
    return upper, lower


def jones_degrees(p: LaurentPolynomial) -> tuple[int, int]:
    return p.min_degree(), p.max_degree()
