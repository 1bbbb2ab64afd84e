"""Seeded random knot diagrams by rejection sampling.

A candidate is a random signed Gauss word: every crossing is visited twice
along the knot, one visit chosen as the underpass, and each crossing gets a
random sign.  Candidates whose face count is not ``n + 2`` are rejected.
"""

from __future__ import annotations

import random

from .diagram import PDCode, PlanarDiagram, build_diagram, relabel
from .errors import KnotError


def gauss_to_pd(word: list[int], under_first: list[bool], signs: list[int]) -> PDCode:
    """PD code of a signed Gauss word (``word[k]`` is the crossing met at visit ``k``).

    Edge ``k`` runs from visit ``k`` to visit ``k+1``, so visit ``k`` is entered
    by edge ``k-1`` and left by edge ``k``.
    """
    m = len(word)
    visits: dict[int, list[int]] = {}
    for k, c in enumerate(word):
        visits.setdefault(c, []).append(k)
    crossings = []
    for c in sorted(visits):
        i, j = visits[c]
        u, o = (i, j) if under_first[c] else (j, i)
        in_u, out_u = (u - 1) % m, u
        in_o, out_o = (o - 1) % m, o
        if signs[c] > 0:
            crossings.append((in_u, out_o, out_u, in_o))
        else:
            crossings.append((in_u, in_o, out_u, out_o))
    return relabel(crossings)


def random_candidate(rng: random.Random, n: int) -> PDCode:
    word = [c for c in range(n) for _ in range(2)]
    rng.shuffle(word)
    under_first = [rng.random() < 0.5 for _ in range(n)]
    signs = [rng.choice((1, -1)) for _ in range(n)]
    return gauss_to_pd(word, under_first, signs)


def random_diagram(rng: random.Random, max_crossings: int = 8, min_crossings: int = 1,
                   max_tries: int = 1_000_000) -> PlanarDiagram:
    """A planar single-component diagram with a uniformly chosen crossing number."""
    n = rng.randint(min_crossings, max_crossings)
    for _ in range(max_tries):
        code = random_candidate(rng, n)
        try:
            return build_diagram(code)
        except KnotError:
            continue
    raise RuntimeError(f"no planar diagram with {n} crossings after {max_tries} tries")


def random_diagrams(seed: int, count: int, max_crossings: int = 8, min_crossings: int = 1) -> list[PlanarDiagram]:
    rng = random.Random(seed)
    return [random_diagram(rng, max_crossings, min_crossings) for _ in range(count)]
