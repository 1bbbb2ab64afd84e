"""Independent cross-checks: a recursive skein bracket and a Seifert-matrix signature."""

from __future__ import annotations

from functools import lru_cache

from .diagram import PlanarDiagram
from .errors import TooManyCrossings
from .laurent import LaurentPolynomial
from .seifert import braid_seifert_form, diagram_to_braid
from .signature import symmetric_signature

ORACLE_MAX_CROSSINGS = 10


def _resolve(matching: dict[int, int], c: int, pairs) -> tuple[tuple[tuple[int, int], ...], int]:
    """Join arm pairs of crossing ``c`` into the boundary matching; count closed loops."""
    m = dict(matching)
    loops = 0
    for i, j in pairs:
        x, y = 4 * c + i, 4 * c + j
        xe, ye = m.pop(x), m.pop(y)
        if xe == y:
            loops += 1
            continue
        m[xe], m[ye] = ye, xe
    key = tuple(sorted((a, b) for a, b in m.items() if a < b))
    return key, loops


def bracket_oracle(d: PlanarDiagram, max_crossings: int = ORACLE_MAX_CROSSINGS) -> LaurentPolynomial:
    """Kauffman bracket by resolving crossings one at a time.

    The partially smoothed diagram is remembered only through how the loose
    arms of the unresolved crossings are connected, so identical
    configurations are expanded once.
    """
    n = d.n
    if n > max_crossings:
        raise TooManyCrossings(f"{n} crossings exceeds the oracle limit of {max_crossings}")
    one = LaurentPolynomial.constant(1, "A")
    if n == 0:
        return one
    delta = LaurentPolynomial({2: -1, -2: -1}, "A")
    a_term = LaurentPolynomial.monomial(1, 1, "A")
    b_term = LaurentPolynomial.monomial(-1, 1, "A")

    @lru_cache(maxsize=None)
    def expand(c: int, key: tuple[tuple[int, int], ...]) -> LaurentPolynomial:
        if c == n:
            return one
        matching = {}
        for a, b in key:
            matching[a], matching[b] = b, a
        total = LaurentPolynomial({}, "A")
        for weight, pairs in ((a_term, ((0, 1), (2, 3))), (b_term, ((0, 3), (1, 2)))):
            nxt, loops = _resolve(matching, c, pairs)
            total = total + weight * delta ** loops * expand(c + 1, nxt)
        return total

    start = tuple(sorted((a, b) for a, b in enumerate(d.partner) if a < b))
    return expand(0, start).exact_div(delta)


def signature_oracle(d: PlanarDiagram, max_crossings: int = ORACLE_MAX_CROSSINGS) -> int:
    """Signature of ``V + V^T`` for a Seifert matrix of a braid form of the diagram."""
    if d.n > max_crossings:
        raise TooManyCrossings(f"{d.n} crossings exceeds the oracle limit of {max_crossings}")
    if d.n == 0:
        return 0
    word, _ = diagram_to_braid(d)
    sig, _ = symmetric_signature(braid_seifert_form(word))
    return sig
