"""Goeritz matrices and the knot signature via Gordon-Litherland."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .diagram import Color, Coloring, PlanarDiagram, checkerboard_coloring
from .errors import DegenerateColoring, NotSymmetric
from .surfaces import exceptional_crossings

Matrix = Sequence[Sequence[int]]


def eta(d: PlanarDiagram, coloring: Coloring, c: int) -> int:
    """Crossing type relative to the shading.

    -1 when the black quadrants are the ones the negative smoothing joins
    (corners 0/2), +1 when they are the positive smoothing's corners (1/3).
    """
    return -1 if coloring[d.corner_face[c][0]] is Color.BLACK else 1


@dataclass(frozen=True)
class GoeritzMatrix:
    rows: tuple[tuple[int, ...], ...]
    regions: tuple[int, ...]  # face indices R0, R1, ..., Rn; R0 is the outer face
    eta: tuple[int, ...]
    mu: int

    @property
    def size(self) -> int:
        return len(self.rows)


def goeritz_matrix(d: PlanarDiagram, coloring: Coloring | None = None) -> GoeritzMatrix:
    """Goeritz matrix on the bounded white regions.

    A crossing joining white regions ``R_i != R_j`` adds ``eta`` to both
    diagonal entries and ``-eta`` off the diagonal.  A crossing whose two white
    corners are the same region contributes nothing, which keeps every row of
    the full (R0-inclusive) matrix summing to zero.
    """
    coloring = coloring or checkerboard_coloring(d)
    whites = coloring.faces_of(Color.WHITE)
    if not whites:
        raise DegenerateColoring("no white region")
    if coloring[d.outer] is not Color.WHITE:
        raise DegenerateColoring("the outer face must be white")
    regions = [d.outer] + [f for f in whites if f != d.outer]
    index = {f: i - 1 for i, f in enumerate(regions)}
    size = len(regions) - 1
    g = [[0] * size for _ in range(size)]
    etas = tuple(eta(d, coloring, c) for c in range(d.n))
    for c in range(d.n):
        q = d.corner_face[c]
        w1, w2 = (q[1], q[3]) if coloring[q[0]] is Color.BLACK else (q[0], q[2])
        if w1 == w2:
            continue
        e = etas[c]
        i, j = index[w1], index[w2]
        for k in (i, j):
            if k >= 0:
                g[k][k] += e
        if i >= 0 and j >= 0:
            g[i][j] -= e
            g[j][i] -= e
    black_exc = exceptional_crossings(d, coloring, Color.BLACK)
    mu = sum(etas[c] for c in black_exc)
    return GoeritzMatrix(tuple(tuple(r) for r in g), tuple(regions), etas, mu)


def congruence_pivots(m: Matrix) -> list[Fraction]:
    """Diagonal of an exact congruence diagonalisation ``P^T M P``.

    Pivots on the largest-magnitude nonzero diagonal entry; when the diagonal
    of the remaining block is zero but an off-diagonal entry ``a_ij`` is not,
    row and column ``j`` are added to ``i`` first, making ``a_ii = 2 a_ij``.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for i in range(n):
        if len(a[i]) != n:
            raise NotSymmetric("matrix is not square")
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    live = list(range(n))
    pivots: list[Fraction] = []
    while live:
        k = max(live, key=lambda i: (abs(a[i][i]), -i))
        if a[k][k] == 0:
            pair = next(((i, j) for i in live for j in live if i != j and a[i][j] != 0), None)
            if pair is None:
                pivots.extend(Fraction(0) for _ in live)
                break
            i, j = pair
            for r in live:
                a[i][r] += a[j][r]
            for r in live:
                a[r][i] += a[r][j]
            k = i
        p = a[k][k]
        live.remove(k)
        for i in live:
            f = a[i][k] / p
            if f:
                for j in live:
                    a[i][j] -= f * a[k][j]
        for i in live:
            a[i][k] = a[k][i] = Fraction(0)
        pivots.append(p)
    return pivots


def symmetric_signature(m: Matrix) -> tuple[int, int]:
    """(signature, nullity) of a symmetric integer matrix, computed exactly."""
    piv = congruence_pivots(m)
    pos = sum(1 for p in piv if p > 0)
    neg = sum(1 for p in piv if p < 0)
    return pos - neg, len(piv) - pos - neg


def determinant(m: Matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SignatureResult:
    sigma_g: int
    mu: int
    sigma_k: int
    goeritz: GoeritzMatrix


def knot_signature(d: PlanarDiagram, coloring: Coloring | None = None) -> SignatureResult:
    """sigma(K) = sigma(G) - mu(D) for the shading with the outer face white."""
    g = goeritz_matrix(d, coloring)
    sg, _ = symmetric_signature(g.rows)
    return SignatureResult(sg, g.mu, sg - g.mu, g)
