"""Checkerboard surfaces, exceptional crossings and boundary slopes."""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Color, Coloring, PlanarDiagram, crossing_signs, is_alternating, is_reduced
from .errors import NotAlternating, NotReduced
from .state_sum import State


def seifert_merged_corner(d: PlanarDiagram, c: int) -> int:
    """A corner (0 or 1) of the diagonal pair the oriented smoothing joins at crossing ``c``.

    The orientation-respecting smoothing is the A-smoothing (corners 1/3) at a
    positive crossing and the B-smoothing (corners 0/2) at a negative one.
    """
    return 1 if d.signs[c] > 0 else 0


def exceptional_crossings(d: PlanarDiagram, coloring: Coloring, color: Color) -> frozenset[int]:
    """Crossings where the two strands run parallel along the band of the ``color`` surface.

    The band of a checkerboard surface is coherently oriented exactly when the
    oriented smoothing separates that surface's two quadrants; so a crossing is
    exceptional when the oriented smoothing merges the quadrants of ``color``.
    """
    return frozenset(
        c for c in range(d.n)
        if coloring[d.corner_face[c][seifert_merged_corner(d, c)]] is color
    )


@dataclass(frozen=True)
class SlopeResult:
    slope: int
    contributions: tuple[int, ...]


def boundary_slope(d: PlanarDiagram, coloring: Coloring, color: Color) -> SlopeResult:
    """Linking of the surface's boundary push-off with the knot, summed crossing by crossing."""
    exc = exceptional_crossings(d, coloring, color)
    contrib = tuple(2 * d.signs[c] if c in exc else 0 for c in range(d.n))
    return SlopeResult(sum(contrib), contrib)


def checkerboard_slopes(d: PlanarDiagram, coloring: Coloring | None = None) -> tuple[int, int]:
    """(max, min) slope of the two checkerboard surfaces of a reduced alternating diagram.

    Both values are computed from exceptional crossings and compared against
    ``2 cr+`` and ``-2 cr-``; a mismatch is an AssertionError.
    """
    from .diagram import checkerboard_coloring

    if not is_alternating(d):
        raise NotAlternating("checkerboard slope formula needs an alternating diagram")
    if not is_reduced(d):
        raise NotReduced("checkerboard slope formula needs a reduced diagram")
    coloring = coloring or checkerboard_coloring(d)
    slopes = sorted(boundary_slope(d, coloring, col).slope for col in (Color.BLACK, Color.WHITE))
    _, plus, minus, _ = crossing_signs(d)
    if slopes != sorted([2 * plus, -2 * minus]):
        raise AssertionError(f"slopes {slopes} differ from (2cr+, -2cr-) = ({2 * plus}, {-2 * minus})")
    return slopes[1], slopes[0]


def layered_slope(d: PlanarDiagram, s: State) -> int:
    """Slope ``a - b + cr+ - cr-`` of the layered surface built on state ``s``."""
    from .errors import IncompleteState

    if len(s.choices) != d.n:
        raise IncompleteState(f"state assigns {len(s.choices)} of {d.n} crossings")
    _, plus, minus, _ = crossing_signs(d)
    return s.a - s.b + plus - minus
