"""PD codes and the oriented planar map of a knot diagram.

A crossing ``X(a,b,c,d)`` lists its four edge labels counterclockwise starting
from the incoming understrand, so positions 0 and 2 carry the understrand and
positions 1 and 3 the overstrand.  Darts are numbered ``4*crossing + position``.

Corner ``k`` of a crossing is the quadrant between arms ``k`` and ``k+1``
(counterclockwise).  Corners 0/2 and 1/3 are the two diagonal pairs.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Sequence

from .errors import (
    ColoringInconsistent,
    LabelMultiplicity,
    LabelOutOfRange,
    MalformedSyntax,
    MultiComponent,
    NonPlanar,
)

_CROSSING = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")
_CROSSING_ANY = re.compile(r"X\([^)]*\)")
_NAME = re.compile(r"^\s*([^\s:#()]+)\s*:")


class Color(enum.Enum):
    BLACK = "black"
    WHITE = "white"

    def other(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]
    name: str | None = None

    @property
    def n(self) -> int:
        return len(self.crossings)

    def __str__(self) -> str:
        return " ".join("X({},{},{},{})".format(*x) for x in self.crossings)


def _strip_comment(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_pd(text: str) -> PDCode:
    """Parse ``[name:] X(a,b,c,d) X(...) ...`` with ``#`` comments.

    >>> parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").n
    3
    """
    body = _strip_comment(text)
    name = None
    m = _NAME.match(body)
    if m:
        name = m.group(1)
        body = body[m.end():]
    crossings = []
    pos = 0
    for tok in _CROSSING_ANY.finditer(body):
        gap = body[pos:tok.start()]
        if gap.strip():
            raise MalformedSyntax(f"unexpected text {gap.strip()!r}")
        cm = _CROSSING.fullmatch(tok.group(0))
        if cm is None:
            raise MalformedSyntax(f"crossing {tok.group(0)!r} must have four unsigned integer labels")
        crossings.append(tuple(int(g) for g in cm.groups()))
        pos = tok.end()
    if body[pos:].strip():
        raise MalformedSyntax(f"unexpected text {body[pos:].strip()!r}")
    code = PDCode(tuple(crossings), name)
    validate_pd(code)
    return code


def validate_pd(code: PDCode) -> None:
    """Check label range, multiplicity and that the labels trace a single component."""
    n = code.n
    counts: dict[int, int] = {}
    for x in code.crossings:
        if len(x) != 4:
            raise MalformedSyntax(f"crossing {x} does not have four labels")
        for lab in x:
            if not 1 <= lab <= 2 * n:
                raise LabelOutOfRange(f"label {lab} outside 1..{2 * n}")
            counts[lab] = counts.get(lab, 0) + 1
    for lab in range(1, 2 * n + 1):
        if counts.get(lab, 0) != 2:
            raise LabelMultiplicity(f"label {lab} appears {counts.get(lab, 0)} times")
    _trace(code.crossings)


def _partners(crossings: Sequence[Sequence[int]]) -> list[int]:
    where: dict[int, list[int]] = {}
    for c, x in enumerate(crossings):
        for p, lab in enumerate(x):
            where.setdefault(lab, []).append(4 * c + p)
    partner = [0] * (4 * len(crossings))
    for a, b in where.values():
        partner[a], partner[b] = b, a
    return partner


def _trace(crossings: Sequence[Sequence[int]]) -> list[int]:
    """Incoming darts in knot order, starting at dart 0 (crossing 0, incoming under).

    Raises MultiComponent when the walk closes before visiting every crossing twice.
    """
    n = len(crossings)
    if n == 0:
        return []
    partner = _partners(crossings)
    order = []
    d = 0
    while True:
        if d % 4 == 2:
            raise MalformedSyntax(
                f"understrand of crossing {d // 4} is entered at position 2; "
                "position 0 must be the incoming understrand"
            )
        order.append(d)
        out = 4 * (d // 4) + (d % 4 + 2) % 4
        d = partner[out]
        if d == 0:
            break
        if len(order) > 2 * n:
            raise MalformedSyntax("orientation walk does not close")
    if len(order) != 2 * n:
        raise MultiComponent(f"labels trace a component of {len(order)} of {2 * n} edges")
    if len(set(order)) != len(order):
        raise MalformedSyntax("orientation walk revisits a dart")
    return order


@dataclass(frozen=True)
class PlanarDiagram:
    """Oriented combinatorial map of a knot diagram; immutable.

    ``faces`` lists dart cycles of the face permutation (cross the edge, then
    turn to the next arm counterclockwise).  ``corner_face[c][k]`` is the face
    occupying corner ``k`` of crossing ``c``.
    """

    code: PDCode
    partner: tuple[int, ...]
    incoming: tuple[bool, ...]
    walk: tuple[int, ...]
    faces: tuple[tuple[int, ...], ...]
    dart_face: tuple[int, ...]
    outer: int
    signs: tuple[int, ...]
    _corner: tuple[tuple[int, int, int, int], ...] = field(repr=False, default=())

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def name(self) -> str | None:
        return self.code.name

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def corner_face(self) -> tuple[tuple[int, int, int, int], ...]:
        return self._corner

    def label(self, dart: int) -> int:
        return self.code.crossings[dart // 4][dart % 4]

    def over_incoming_position(self, c: int) -> int:
        return 1 if self.incoming[4 * c + 1] else 3

    def with_outer(self, outer: int) -> PlanarDiagram:
        if not 0 <= outer < self.num_faces:
            raise ValueError(f"face {outer} out of range 0..{self.num_faces - 1}")
        return PlanarDiagram(self.code, self.partner, self.incoming, self.walk, self.faces,
                             self.dart_face, outer, self.signs, self._corner)


def build_diagram(code: PDCode, outer: int | None = None) -> PlanarDiagram:
    """Assemble darts, faces, orientation and crossing signs from a PD code."""
    n = code.n
    if n == 0:
        d = PlanarDiagram(code, (), (), (), ((), ()), (), 0, (), ())
        return d if outer is None else d.with_outer(outer)
    validate_pd(code)
    walk = _trace(code.crossings)
    partner = _partners(code.crossings)
    incoming = [False] * (4 * n)
    for d in walk:
        incoming[d] = True

    def phi(d: int) -> int:
        p = partner[d]
        return 4 * (p // 4) + (p % 4 + 1) % 4

    # Discovery order: darts in knot order (incoming dart, then the outgoing one).
    visit = []
    for d in walk:
        visit.append(d)
        visit.append(4 * (d // 4) + (d % 4 + 2) % 4)
    dart_face = [-1] * (4 * n)
    faces = []
    for start in visit:
        if dart_face[start] >= 0:
            continue
        cyc = []
        d = start
        while dart_face[d] < 0:
            dart_face[d] = len(faces)
            cyc.append(d)
            d = phi(d)
        faces.append(tuple(cyc))
    if len(faces) != n + 2:
        raise NonPlanar(f"{len(faces)} faces on {n} crossings (a planar diagram has {n + 2})")

    signs = tuple(1 if incoming[4 * c + 3] else -1 for c in range(n))
    corner = tuple(
        tuple(dart_face[4 * c + (k + 1) % 4] for k in range(4)) for c in range(n)
    )
    d = PlanarDiagram(code, tuple(partner), tuple(incoming), tuple(walk), tuple(faces),
                      tuple(dart_face), 0, signs, corner)
    return d if outer is None else d.with_outer(outer)


def diagram_from_text(text: str, outer: int | None = None) -> PlanarDiagram:
    return build_diagram(parse_pd(text), outer)


def crossing_signs(d: PlanarDiagram) -> tuple[tuple[int, ...], int, int, int]:
    """Per-crossing signs, cr+, cr-, writhe."""
    plus = sum(1 for s in d.signs if s > 0)
    minus = d.n - plus
    return d.signs, plus, minus, plus - minus


def is_alternating(d: PlanarDiagram) -> bool:
    overs = [dart % 2 == 1 for dart in d.walk]
    return all(overs[i] != overs[(i + 1) % len(overs)] for i in range(len(overs)))


def is_reduced(d: PlanarDiagram) -> bool:
    """No crossing meets one face in two opposite corners (no nugatory crossing)."""
    return all(q[0] != q[2] and q[1] != q[3] for q in d.corner_face)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[Color, ...]

    def __getitem__(self, face: int) -> Color:
        return self.colors[face]

    def faces_of(self, color: Color) -> list[int]:
        return [f for f, c in enumerate(self.colors) if c is color]

    def corner_colors(self, d: PlanarDiagram, c: int) -> tuple[Color, ...]:
        return tuple(self.colors[f] for f in d.corner_face[c])


def checkerboard_coloring(d: PlanarDiagram) -> Coloring:
    """The 2-coloring with the outer face White; faces across an edge differ."""
    if d.n == 0:
        cols = [Color.BLACK, Color.BLACK]
        cols[d.outer] = Color.WHITE
        return Coloring(tuple(cols))
    adj: dict[int, set[int]] = {f: set() for f in range(d.num_faces)}
    for dart in range(4 * d.n):
        f, g = d.dart_face[dart], d.dart_face[4 * (dart // 4) + (dart % 4 + 1) % 4]
        if f == g:
            raise ColoringInconsistent(f"face {f} lies on both sides of an edge")
        adj[f].add(g)
        adj[g].add(f)
    cols: list[Color | None] = [None] * d.num_faces
    cols[d.outer] = Color.WHITE
    stack = [d.outer]
    while stack:
        f = stack.pop()
        for g in adj[f]:
            want = cols[f].other()
            if cols[g] is None:
                cols[g] = want
                stack.append(g)
            elif cols[g] is not want:
                raise ColoringInconsistent(f"faces {f} and {g} cannot be colored apart")
    if any(c is None for c in cols):
        raise ColoringInconsistent("face adjacency graph is disconnected")
    return Coloring(tuple(cols))


def mirror(code: PDCode) -> PDCode:
    """Swap over and under at every crossing; the new tuple starts at the old incoming overstrand."""
    if code.n == 0:
        return code
    d = build_diagram(code)
    out = []
    for c, x in enumerate(code.crossings):
        k = d.over_incoming_position(c)
        out.append(tuple(x[(k + i) % 4] for i in range(4)))
    return PDCode(tuple(out), code.name)


def relabel(crossings: Sequence[Sequence[object]], name: str | None = None) -> PDCode:
    """Turn crossings whose arms carry arbitrary hashable edge ids into a PD code.

    Position 0 of every tuple must already be the incoming understrand.  Labels
    1..2n are assigned along the orientation walk from crossing 0.
    """
    ids = sorted({e for x in crossings for e in x}, key=repr)
    index = {e: i + 1 for i, e in enumerate(ids)}
    tmp = [tuple(index[e] for e in x) for x in crossings]
    walk = _trace(tmp)
    newlab = {}
    for k, dart in enumerate(walk):
        c, p = divmod(dart, 4)
        newlab[tmp[c][p]] = k + 1
    return PDCode(tuple(tuple(newlab[lab] for lab in x) for x in tmp), name)
