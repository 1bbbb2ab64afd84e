"""Regenerate src/knotslope/data/knots10.txt from the KnotInfo database.

Development-only: needs the ``database_knotinfo`` and ``networkx`` packages.

Every prime knot through 10 crossings is written with its KnotInfo PD code
and the expected alternating flag, signature, determinant and Jones
polynomial.  For reduced alternating knots whose Tait graph has a Whitney
flip giving a genuinely different diagram, the flipped diagram is added as
``<name>~1`` (a flype of the original), so slope agreement across two
diagrams of one knot can be tested.

    python3 scripts/build_table.py [--check]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import database_knotinfo
import networkx as nx

from knotslope.diagram import (
    Color,
    PDCode,
    build_diagram,
    checkerboard_coloring,
    is_alternating,
    is_reduced,
    relabel,
)
from knotslope.errors import KnotError
from knotslope.laurent import LaurentPolynomial
from knotslope.signature import eta
from knotslope.state_sum import all_negative, all_positive, jones_polynomial
from knotslope.table import format_expected, parse_table
from knotslope.verify import proof_shading

OUT = Path(__file__).resolve().parents[1] / "src" / "knotslope" / "data" / "knots10.txt"
HEADER = """\
# Prime knots through 10 crossings (PD codes from KnotInfo).
# Format: name: X(a,b,c,d) ... [expected values]
# Entries named <knot>~1 are a second reduced alternating diagram of <knot>,
# obtained by a Whitney flip of its Tait graph (a flype).
# Regenerate with scripts/build_table.py.
"""


def tait_graph(d, coloring):
    """Black faces as vertices; rotation[u] lists crossings counterclockwise around u."""
    rotation = {}
    ends = {}
    for f in coloring.faces_of(Color.BLACK):
        # the face walk keeps the face on its right, i.e. runs clockwise
        rotation[f] = [dart // 4 for dart in reversed(d.faces[f])]
    for c in range(d.n):
        q = d.corner_face[c]
        ends[c] = (q[1], q[3]) if coloring[q[1]] is Color.BLACK else (q[0], q[2])
    return rotation, ends


def medial_code(rotation, ends, over_on_black_corner: bool, name=None) -> PDCode:
    """Alternating diagram of a plane graph given by its rotation system.

    Around crossing ``e = (u, v)`` the arms are, counterclockwise: the side
    of face v ending at e, the side of u leaving e, the side of u ending at
    e, the side of v leaving e.
    """
    def nbr(u, e, step):
        r = rotation[u]
        return r[(r.index(e) + step) % len(r)]

    arms = {}
    for e, (u, v) in ends.items():
        arms[e] = [(v, nbr(v, e, -1)), (u, e), (u, nbr(u, e, -1)), (v, e)]
    where = {}
    for e, a in arms.items():
        for p, lab in enumerate(a):
            where.setdefault(lab, []).append((e, p))
    # orient by walking straight through crossings from crossing 0, arm 1
    first = min(arms)
    incoming = set()
    e, p = first, 1 if over_on_black_corner else 0
    while (e, p) not in incoming:
        incoming.add((e, p))
        out = (p + 2) % 4
        lab = arms[e][out]
        e, p = next(x for x in where[lab] if x != (e, out))
    under = (1, 3) if over_on_black_corner else (0, 2)
    crossings = []
    for e in sorted(arms):
        k = next(p for p in under if (e, p) in incoming)
        crossings.append(tuple(arms[e][(k + i) % 4] for i in range(4)))
    return relabel(crossings, name)


def _components(rotation, ends, u, v):
    g = nx.MultiGraph()
    g.add_nodes_from(w for w in rotation if w not in (u, v))
    for e, (a, b) in ends.items():
        if u not in (a, b) and v not in (a, b):
            g.add_edge(a, b, key=e)
    return [set(c) for c in nx.connected_components(g)]


def whitney_flips(rotation, ends):
    """Rotation systems obtained by flipping one side of a 2-separation."""
    verts = sorted(rotation)
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            comps = _components(rotation, ends, u, v)
            if len(comps) < 2:
                continue
            for comp in comps:
                block = {e for e, (a, b) in ends.items() if a in comp or b in comp}
                new = {}
                for w, r in rotation.items():
                    if w in comp:
                        new[w] = r[::-1]
                    elif w in (u, v):
                        new[w] = _reverse_block(r, block)
                    else:
                        new[w] = list(r)
                if new is not None:
                    yield new


def _reverse_block(r, block):
    """Reverse the cyclically contiguous run of ``block`` edges inside rotation ``r``."""
    n = len(r)
    inside = [x in block for x in r]
    if all(inside) or not any(inside):
        return list(r)
    start = next(i for i in range(n) if inside[i] and not inside[i - 1])
    run = []
    i = start
    while inside[i % n]:
        run.append(r[i % n])
        i += 1
    if len(run) != sum(inside):
        return list(r)  # not contiguous; the flip is rejected later by planarity
    out = list(r)
    for k, x in enumerate(reversed(run)):
        out[(start + k) % n] = x
    return out


def _face_graphs(d):
    col = checkerboard_coloring(d)
    graphs = []
    for color in (Color.BLACK, Color.WHITE):
        g = nx.MultiGraph()
        g.add_nodes_from(col.faces_of(color))
        for c in range(d.n):
            q = d.corner_face[c]
            a, b = (q[1], q[3]) if col[q[1]] is color else (q[0], q[2])
            g.add_edge(a, b)
        graphs.append(g)
    return graphs


def different_diagram(d1, d2) -> bool:
    b1, w1 = _face_graphs(d1)
    b2, w2 = _face_graphs(d2)
    same = (nx.is_isomorphic(b1, b2) and nx.is_isomorphic(w1, w2)) or \
           (nx.is_isomorphic(b1, w2) and nx.is_isomorphic(w1, b2))
    return not same


def alternate_diagram(d, name):
    """A flype-equivalent reduced alternating diagram not isomorphic to ``d``, or None."""
    pd_, col = proof_shading(d)
    over = eta(pd_, col, 0) < 0
    rotation, ends = tait_graph(pd_, col)
    v0 = jones_polynomial(d)
    base = build_diagram(medial_code(rotation, ends, over, name))
    if jones_polynomial(base) != v0:
        raise AssertionError(f"{name}: Tait reconstruction changed the Jones polynomial")
    for rot in whitney_flips(rotation, ends):
        try:
            alt = build_diagram(medial_code(rot, ends, over, name))
        except KnotError:
            continue
        if not (is_alternating(alt) and is_reduced(alt)):
            continue
        if jones_polynomial(alt) != v0 or not different_diagram(d, alt):
            continue
        return alt
    return None


def knotinfo_entries(max_crossings: int = 10):
    rows = database_knotinfo.link_list()[1:]
    for k in rows:
        if k["name"] == "0_1" or int(k["crossing_number"]) > max_crossings:
            continue
        crossings = tuple(tuple(x) for x in json.loads(k["pd_notation"]))
        expected = {
            "crossings": int(k["crossing_number"]),
            "alternating": k["alternating"] == "Y",
            "sigma": int(k["signature"]),
            "det": int(k["determinant"]),
            "jones": LaurentPolynomial.parse(k["jones_polynomial"], "t"),
        }
        yield k["name"], PDCode(crossings, k["name"]), expected


def validate(d, expected) -> None:
    """Internal consistency gates run before an entry is written."""
    if d.num_faces != d.n + 2:
        raise AssertionError(f"{d.name}: face count")
    if is_alternating(d) != expected["alternating"]:
        raise AssertionError(f"{d.name}: alternating flag disagrees with the source")
    if expected["alternating"]:
        if not is_reduced(d):
            raise AssertionError(f"{d.name}: alternating diagram is not reduced")
        if all_positive(d).count + all_negative(d).count != d.n + 2:
            raise AssertionError(f"{d.name}: |S+| + |S-| != n + 2")
    if jones_polynomial(d) != expected["jones"]:
        raise AssertionError(f"{d.name}: Jones polynomial disagrees with the source")


def build_lines() -> list[str]:
    lines = [HEADER.rstrip("\n")]
    for name, code, expected in knotinfo_entries():
        d = build_diagram(code)
        validate(d, expected)
        lines.append(f"{name}: {code} {format_expected(expected)}")
        if expected["alternating"]:
            alt = alternate_diagram(d, f"{name}~1")
            if alt is not None:
                validate(alt, expected)
                lines.append(f"{name}~1: {alt.code} {format_expected(expected)}")
    return lines


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true", help="compare with the committed table instead of writing")
    args = ap.parse_args(argv)
    text = "\n".join(build_lines()) + "\n"
    if args.check:
        same = OUT.read_text(encoding="utf-8") == text
        print("table up to date" if same else "table differs from a fresh build")
        return 0 if same else 1
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(text, encoding="utf-8")
    entries = parse_table(text)
    print(f"wrote {len(entries)} entries to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
