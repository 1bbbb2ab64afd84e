"""Seifert circles, Vogel moves, braid words and the braid Seifert form.

Vogel moves (a Reidemeister II move between two edges of different Seifert
circles that run the same way around a common face) make the diagram braided:
its Seifert circles become coherently nested and the Seifert graph a path.
The braid word is then read off along a ray that meets every circle once.
"""

from __future__ import annotations

from collections import defaultdict
import heapq

from .diagram import PlanarDiagram, build_diagram, relabel
from .state_sum import State, smooth

MAX_VOGEL_MOVES = 500

BraidWord = list[tuple[int, int]]  # (column, sign); column i joins strands i and i+1


def seifert_state(d: PlanarDiagram) -> State:
    """The oriented smoothing: positive at positive crossings, negative at negative ones."""
    return smooth(d, [s > 0 for s in d.signs])


def _find_defect(d: PlanarDiagram, st: State) -> tuple[int, int] | None:
    for face in d.faces:
        seen: dict[tuple[int, bool], int] = {}
        for dart in face:
            key = (st.dart_circle[dart], not d.incoming[dart])
            for (circ, along), other in seen.items():
                if circ != key[0] and along == key[1]:
                    return other, dart
            seen.setdefault(key, dart)
    return None


def vogel_move(d: PlanarDiagram, d1: int, d2: int) -> PlanarDiagram:
    """Push the edge of dart ``d1`` over the edge of dart ``d2`` inside their common face."""
    along = not d.incoming[d1]
    out1, in1 = (d1, d.partner[d1]) if along else (d.partner[d1], d1)
    out2, in2 = (d2, d.partner[d2]) if along else (d.partner[d2], d2)
    xs = [list(x) for x in d.code.crossings]
    s1, s2, s3, t1, t2, t3 = (f"v{i}" for i in range(6))
    for dart, lab in ((out1, s1), (in1, s3), (out2, t1), (in2, t3)):
        xs[dart // 4][dart % 4] = lab
    if along:
        xs += [[t2, s1, t3, s2], [t1, s3, t2, s2]]
    else:
        xs += [[t2, s2, t3, s1], [t1, s2, t2, s3]]
    return build_diagram(relabel(xs, d.name))


def braided(d: PlanarDiagram, max_moves: int = MAX_VOGEL_MOVES) -> PlanarDiagram:
    """Apply Vogel moves until no face has an incoherent pair of Seifert circles."""
    for _ in range(max_moves):
        defect = _find_defect(d, seifert_state(d))
        if defect is None:
            return d
        d = vogel_move(d, *defect)
    raise RuntimeError(f"diagram not braided after {max_moves} Vogel moves")


def _smoothing_exit(sign: int, p: int) -> int:
    """Arm joined to arm ``p`` by the oriented smoothing."""
    pairs = {0: 1, 1: 0, 2: 3, 3: 2} if sign > 0 else {0: 3, 3: 0, 1: 2, 2: 1}
    return pairs[p]


def _circle_order(d: PlanarDiagram, st: State) -> list[int]:
    """Seifert circles in path order of the Seifert graph."""
    adj: dict[int, set[int]] = defaultdict(set)
    for c in range(d.n):
        a, b = st.dart_circle[4 * c], st.dart_circle[4 * c + 2]
        if a == b:
            raise RuntimeError(f"crossing {c} meets a single Seifert circle")
        adj[a].add(b)
        adj[b].add(a)
    ends = sorted(v for v in adj if len(adj[v]) == 1)
    if len(ends) != 2 or any(len(s) > 2 for s in adj.values()):
        raise RuntimeError("Seifert graph is not a path; diagram is not braided")
    order = [ends[0]]
    while len(order) < len(adj):
        order.append(next(v for v in sorted(adj[order[-1]]) if v not in order[-2:]))
    return order


def diagram_to_braid(d: PlanarDiagram) -> tuple[BraidWord, int]:
    """A braid word whose closure is the diagram's knot, and the number of strands."""
    b = braided(d)
    st = seifert_state(b)
    order = _circle_order(b, st)
    rank = {circ: i for i, circ in enumerate(order)}
    circle_of = st.dart_circle

    # A ray from the empty side of the first circle, crossing each circle once.
    cap = next(f for f, darts in enumerate(b.faces) if all(circle_of[x] == order[0] for x in darts))
    face = cap
    sequences = []
    for circ in order:
        cut = next(x for x in b.faces[face] if circle_of[x] == circ)
        face = b.dart_face[b.partner[cut]]
        start = cut if not b.incoming[cut] else b.partner[cut]
        seq = []
        dart = start
        while True:
            head = b.partner[dart]
            c, p = divmod(head, 4)
            seq.append(c)
            dart = 4 * c + _smoothing_exit(b.signs[c], p)
            if dart == start:
                break
        sequences.append(seq)

    # Merge the per-circle crossing orders.
    succ: dict[int, list[int]] = defaultdict(list)
    indeg = [0] * b.n
    for seq in sequences:
        for u, v in zip(seq, seq[1:]):
            succ[u].append(v)
            indeg[v] += 1
    column = [min(rank[circle_of[4 * c]], rank[circle_of[4 * c + 2]]) for c in range(b.n)]
    heap = [(column[c], c) for c in range(b.n) if indeg[c] == 0]
    heapq.heapify(heap)
    word: BraidWord = []
    while heap:
        _, c = heapq.heappop(heap)
        word.append((column[c], b.signs[c]))
        for v in succ[c]:
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, (column[v], v))
    if len(word) != b.n:
        raise RuntimeError("circle orders are inconsistent; no braid word")
    return word, len(order)


def braid_seifert_form(word: BraidWord) -> list[list[int]]:
    """``V + V^T`` for the Seifert surface of a braid closure (disks joined by twisted bands).

    One generator per pair of consecutive letters in a column.  A loop meets
    itself with ``-(e1 + e2)``, its successor in the same column with the sign
    of the shared band, and an interleaved loop of the next column with +1 or
    -1 according to which of the two starts first.
    """
    loops = []  # (column, first position, second position)
    by_col: dict[int, list[int]] = defaultdict(list)
    for pos, (col, _) in enumerate(word):
        by_col[col].append(pos)
    for col in sorted(by_col):
        ps = by_col[col]
        loops += [(col, p, q) for p, q in zip(ps, ps[1:])]
    m = len(loops)
    s = [[0] * m for _ in range(m)]
    for i, (ci, p1, p2) in enumerate(loops):
        s[i][i] = -(word[p1][1] + word[p2][1])
        for j in range(i + 1, m):
            cj, q1, q2 = loops[j]
            v = 0
            if cj == ci and q1 == p2:
                v = word[p2][1]
            elif cj == ci + 1:
                if p1 < q1 < p2 < q2:
                    v = 1
                elif q1 < p1 < q2 < p2:
                    v = -1
            s[i][j] = s[j][i] = v
    return s
