"""Hot loops of the state sum.

Two interchangeable backends compute, for every state of an n-crossing
diagram, the number of state circles:

* a numba ``@njit`` kernel walking the circles state by state;
* a vectorised numpy kernel counting permutation cycles by pointer doubling.

Set ``KNOTSLOPE_PURE_NUMPY=1`` to force the numpy path (it is also used when
numba cannot be imported).  Bit ``c`` of a state index selects the smoothing
of crossing ``c``: 1 is the A (positive) smoothing, 0 the B smoothing.
"""

from __future__ import annotations

import os

import numpy as np

try:  # pragma: no cover - exercised implicitly
    import numba
except ImportError:  # pragma: no cover
    numba = None

PURE_NUMPY = os.environ.get("KNOTSLOPE_PURE_NUMPY", "").strip().lower() not in ("", "0", "false", "no")

# Smoothing partner of each arm position: A joins arms 0-1 and 2-3, B joins 0-3 and 1-2.
A_PAIR = np.array([1, 0, 3, 2], dtype=np.int64)
B_PAIR = np.array([3, 2, 1, 0], dtype=np.int64)


def backend() -> str:
    return "numpy" if PURE_NUMPY or numba is None else "numba"


def _circle_counts_python(partner: np.ndarray, n: int, lo: int, hi: int) -> np.ndarray:
    m = 4 * n
    out = np.empty(hi - lo, dtype=np.int64)
    seen = np.zeros(m, dtype=np.uint8)
    sp = np.empty(m, dtype=np.int64)
    for s in range(lo, hi):
        for c in range(n):
            if (s >> c) & 1:
                sp[4 * c] = 4 * c + 1
                sp[4 * c + 1] = 4 * c
                sp[4 * c + 2] = 4 * c + 3
                sp[4 * c + 3] = 4 * c + 2
            else:
                sp[4 * c] = 4 * c + 3
                sp[4 * c + 3] = 4 * c
                sp[4 * c + 1] = 4 * c + 2
                sp[4 * c + 2] = 4 * c + 1
        seen[:] = 0
        count = 0
        for d0 in range(m):
            if seen[d0]:
                continue
            count += 1
            d = d0
            while True:
                seen[d] = 1
                e = partner[d]
                seen[e] = 1
                d = sp[e]
                if d == d0:
                    break
        out[s - lo] = count
    return out


if numba is not None:
    _circle_counts_jit = numba.njit(cache=True, nogil=True)(_circle_counts_python)
else:  # pragma: no cover
    _circle_counts_jit = None


def circle_counts_numpy(partner: np.ndarray, n: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Vectorised circle counts for states ``lo..hi-1``.

    Each circle is the union of two cycles of the permutation
    ``d -> smoothing_partner(edge_partner(d))``; cycle minima are found by
    pointer doubling.
    """
    hi = (1 << n) if hi is None else hi
    m = 4 * n
    states = np.arange(lo, hi, dtype=np.int64)
    bits = ((states[:, None] >> np.arange(n, dtype=np.int64)[None, :]) & 1).astype(bool)
    pos = np.arange(m) % 4
    base = np.arange(m) - pos
    a_part = base + A_PAIR[pos]
    b_part = base + B_PAIR[pos]
    choose_a = np.repeat(bits, 4, axis=1)
    sp = np.where(choose_a, a_part[None, :], b_part[None, :])
    perm = sp[:, partner]
    low = np.broadcast_to(np.arange(m), perm.shape).copy()
    rows = np.arange(len(states))[:, None]
    step = 1
    while step < m:
        low = np.minimum(low, low[rows, perm])
        perm = perm[rows, perm]
        step *= 2
    cycles = (low == np.arange(m)[None, :]).sum(axis=1)
    return cycles // 2


def circle_counts(partner, n: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    """Circle count of every state in ``lo..hi-1`` using the selected backend."""
    hi = (1 << n) if hi is None else hi
    if n == 0:
        return np.ones(hi - lo, dtype=np.int64)
    partner = np.asarray(partner, dtype=np.int64)
    if backend() == "numba":
        return _circle_counts_jit(partner, n, lo, hi)
    chunk = 1 << 12
    return np.concatenate([circle_counts_numpy(partner, n, a, min(a + chunk, hi))
                           for a in range(lo, hi, chunk)] or [np.empty(0, dtype=np.int64)])


def popcounts(n: int, lo: int = 0, hi: int | None = None) -> np.ndarray:
    hi = (1 << n) if hi is None else hi
    states = np.arange(lo, hi, dtype=np.int64)
    bits = (states[:, None] >> np.arange(max(n, 1), dtype=np.int64)[None, :]) & 1
    return bits.sum(axis=1) if n else np.zeros(hi - lo, dtype=np.int64)
