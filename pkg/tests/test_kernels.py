import os
import subprocess
import sys

import numpy as np
import pytest

from conftest import table_diagrams
from knotslope import _kernels


@pytest.mark.skipif(_kernels.numba is None, reason="numba not installed")
@pytest.mark.parametrize("name", ["3_1", "4_1", "7_4", "8_19", "10_123", "10_161"])
def test_backends_agree(name):
    d = table_diagrams()[name]
    partner = np.asarray(d.partner, dtype=np.int64)
    hi = 1 << d.n
    fast = _kernels._circle_counts_jit(partner, d.n, 0, hi)
    slow = _kernels.circle_counts_numpy(partner, d.n, 0, hi)
    ref = _kernels._circle_counts_python(partner, d.n, 0, hi)
    assert np.array_equal(fast, slow) and np.array_equal(fast, ref)


def test_partial_ranges_concatenate():
    d = table_diagrams()["6_2"]
    full = _kernels.circle_counts(d.partner, d.n)
    parts = np.concatenate([_kernels.circle_counts(d.partner, d.n, a, a + 16) for a in range(0, 64, 16)])
    assert np.array_equal(full, parts)


def test_popcounts():
    assert list(_kernels.popcounts(3)) == [0, 1, 1, 2, 1, 2, 2, 3]
    assert list(_kernels.popcounts(0)) == [0]


def test_env_flag_selects_numpy():
    env = dict(os.environ, KNOTSLOPE_PURE_NUMPY="1")
    code = ("from knotslope import _kernels, diagram_from_text, jones_polynomial;"
            "print(_kernels.backend());"
            "print(jones_polynomial(diagram_from_text('X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)')))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split("\n")[:2] == ["numpy", "-1*t^-4 + 1*t^-3 + 1*t^-1"]
