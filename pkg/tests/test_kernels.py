import os
import subprocess
import sys

import numpy as np
import pytest

from lorentz_torus import _kernels

from .oracles import brute_force_pell


def test_divisor_pairs_backends_agree():
    a = _kernels.divisor_pairs(400, backend="numba")
    b = _kernels.divisor_pairs(400, backend="numpy")
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_divisor_pairs_small():
    ms, ns = _kernels.divisor_pairs(4)
    assert list(zip(ms.tolist(), ns.tolist())) == [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)]
    assert _kernels.divisor_pairs(1)[0].size == 0


@pytest.mark.parametrize("d", [2, 5, 13, 29, 46, 94, 151])
def test_pell_search_backends_agree_with_bigint_search(d):
    expected = brute_force_pell(d, 20000)
    for backend in ("numba", "numpy"):
        assert _kernels.pell_search(d, 20000, backend=backend) == expected


def test_pell_search_range_guard():
    with pytest.raises(OverflowError):
        _kernels.pell_search(10**6, 10**6)


@pytest.mark.parametrize("flag, expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, LORENTZ_TORUS_NO_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, "-c", "import lorentz_torus; print(lorentz_torus.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == expected
