"""Hot loops over machine integers and floats.

Each kernel has a numba ``@njit`` version and a pure-numpy version with the
same signature and output.  The numba path is used when numba imports and the
environment variable ``LORENTZ_TORUS_NO_NUMBA`` is unset (or ``0``).

Only bounded, int64-safe work lives here.  Exact big-integer arithmetic stays
in the pure Python modules.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("LORENTZ_TORUS_NO_NUMBA", "0") in ("", "0")
BACKEND = "numba" if USE_NUMBA else "numpy"

# m*m - 1 must stay well inside int64
DIVISOR_M_LIMIT = 3_000_000_000
# 1 + d*y*y must be exact in int64 and its float sqrt within 1 of the truth
PELL_SEARCH_LIMIT = 2**52


# ---------------------------------------------------------------- divisor pairs

def _divisor_pairs_numpy(m_max):
    ms, ns = [], []
    for m in range(2, m_max + 1):
        N = m * m - 1
        cand = np.arange(1, m, dtype=np.int64)  # isqrt(m*m - 1) == m - 1
        hits = cand[N % cand == 0]
        ms.append(np.full(hits.size, m, dtype=np.int64))
        ns.append(hits)
    if not ms:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    return np.concatenate(ms), np.concatenate(ns)


def _divisor_pairs_py(m_max):
    count = 0
    for m in range(2, m_max + 1):
        N = m * m - 1
        for n in range(1, m):
            if N % n == 0:
                count += 1
    out_m = np.empty(count, np.int64)
    out_n = np.empty(count, np.int64)
    i = 0
    for m in range(2, m_max + 1):
        N = m * m - 1
        for n in range(1, m):
            if N % n == 0:
                out_m[i] = m
                out_n[i] = n
                i += 1
    return out_m, out_n


# ------------------------------------------------------------ pell brute force

def _pell_search_numpy(d, y_max, chunk=1 << 16):
    y0 = 1
    while y0 <= y_max:
        y = np.arange(y0, min(y0 + chunk, y_max + 1), dtype=np.int64)
        s = 1 + d * y * y
        r = np.floor(np.sqrt(s.astype(np.float64))).astype(np.int64)
        r -= r * r > s
        r += (r + 1) * (r + 1) <= s
        hit = np.flatnonzero(r * r == s)
        if hit.size:
            return int(r[hit[0]]), int(y[hit[0]])
        y0 += chunk
    return 0, 0


def _pell_search_py(d, y_max):
    for y in range(1, y_max + 1):
        s = 1 + d * y * y
        r = np.int64(np.sqrt(np.float64(s)))
        if r * r > s:
            r -= 1
        if (r + 1) * (r + 1) <= s:
            r += 1
        if r * r == s:
            return r, y
    return 0, 0


# -------------------------------------------------------------- orbit sampling

def _orbit_counts_py(a11, a12, a21, a22, x, t, steps, grid):
    counts = np.zeros((grid, grid), np.int64)
    for _ in range(steps):
        nx = a11 * x + a12 * t
        nt = a21 * x + a22 * t
        x = nx - np.floor(nx)
        t = nt - np.floor(nt)
        i = int(x * grid)
        j = int(t * grid)
        if i >= grid:
            i = grid - 1
        if j >= grid:
            j = grid - 1
        counts[i, j] += 1
    return counts, x, t


def _orbit_counts_numpy(a11, a12, a21, a22, x, t, steps, grid):
    # the orbit is sequential; the trajectory is filled in Python and binned with numpy
    xs = np.empty(steps, np.float64)
    ts = np.empty(steps, np.float64)
    fl = np.floor
    for k in range(steps):
        nx = a11 * x + a12 * t
        nt = a21 * x + a22 * t
        x = float(nx - fl(nx))
        t = float(nt - fl(nt))
        xs[k] = x
        ts[k] = t
    i = np.minimum((xs * grid).astype(np.int64), grid - 1)
    j = np.minimum((ts * grid).astype(np.int64), grid - 1)
    counts = np.zeros((grid, grid), np.int64)
    np.add.at(counts, (i, j), 1)
    return counts, x, t


if HAVE_NUMBA:
    _divisor_pairs_numba = njit(cache=True)(_divisor_pairs_py)
    _pell_search_numba = njit(cache=True)(_pell_search_py)
    _orbit_counts_numba = njit(cache=True)(_orbit_counts_py)
else:  # pragma: no cover
    _divisor_pairs_numba = _divisor_pairs_py
    _pell_search_numba = _pell_search_py
    _orbit_counts_numba = _orbit_counts_py


def divisor_pairs(m_max: int, backend: str | None = None) -> tuple[np.ndarray, np.ndarray]:
    """All ``(m, n)`` with ``2 <= m <= m_max``, ``n < m`` and ``n | m*m - 1``.

    Since ``isqrt(m*m - 1) == m - 1`` these are exactly the small halves of the
    divisor pairs ``(n, (m*m - 1)//n)``.  Rows are ordered by ``m`` then ``n``.
    """
    if m_max > DIVISOR_M_LIMIT:
        raise OverflowError(f"m_max={m_max} exceeds the int64 kernel range")
    if m_max < 2:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    if (backend or BACKEND) == "numba":
        return _divisor_pairs_numba(m_max)
    return _divisor_pairs_numpy(m_max)


def pell_search(d: int, y_max: int, backend: str | None = None) -> tuple[int, int] | None:
    """Smallest ``y`` in ``[1, y_max]`` with ``1 + d*y*y`` a square, as ``(x, y)``."""
    if d * y_max * y_max >= PELL_SEARCH_LIMIT:
        raise OverflowError(f"d={d}, y_max={y_max} exceeds the int64 kernel range")
    if (backend or BACKEND) == "numba":
        x, y = _pell_search_numba(np.int64(d), np.int64(y_max))
    else:
        x, y = _pell_search_numpy(d, y_max)
    return (int(x), int(y)) if y else None


def orbit_counts(matrix: tuple[int, int, int, int], x: float, t: float, steps: int,
                 grid: int = 32, backend: str | None = None) -> tuple[np.ndarray, float, float]:
    """Iterate the linear map mod 1 in doubles and bin the visited points.

    The seed itself is not counted; the ``steps`` images are.
    """
    a11, a12, a21, a22 = (float(v) for v in matrix)
    if (backend or BACKEND) == "numba":
        counts, x, t = _orbit_counts_numba(a11, a12, a21, a22, float(x), float(t), int(steps), int(grid))
    else:
        counts, x, t = _orbit_counts_numpy(a11, a12, a21, a22, float(x), float(t), int(steps), int(grid))
    return counts, float(x), float(t)
