"""Integer normal-form kernel used by Hom-space cohomology.

The kernel diagonalizes an integer matrix by unimodular row and column
operations and returns the nonzero diagonal (the invariant factors up to
sign and order, which is all that ranks and torsion need).

Backend selection: numba ``@njit`` by default, plain numpy when the
environment variable ``KSBRAID_DISABLE_NUMBA`` is set to a true value or
numba is not importable.  Both backends run the same source.  If an entry
grows past ``_LIMIT`` the int64 pass bails out and the computation is
repeated exactly on Python integers.
"""

from __future__ import annotations

import os

import numpy as np

_LIMIT = 1 << 40


def _flag(name: str) -> bool:
    return os.environ.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


def _diagonalize(a, limit):
    """In-place diagonalization.  Returns (diag, ok); ok is False on overflow."""
    rows, cols = a.shape
    diag = np.zeros(min(rows, cols), dtype=a.dtype)
    r = 0
    while r < rows and r < cols:
        # smallest nonzero pivot in the trailing block
        best = 0
        bi = -1
        bj = -1
        for i in range(r, rows):
            for j in range(r, cols):
                v = a[i, j]
                if v != 0:
                    av = v if v > 0 else -v
                    if bi < 0 or av < best:
                        best = av
                        bi = i
                        bj = j
        if bi < 0:
            break
        if bi != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[bi, j]
                a[bi, j] = t
        if bj != r:
            for i in range(rows):
                t = a[i, r]
                a[i, r] = a[i, bj]
                a[i, bj] = t
        while True:
            p = a[r, r]
            dirty = False
            for i in range(r + 1, rows):
                if a[i, r] != 0:
                    q = a[i, r] // p
                    for j in range(r, cols):
                        a[i, j] -= q * a[r, j]
                        if a[i, j] > limit or a[i, j] < -limit:
                            return diag, False
                    if a[i, r] != 0:
                        dirty = True
            for j in range(r + 1, cols):
                if a[r, j] != 0:
                    q = a[r, j] // p
                    for i in range(r, rows):
                        a[i, j] -= q * a[i, r]
                        if a[i, j] > limit or a[i, j] < -limit:
                            return diag, False
                    if a[r, j] != 0:
                        dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = -1
                for i in range(r + 1, rows):
                    for j in range(r + 1, cols):
                        if a[i, j] % p != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                for j in range(r, cols):
                    a[r, j] += a[bad, j]
                dirty = True
            # move the smallest nonzero entry of row/col r into the pivot
            best = a[r, r] if a[r, r] > 0 else -a[r, r]
            bi = r
            bj = r
            for i in range(r + 1, rows):
                v = a[i, r]
                av = v if v > 0 else -v
                if v != 0 and (best == 0 or av < best):
                    best = av
                    bi = i
                    bj = r
            for j in range(r + 1, cols):
                v = a[r, j]
                av = v if v > 0 else -v
                if v != 0 and (best == 0 or av < best):
                    best = av
                    bi = r
                    bj = j
            if bi != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[bi, j]
                    a[bi, j] = t
            if bj != r:
                for i in range(rows):
                    t = a[i, r]
                    a[i, r] = a[i, bj]
                    a[i, bj] = t
        diag[r] = a[r, r] if a[r, r] > 0 else -a[r, r]
        r += 1
    return diag[:r], True


_diagonalize_py = _diagonalize

BACKEND = "numpy"
if not _flag("KSBRAID_DISABLE_NUMBA"):
    try:
        from numba import njit

        _diagonalize_fast = njit(cache=True)(_diagonalize)
        BACKEND = "numba"
    except ImportError:  # pragma: no cover
        _diagonalize_fast = _diagonalize
else:
    _diagonalize_fast = _diagonalize


def invariant_factors(mat, backend: str | None = None) -> list:
    """Nonzero invariant factors of an integer matrix (as Python ints, sorted).

    ``backend`` forces "numba" or "numpy"; the default follows the module
    setting.
    """
    arr = np.asarray(mat, dtype=np.int64)
    if arr.ndim != 2 or arr.size == 0:
        return []
    fn = _diagonalize_fast
    if backend == "numpy":
        fn = _diagonalize_py
    elif backend == "numba" and BACKEND != "numba":
        raise RuntimeError("numba backend unavailable")
    diag, ok = fn(arr.copy(), _LIMIT)
    if not ok:
        exact = np.array(np.asarray(mat).tolist(), dtype=object)
        diag, ok = _diagonalize_py(exact, 1 << 4096)
        assert ok
    return sorted(int(x) for x in diag)


def rank_and_torsion(mat, backend: str | None = None) -> tuple:
    """(rank, torsion factors > 1) of an integer matrix."""
    f = invariant_factors(mat, backend)
    return len(f), [x for x in f if x > 1]
