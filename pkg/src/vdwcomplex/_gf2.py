"""Bit-packed GF(2) rank kernels.

Matrices are numpy uint64 arrays of shape (n_rows, n_words); bit b of
word w in a row is column 64*w + b.  Two interchangeable kernels exist:
a numba @njit one and a pure-numpy fallback.  Selection: the environment
variable VDW_NUMBA ("0" forces the numpy path) checked at import time;
numba missing or failing to import also falls back.
"""

import os

import numpy as np

WORD_BITS = 64


def pack_rows(column_masks_per_row, n_cols):
    """Pack rows given as python-int column masks into a uint64 array."""
    n_rows = len(column_masks_per_row)
    n_words = max(1, (n_cols + WORD_BITS - 1) // WORD_BITS)
    out = np.zeros((n_rows, n_words), dtype=np.uint64)
    full = (1 << WORD_BITS) - 1
    for r, m in enumerate(column_masks_per_row):
        w = 0
        while m:
            out[r, w] = m & full
            m >>= WORD_BITS
            w += 1
    return out


def _rank_numpy(rows, n_cols):
    rows = rows.copy()
    n_rows, n_words = rows.shape
    rank = 0
    for col in range(n_cols):
        w, b = divmod(col, WORD_BITS)
        bit = np.uint64(1) << np.uint64(b)
        has = (rows[rank:, w] & bit) != 0
        piv = np.flatnonzero(has)
        if piv.size == 0:
            continue
        piv = rank + piv[0]
        if piv != rank:
            rows[[rank, piv]] = rows[[piv, rank]]
        hit = (rows[:, w] & bit) != 0
        hit[rank] = False
        rows[hit] ^= rows[rank]
        rank += 1
        if rank == n_rows:
            break
    return rank


def _make_numba_kernel():
    from numba import njit

    @njit(cache=True)
    def _rank_numba(rows, n_cols):  # pragma: no cover - jitted
        rows = rows.copy()
        n_rows, n_words = rows.shape
        rank = 0
        for col in range(n_cols):
            w = col // WORD_BITS
            bit = np.uint64(1) << np.uint64(col % WORD_BITS)
            piv = -1
            for r in range(rank, n_rows):
                if rows[r, w] & bit:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for j in range(n_words):
                    tmp = rows[rank, j]
                    rows[rank, j] = rows[piv, j]
                    rows[piv, j] = tmp
            for r in range(n_rows):
                if r != rank and rows[r, w] & bit:
                    for j in range(n_words):
                        rows[r, j] ^= rows[rank, j]
            rank += 1
            if rank == n_rows:
                break
        return rank

    return _rank_numba


def _select_kernel():
    if os.environ.get("VDW_NUMBA", "1") == "0":
        return _rank_numpy, "numpy"
    try:
        return _make_numba_kernel(), "numba"
    except Exception:
        return _rank_numpy, "numpy"


_kernel, KERNEL_NAME = _select_kernel()


def gf2_rank_packed(rows, n_cols):
    """Rank over GF(2) of a packed matrix."""
    if rows.shape[0] == 0 or n_cols == 0:
        return 0
    return int(_kernel(rows, n_cols))


def gf2_rank_masks(column_masks_per_row, n_cols):
    """Rank over GF(2); rows given as python-int column masks."""
    if not column_masks_per_row or n_cols == 0:
        return 0
    return gf2_rank_packed(pack_rows(column_masks_per_row, n_cols), n_cols)
