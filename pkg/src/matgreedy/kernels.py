"""Hot integer kernels: mod-p elimination, subset rank tables, circuit ranks.

Every kernel is written as a plain numpy function and compiled with numba's
``@njit`` when available.  Setting the environment variable
``MATGREEDY_NUMBA=0`` (or running without numba installed) selects the
uncompiled pure-numpy path; results are identical either way.  The
``benchmarks/bench_kernels.py`` script times both paths.

Matrices are int64 row-major with entries reduced mod p (p < 2^16, so every
intermediate product fits in int64).  Subset masks are uint64, label i on
bit i-1.
"""

from __future__ import annotations

import os

import numpy as np

NUMBA_ENABLED = os.environ.get("MATGREEDY_NUMBA", "1") != "0"

if NUMBA_ENABLED:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False

if not NUMBA_ENABLED:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def rref_mod_p(a, p):
    """Reduce a in place to reduced row echelon form over GF(p).

    Returns (rank, pivot_columns).  Pivoting is deterministic: first nonzero
    entry in column order.
    """
    rows, cols = a.shape
    piv_cols = np.empty(cols, dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = t
        inv = np.int64(1)
        base = a[r, c] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r and a[i, c] != 0:
                f = a[i, c]
                for j in range(c, cols):
                    a[i, j] = (a[i, j] - f * a[r, j]) % p
        piv_cols[r] = c
        r += 1
    return r, piv_cols[:r]


@njit(cache=True)
def rank_mod_p(a, p):
    """Rank of a over GF(p).  Destroys a; uses cross-multiplied forward elimination."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            for j in range(c, cols):
                t = a[r, j]
                a[r, j] = a[pr, j]
                a[pr, j] = t
        piv = a[r, c]
        for i in range(r + 1, rows):
            f = a[i, c]
            if f != 0:
                for j in range(c, cols):
                    a[i, j] = (piv * a[i, j] - f * a[r, j]) % p
        r += 1
    return r


@njit(cache=True)
def subset_ranks(mat, p):
    """Rank of every column-subset of mat over GF(p).

    Entry m of the returned int8 array is the rank of the submatrix whose
    columns are the set bits of m (bit j <-> column j).  Memory is 2^cols
    bytes, so callers cap cols.
    """
    rows, cols = mat.shape
    total = 1 << cols
    out = np.empty(total, dtype=np.int8)
    scratch = np.empty((rows, cols), dtype=np.int64)
    for m in range(total):
        k = 0
        for j in range(cols):
            if m & (1 << j):
                for i in range(rows):
                    scratch[i, k] = mat[i, j]
                k += 1
        out[m] = rank_mod_p(scratch[:, :k], p)
    return out


@njit(cache=True)
def circuit_ranks(masks, circuits, n):
    """Greedy rank of each query mask in a matroid given by its circuit masks.

    Elements are taken in ascending label order; a trial set stays independent
    iff it contains no circuit.  Exchange property makes the order irrelevant.
    """
    out = np.empty(masks.shape[0], dtype=np.int64)
    zero = np.uint64(0)
    one = np.uint64(1)
    for k in range(masks.shape[0]):
        m = masks[k]
        indep = zero
        cnt = 0
        for b in range(n):
            bit = one << np.uint64(b)
            if m & bit:
                trial = indep | bit
                dep = False
                for ci in range(circuits.shape[0]):
                    if circuits[ci] & ~trial == zero:
                        dep = True
                        break
                if not dep:
                    indep = trial
                    cnt += 1
        out[k] = cnt
    return out


@njit(cache=True)
def filter_minimal(masks):
    """Keep-flags for the inclusion-minimal members of masks.

    masks must be sorted ascending by (popcount, value); then any strict
    superset appears after the sets it contains.
    """
    m = masks.shape[0]
    keep = np.ones(m, dtype=np.bool_)
    zero = np.uint64(0)
    for i in range(m):
        for j in range(i):
            if keep[j] and masks[j] & ~masks[i] == zero:
                keep[i] = False
                break
    return keep


def warmup() -> None:
    """Trigger JIT compilation of all kernels on tiny inputs."""
    rref_mod_p(np.array([[1, 1], [0, 1]], dtype=np.int64), 2)
    rank_mod_p(np.array([[1, 1], [0, 1]], dtype=np.int64), 2)
    subset_ranks(np.array([[1, 0], [0, 1]], dtype=np.int64), 2)
    circuit_ranks(
        np.array([3], dtype=np.uint64), np.array([3], dtype=np.uint64), 2
    )
    filter_minimal(np.array([1, 3], dtype=np.uint64))
