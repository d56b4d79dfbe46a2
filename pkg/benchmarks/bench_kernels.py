#!/usr/bin/env python3
"""Benchmark the numba-compiled kernels against the pure-numpy fallback.

Each kernel is timed twice: through the @njit dispatcher and through its
uncompiled .py_func (the exact code the MATGREEDY_NUMBA=0 fallback runs).
When the package was imported with numba disabled both columns coincide.

Usage:
    python benchmarks/bench_kernels.py [--cols N] [--masks N] [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from matgreedy import kernels


def _best_of(func, args, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _pair(kernel):
    compiled = kernel
    plain = getattr(kernel, "py_func", kernel)
    return compiled, plain


def bench_rref(rng, repeat: int) -> tuple[str, float, float]:
    mat = rng.integers(0, 3, size=(120, 160)).astype(np.int64)
    compiled, plain = _pair(kernels.rref_mod_p)
    jit_t = _best_of(lambda a, p: compiled(a.copy(), p), (mat, 3), repeat)
    py_t = _best_of(lambda a, p: plain(a.copy(), p), (mat, 3), repeat)
    return "rref_mod_p 120x160 GF(3)", jit_t, py_t

def bench_subset_ranks(rng, cols: int, repeat: int) -> tuple[str, float, float]:
    mat = rng.integers(0, 3, size=(5, cols)).astype(np.int64)
    compiled, plain = _pair(kernels.subset_ranks)
    jit_t = _best_of(lambda a, p: compiled(a.copy(), p), (mat, 3), repeat)
    py_t = _best_of(lambda a, p: plain(a.copy(), p), (mat, 3), repeat)
    return f"subset_ranks 5x{cols} GF(3) (2^{cols} subsets)", jit_t, py_t


def bench_circuit_ranks(rng, n_masks: int, repeat: int) -> tuple[str, float, float]:
    n = 23
    circuits = []
    for _ in range(58):
        size = int(rng.integers(8, 10))
        labels = rng.choice(n, size=size, replace=False)
        circuits.append(sum(1 << int(x) for x in labels))
    circ = np.array(sorted(set(circuits)), dtype=np.uint64)
    masks = rng.integers(0, 1 << n, size=n_masks).astype(np.uint64)
    compiled, plain = _pair(kernels.circuit_ranks)
    jit_t = _best_of(compiled, (masks, circ, n), repeat)
    py_t = _best_of(plain, (masks, circ, n), repeat)
    return f"circuit_ranks {n_masks} masks, {len(circ)} circuits", jit_t, py_t


def bench_filter_minimal(rng, n_masks: int, repeat: int) -> tuple[str, float, float]:
    masks = rng.integers(0, 1 << 23, size=n_masks).astype(np.uint64)
    order = sorted(set(int(m) for m in masks), key=lambda m: (bin(m).count("1"), m))
    arr = np.array(order, dtype=np.uint64)
    compiled, plain = _pair(kernels.filter_minimal)
    jit_t = _best_of(compiled, (arr,), repeat)
    py_t = _best_of(plain, (arr,), repeat)
    return f"filter_minimal {len(arr)} masks", jit_t, py_t


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cols", type=int, default=13, help="subset_ranks columns")
    parser.add_argument("--masks", type=int, default=3000, help="mask batch size")
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    args = parser.parse_args()

    print(f"numba enabled: {kernels.NUMBA_ENABLED}")
    rng = np.random.default_rng(7)
    kernels.warmup()

    rows = [
        bench_rref(rng, args.repeat),
        bench_subset_ranks(rng, args.cols, args.repeat),
        bench_circuit_ranks(rng, args.masks, args.repeat),
        bench_filter_minimal(rng, args.masks, args.repeat),
    ]

    name_w = max(len(r[0]) for r in rows)
    print(f"\n{'kernel':<{name_w}}  {'numba (s)':>10}  {'numpy (s)':>10}  {'speedup':>8}")
    print("-" * (name_w + 34))
    for name, jit_t, py_t in rows:
        speedup = py_t / jit_t if jit_t > 0 else float("inf")
        print(f"{name:<{name_w}}  {jit_t:>10.4f}  {py_t:>10.4f}  {speedup:>7.1f}x")


if __name__ == "__main__":
    main()
