"""Shared fixtures: the two reference matroids, a small corpus, and random
matroid/code generators with fixed seeds."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

import numpy as np
import pytest

from matgreedy import kernels
from matgreedy.codes import LinearCode
from matgreedy.gfp import FieldMatrix
from matgreedy.matroid import (
    Matroid,
    from_circuits,
    from_generator,
    from_parity_check,
    uniform,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TERNARY84_GENERATOR_ROWS = [
    [1, 0, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 2, 0, 1],
]

M23_CIRCUITS = (
    [tuple(range(1, 9)), tuple(range(5, 13)), (1, 2, 3, 4, 9, 10, 11, 12)]
    + [c for c in combinations(range(13, 24), 9)]
)


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    kernels.warmup()


@pytest.fixture(scope="session")
def ternary84_generator() -> FieldMatrix:
    return FieldMatrix(3, TERNARY84_GENERATOR_ROWS)


@pytest.fixture(scope="session")
def ternary84(ternary84_generator) -> Matroid:
    return from_generator(ternary84_generator)


@pytest.fixture(scope="session")
def ternary84_code(ternary84_generator) -> LinearCode:
    return LinearCode(ternary84_generator)


@pytest.fixture(scope="session")
def m23() -> Matroid:
    return from_circuits(23, [_labels_to_mask(c) for c in M23_CIRCUITS])


def _labels_to_mask(labels) -> int:
    mask = 0
    for lab in labels:
        mask |= 1 << (lab - 1)
    return mask


def random_field_matrix(rng: np.random.Generator, p: int, rows: int, cols: int) -> FieldMatrix:
    return FieldMatrix(p, rng.integers(0, p, size=(rows, cols)))


def random_code(rng: np.random.Generator, p: int, n: int, k: int) -> LinearCode:
    """Random [n, k] code; resamples until the generator has full row rank."""
    while True:
        mat = random_field_matrix(rng, p, k, n)
        if mat.rank() == k:
            return LinearCode(mat)


def random_matroid(rng: np.random.Generator, n: int) -> Matroid:
    """A random small matroid: linear over GF(2)/GF(3), its dual, a random
    circuit set (harvested from a random linear matroid), or uniform."""
    kind = rng.integers(0, 5)
    if kind == 0:
        return uniform(int(rng.integers(0, n + 1)), n)
    p = 2 if rng.integers(0, 2) == 0 else 3
    rows = int(rng.integers(1, max(2, n)))
    mat = random_field_matrix(rng, p, rows, n)
    M = from_parity_check(mat)
    if kind == 2:
        return M.dual()
    if kind == 3:
        from matgreedy.ladder import circuits

        return from_circuits(n, list(circuits(M)))
    return M


def corpus_small(ternary84: Matroid) -> list[Matroid]:
    """The deterministic n <= 8 test corpus used by exhaustive suites."""
    matroids = [
        ternary84,
        ternary84.dual(),
        uniform(2, 4),
        uniform(0, 3),
        uniform(3, 3),
        uniform(1, 5),
        uniform(4, 8),
        from_circuits(3, [0b111]),
        from_circuits(4, [0b0011, 0b1100]),
        from_circuits(3, [0b001]),
        from_parity_check(FieldMatrix(2, [[1, 1, 0, 1, 0, 1], [0, 1, 1, 0, 1, 1]])),
        from_generator(FieldMatrix(2, [[1, 1, 1, 0, 0], [0, 0, 1, 1, 1]])),
    ]
    rng = np.random.default_rng(20240811)
    while len(matroids) < 16:
        matroids.append(random_matroid(rng, int(rng.integers(4, 9))))
    return matroids


@pytest.fixture(scope="session")
def small_corpus(ternary84) -> list[Matroid]:
    return corpus_small(ternary84)
