"""Matroids with rank/nullity oracles: linear over GF(p), circuit-defined,
uniform, and duals.

Every matroid is immutable after construction; rank queries are memoized per
instance, and linear matroids on small ground sets precompute a full rank
table with the subset_ranks kernel.  Labels are 1-based throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import InputError
from .gfp import FieldMatrix, PrimeField
from .masks import (
    MAX_GROUND_SET,
    from_labels,
    full_mask,
    is_subset,
    popcount,
    to_labels,
)

# Full 2^n rank tables are built for linear matroids up to this many columns.
RANK_TABLE_MAX_N = 14


class Matroid:
    """Base class: ground set {1..n} plus a rank oracle."""

    kind = "abstract"

    def __init__(self, n: int):
        if not 0 <= n <= MAX_GROUND_SET:
            raise InputError(f"ground-set size must be in 0..{MAX_GROUND_SET}")
        self.n = n
        self._cache: dict[int, int] = {}
        self._circuits: tuple[int, ...] | None = None
        self._ladder = None

    # -- rank oracle ----------------------------------------------------

    def _rank(self, mask: int) -> int:
        raise NotImplementedError

    def rank(self, mask: int) -> int:
        if mask & ~full_mask(self.n):
            raise InputError("subset extends beyond the ground set")
        cached = self._cache.get(mask)
        if cached is None:
            cached = self._rank(mask)
            self._cache[mask] = cached
        return cached

    def nullity(self, mask: int) -> int:
        return popcount(mask) - self.rank(mask)

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == popcount(mask)

    @property
    def full_rank(self) -> int:
        return self.rank(full_mask(self.n))

    @property
    def corank(self) -> int:
        """Nullity of the whole ground set; indexes the weight hierarchies."""
        return self.n - self.full_rank

    def dual(self) -> "Matroid":
        return DualMatroid(self)

    # -- serialization ---------------------------------------------------

    def to_descriptor(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"


class LinearMatroid(Matroid):
    """Column matroid of a matrix over GF(p): rank(X) = rank of the columns X.

    This is the matroid of a code when the matrix is a parity check of it.
    """

    kind = "linear"

    def __init__(self, matrix: FieldMatrix):
        super().__init__(matrix.ncols)
        self.matrix = matrix
        self._table: np.ndarray | None = None
        self._table_tried = False

    def _rank(self, mask: int) -> int:
        if not self._table_tried and self.n <= RANK_TABLE_MAX_N:
            self._table = kernels.subset_ranks(self.matrix.data.copy(), self.p)
            self._table_tried = True
        if self._table is not None:
            return int(self._table[mask])
        return self.matrix.column_submatrix(mask).rank()

    @property
    def p(self) -> int:
        return self.matrix.p

    def to_descriptor(self) -> dict:
        return {
            "type": "linear",
            "p": self.p,
            "role": "parity_check",
            "matrix": [[int(x) for x in row] for row in self.matrix.data],
        }


class CircuitMatroid(Matroid):
    """Matroid given by its circuit list; rank by greedy basis growth.

    The list is trusted to be the circuit set of an actual matroid; only the
    antichain condition is checked (full circuit-axiom verification is
    exponential).  validate_axioms gives an opt-in deeper check.
    """

    kind = "circuits"

    def __init__(self, n: int, circuits: list[int] | tuple[int, ...]):
        super().__init__(n)
        circs = sorted(set(int(c) for c in circuits), key=lambda c: (popcount(c), c))
        top = full_mask(n)
        for c in circs:
            if c == 0:
                raise InputError("the empty set cannot be a circuit")
            if c & ~top:
                raise InputError("circuit extends beyond the ground set")
        for i, small in enumerate(circs):
            for big in circs[i + 1 :]:
                if small != big and is_subset(small, big):
                    raise InputError(
                        f"circuit list is not an antichain: "
                        f"{to_labels(small)} contained in {to_labels(big)}"
                    )
        self.circuit_masks = tuple(circs)
        self._circuits = self.circuit_masks
        self._circ_arr = np.array(circs, dtype=np.uint64)

    def _rank(self, mask: int) -> int:
        arr = np.array([mask], dtype=np.uint64)
        return int(kernels.circuit_ranks(arr, self._circ_arr, self.n)[0])

    def to_descriptor(self) -> dict:
        return {
            "type": "circuits",
            "n": self.n,
            "circuits": [list(to_labels(c)) for c in self.circuit_masks],
        }


class UniformMatroid(Matroid):
    """U_{r,n}: rank(X) = min(|X|, r)."""

    kind = "uniform"

    def __init__(self, r: int, n: int):
        super().__init__(n)
        if not 0 <= r <= n:
            raise InputError(f"uniform rank must satisfy 0 <= r <= n, got r={r}, n={n}")
        self.r = r

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self.r)

    def dual(self) -> "Matroid":
        return UniformMatroid(self.n - self.r, self.n)

    def to_descriptor(self) -> dict:
        return {"type": "uniform", "r": self.r, "n": self.n}


class DualMatroid(Matroid):
    """Dual via the rank formula: r*(X) = |X| + r(E-X) - r(E)."""

    kind = "dual"

    def __init__(self, inner: Matroid):
        super().__init__(inner.n)
        self.inner = inner

    def _rank(self, mask: int) -> int:
        comp = full_mask(self.n) & ~mask
        return popcount(mask) + self.inner.rank(comp) - self.inner.full_rank

    def to_descriptor(self) -> dict:
        return {"type": "dual", "of": self.inner.to_descriptor()}


def from_parity_check(h: FieldMatrix) -> Matroid:
    """Matroid of the code with parity check h: rank(X) = rank of columns X."""
    return LinearMatroid(h)


def from_generator(g: FieldMatrix) -> Matroid:
    """Matroid of the code generated by g: the dual of g's column matroid.

    Equivalently its nullity of X is the dimension of the subcode supported
    inside X.
    """
    return DualMatroid(LinearMatroid(g))


def from_circuits(n: int, circuits) -> Matroid:
    """Matroid from an antichain of circuit subsets (masks or label lists)."""
    masks = []
    for c in circuits:
        masks.append(c if isinstance(c, int) else from_labels(c, n))
    return CircuitMatroid(n, masks)


def uniform(r: int, n: int) -> Matroid:
    return UniformMatroid(r, n)


# -- axiom validation -----------------------------------------------------


@dataclass
class AxiomReport:
    n: int
    exhaustive: bool
    checked_sets: int
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "exhaustive": self.exhaustive,
            "checked_sets": self.checked_sets,
            "violations": sorted(self.violations),
        }


def validate_axioms(M: Matroid, seed: int = 0, samples: int = 4096) -> AxiomReport:
    """Check R1 (bounds), R2 (monotonicity), R3 (submodularity) and the
    supermodular nullity inequality.

    Exhaustive for n <= 12 via the local forms: monotone and submodular set
    functions are characterized by their one/two-element increments, so a
    clean local scan proves the global axioms.  Larger ground sets are
    checked on randomly sampled subsets.
    """
    n = M.n
    exhaustive = n <= 12
    if exhaustive:
        sets = range(1 << n)
    else:
        rng = np.random.default_rng(seed)
        top = full_mask(n)
        sets = sorted({int(x) & top for x in rng.integers(0, 1 << 63, samples)})
    report = AxiomReport(n=n, exhaustive=exhaustive, checked_sets=0)
    bits = [1 << b for b in range(n)]
    for x in sets:
        report.checked_sets += 1
        rx = M.rank(x)
        card = popcount(x)
        if not 0 <= rx <= card:
            report.violations.append(
                f"R1: r({to_labels(x)}) = {rx} outside [0, {card}]"
            )
            continue
        outside = [b for b in bits if not x & b]
        grown = {}
        for b in outside:
            r1 = M.rank(x | b)
            grown[b] = r1
            if r1 < rx:
                report.violations.append(
                    f"R2: r({to_labels(x | b)}) < r({to_labels(x)})"
                )
            if r1 > rx + 1:
                report.violations.append(
                    f"unit increase: r({to_labels(x | b)}) > r({to_labels(x)}) + 1"
                )
        for i, a in enumerate(outside):
            for b in outside[i + 1 :]:
                rab = M.rank(x | a | b)
                if grown[a] + grown[b] < rab + rx:
                    report.violations.append(
                        f"R3: submodularity fails at X={to_labels(x)}, "
                        f"a={to_labels(a)}, b={to_labels(b)}"
                    )
                # nullity supermodularity is the mirrored local inequality
                na = popcount(x | a) - grown[a]
                nb = popcount(x | b) - grown[b]
                nab = popcount(x | a | b) - rab
                nx = card - rx
                if na + nb > nab + nx:
                    report.violations.append(
                        f"nullity supermodularity fails at X={to_labels(x)}, "
                        f"a={to_labels(a)}, b={to_labels(b)}"
                    )
    return report


# -- JSON descriptors ------------------------------------------------------


def from_descriptor(obj) -> Matroid:
    """Build a matroid from the JSON descriptor format."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"bad matroid JSON: {exc}") from exc
    if not isinstance(obj, dict) or "type" not in obj:
        raise InputError("matroid descriptor must be an object with a 'type'")
    kind = obj["type"]
    try:
        if kind == "circuits":
            return from_circuits(int(obj["n"]), obj["circuits"])
        if kind == "uniform":
            return uniform(int(obj["r"]), int(obj["n"]))
        if kind == "linear":
            mat = FieldMatrix(PrimeField(int(obj["p"])), obj["matrix"])
            role = obj.get("role", "parity_check")
            if role == "parity_check":
                return from_parity_check(mat)
            if role == "generator":
                return from_generator(mat)
            raise InputError(f"unknown linear role {role!r}")
        if kind == "dual":
            return from_descriptor(obj["of"]).dual()
    except KeyError as exc:
        raise InputError(f"matroid descriptor missing field {exc}") from exc
    raise InputError(f"unknown matroid type {kind!r}")
