"""Exact linear algebra over prime fields GF(p).

Matrices are immutable value objects with int64 entries reduced mod p.
Moduli are capped below 2^16 so all intermediate products fit native
integers; extension fields are out of scope.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import InputError
from .masks import to_labels

MAX_MODULUS = 1 << 16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """GF(p) for a prime 2 <= p < 2^16."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not (2 <= p < MAX_MODULUS) or not is_prime(p):
            raise InputError(f"modulus must be a prime in [2, 2^16), got {p}")
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class FieldMatrix:
    """Dense matrix over GF(p); entries stored reduced in [0, p)."""

    __slots__ = ("field", "data")

    def __init__(self, field: PrimeField | int, rows: Iterable[Sequence[int]] | np.ndarray):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        self.field = field
        data = np.array(rows, dtype=np.int64)
        if data.ndim != 2:
            if data.size == 0:
                data = data.reshape(0, 0)
            else:
                raise InputError("matrix rows must form a rectangular 2D array")
        self.data = np.mod(data, field.p)
        self.data.setflags(write=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nrows(self) -> int:
        return self.data.shape[0]

    @property
    def ncols(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and other.field == self.field
            and other.data.shape == self.data.shape
            and bool(np.array_equal(other.data, self.data))
        )

    def __hash__(self) -> int:
        return hash((self.p, self.data.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FieldMatrix(p={self.p}, shape={self.nrows}x{self.ncols})"

    def row(self, i: int) -> np.ndarray:
        return self.data[i].copy()

    def transpose(self) -> FieldMatrix:
        return FieldMatrix(self.field, self.data.T.copy())

    def rref(self) -> tuple[FieldMatrix, tuple[int, ...]]:
        """Reduced row echelon form and 0-based pivot columns."""
        work = self.data.copy()
        rank, piv = kernels.rref_mod_p(work, self.p)
        return FieldMatrix(self.field, work[:rank]), tuple(int(c) for c in piv)

    def rank(self) -> int:
        work = self.data.copy()
        return int(kernels.rank_mod_p(work, self.p))

    def kernel_basis(self) -> FieldMatrix:
        """Basis of the right null space {v : self @ v = 0}, as matrix rows.

        The rows are themselves in reduced echelon form, so the basis is a
        canonical function of the matrix.  Empty matrix (0 rows) for full
        column rank.
        """
        work = self.data.copy()
        rank, piv = kernels.rref_mod_p(work, self.p)
        piv = [int(c) for c in piv]
        free = [c for c in range(self.ncols) if c not in piv]
        vecs = np.zeros((len(free), self.ncols), dtype=np.int64)
        for k, fc in enumerate(free):
            vecs[k, fc] = 1
            for r, pc in enumerate(piv):
                vecs[k, pc] = (-work[r, fc]) % self.p
        kernels.rref_mod_p(vecs, self.p)
        return FieldMatrix(self.field, vecs)

    def column_submatrix(self, mask: int) -> FieldMatrix:
        """Columns selected by a subset mask over labels 1..ncols, ascending."""
        labels = to_labels(mask)
        if labels and labels[-1] > self.ncols:
            raise InputError(
                f"column label {labels[-1]} out of range 1..{self.ncols}"
            )
        idx = [lab - 1 for lab in labels]
        return FieldMatrix(self.field, self.data[:, idx].copy())

    def matmul(self, other: FieldMatrix) -> FieldMatrix:
        if other.field != self.field or self.ncols != other.nrows:
            raise InputError("matrix shapes/fields incompatible for product")
        return FieldMatrix(self.field, (self.data @ other.data) % self.p)

    def vecmul(self, vec: np.ndarray) -> np.ndarray:
        """Row vector times matrix: vec @ self, reduced mod p."""
        return (np.asarray(vec, dtype=np.int64) @ self.data) % self.p


def parse_matrix(text: str) -> FieldMatrix:
    """Parse the matrix text format: "p rows cols" header then row lines."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InputError("empty matrix text")
    header = lines[0].split()
    if len(header) != 3:
        raise InputError(f"bad matrix header {lines[0]!r}, want 'p rows cols'")
    try:
        p, rows, cols = (int(x) for x in header)
    except ValueError as exc:
        raise InputError(f"bad matrix header {lines[0]!r}") from exc
    if len(lines) != rows + 1:
        raise InputError(f"expected {rows} row lines, got {len(lines) - 1}")
    entries = []
    for ln in lines[1:]:
        row = [int(x) for x in ln.split()]
        if len(row) != cols:
            raise InputError(f"row {ln!r} has {len(row)} entries, want {cols}")
        entries.append(row)
    field = PrimeField(p)
    data = np.array(entries, dtype=np.int64).reshape(rows, cols)
    if np.any(data < 0) or np.any(data >= p):
        raise InputError("matrix entries must be residues in [0, p)")
    return FieldMatrix(field, data)


def format_matrix(m: FieldMatrix) -> str:
    lines = [f"{m.p} {m.nrows} {m.ncols}"]
    for i in range(m.nrows):
        lines.append(" ".join(str(int(x)) for x in m.data[i]))
    return "\n".join(lines) + "\n"
