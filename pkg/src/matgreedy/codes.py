"""Linear codes over prime fields: supports, shortened subcodes, the matroid
bridge, and brute-force oracles for the code-side weight definitions.

Codes are stored by a full-row-rank generator matrix in reduced echelon
form.  Subcodes are enumerated through canonical echelon bases of message
subspaces, which avoids double counting and lets the greedy oracles carry
every optimal subcode forward when ties occur.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from .errors import CapExceeded, InputError
from .gfp import FieldMatrix, format_matrix, parse_matrix
from .masks import full_mask, popcount
from .matroid import Matroid, from_generator
from .weights import WeightReport, weight_report

DEFAULT_SUBSPACE_CAP = 1 << 14


class LinearCode:
    """[n, k] code over GF(p), held as a canonical RREF generator matrix."""

    def __init__(self, generator: FieldMatrix):
        rref, _ = generator.rref()
        if rref.nrows != generator.nrows:
            raise InputError(
                f"generator rows are dependent: rank {rref.nrows} "
                f"of {generator.nrows} rows"
            )
        self.generator = rref
        self._matroid: Matroid | None = None

    @classmethod
    def from_parity_check(cls, h: FieldMatrix) -> "LinearCode":
        return cls(h.kernel_basis())

    @property
    def p(self) -> int:
        return self.generator.p

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    def __repr__(self) -> str:
        return f"LinearCode(p={self.p}, n={self.n}, k={self.k})"

    def encode(self, message) -> np.ndarray:
        return self.generator.vecmul(message)

    def matroid(self) -> Matroid:
        if self._matroid is None:
            self._matroid = from_generator(self.generator)
        return self._matroid


def support(vectors) -> int:
    """Union of nonzero coordinate positions of the given words, as a mask."""
    mask = 0
    length = None
    for vec in vectors:
        arr = np.asarray(vec)
        if length is None:
            length = arr.shape[0]
        elif arr.shape[0] != length:
            raise InputError("words of different lengths")
        for i in np.nonzero(arr)[0]:
            mask |= 1 << int(i)
    return mask


def weight(vectors) -> int:
    return popcount(support(vectors))


def shortened_subcode(C: LinearCode, X: int) -> FieldMatrix:
    """Canonical basis of the subcode supported inside X.

    Messages vanish on the coordinates outside X exactly when they lie in
    the kernel of the message-to-outside-coordinates map; those messages are
    re-encoded to codewords.
    """
    outside = full_mask(C.n) & ~X
    g_out = C.generator.column_submatrix(outside)
    msgs = g_out.transpose().kernel_basis()  # rows: messages m with m @ g_out = 0
    words = (msgs.data @ C.generator.data) % C.p
    rref, _ = FieldMatrix(C.generator.field, words).rref()
    return rref


def code_matroid(C: LinearCode) -> Matroid:
    return C.matroid()


# -- subcode enumeration ----------------------------------------------------


def _check_cap(C: LinearCode, cap: int) -> None:
    if C.p**C.k > cap:
        raise CapExceeded(
            f"message space of size {C.p}**{C.k} exceeds the cap {cap}"
        )


def echelon_subspaces(p: int, k: int, r: int) -> list[np.ndarray]:
    """Every r-dimensional subspace of GF(p)^k as its unique RREF basis."""
    if r < 0 or r > k:
        return []
    if r == 0:
        return [np.zeros((0, k), dtype=np.int64)]
    out = []
    for pivots in combinations(range(k), r):
        free_pos = [
            (i, j)
            for i in range(r)
            for j in range(pivots[i] + 1, k)
            if j not in pivots
        ]
        for fill in product(range(p), repeat=len(free_pos)):
            mat = np.zeros((r, k), dtype=np.int64)
            for i, c in enumerate(pivots):
                mat[i, c] = 1
            for (i, j), val in zip(free_pos, fill):
                mat[i, j] = val
            out.append(mat)
    return out


def _contains(small: np.ndarray, big: np.ndarray, pivots_big, p: int) -> bool:
    """Whether rowspace(small) is inside rowspace(big); big is in RREF."""
    for row in small:
        v = row.copy()
        for i, c in enumerate(pivots_big):
            f = v[c]
            if f:
                v = (v - f * big[i]) % p
        if np.any(v):
            return False
    return True


def _pivots(mat: np.ndarray) -> tuple[int, ...]:
    out = []
    for row in mat:
        nz = np.nonzero(row)[0]
        out.append(int(nz[0]))
    return tuple(out)


def _subspace_weight(C: LinearCode, basis: np.ndarray) -> int:
    words = (basis @ C.generator.data) % C.p
    return weight(words)


def ghw_bruteforce(C: LinearCode, r: int, cap: int = DEFAULT_SUBSPACE_CAP) -> int:
    """Exhaustive minimum support weight over all r-dimensional subcodes."""
    if not 1 <= r <= C.k:
        raise InputError(f"subcode dimension {r} outside 1..{C.k}")
    _check_cap(C, cap)
    return min(
        _subspace_weight(C, basis) for basis in echelon_subspaces(C.p, C.k, r)
    )


def greedy_bruteforce(
    C: LinearCode, cap: int = DEFAULT_SUBSPACE_CAP
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Literal recursive enumeration of the three greedy subcode families.

    Every optimal subcode is carried forward at each stage; ties matter
    because a later level may only be reachable through one of them.
    """
    _check_cap(C, cap)
    k = C.k
    if k == 0:
        return (), (), ()
    p = C.p
    by_dim = {r: echelon_subspaces(p, k, r) for r in range(0, k + 1)}
    weights = {
        r: [_subspace_weight(C, b) for b in by_dim[r]] for r in range(0, k + 1)
    }
    pivots = {r: [_pivots(b) for b in by_dim[r]] for r in range(0, k + 1)}

    def best_under(r: int, allowed: list[int]) -> tuple[int, list[int]]:
        w = min(weights[r][i] for i in allowed)
        return w, [i for i in allowed if weights[r][i] == w]

    # bottom-up: dimension-r subcodes containing an optimal (r-1)-subcode
    e: list[int] = []
    e1, frontier = best_under(1, list(range(len(by_dim[1]))))
    e.append(e1)
    for r in range(2, k + 1):
        allowed = [
            i
            for i, big in enumerate(by_dim[r])
            if any(
                _contains(by_dim[r - 1][j], big, pivots[r][i], p)
                for j in frontier
            )
        ]
        er, frontier = best_under(r, allowed)
        e.append(er)

    # top-down: dimension-r subcodes inside an optimal (r+1)-subcode
    et = [weights[k][0]]
    frontier = [0]  # the whole code is the unique k-dimensional subspace
    for r in range(k - 1, 0, -1):
        allowed = [
            i
            for i, small in enumerate(by_dim[r])
            if any(
                _contains(small, by_dim[r + 1][j], pivots[r + 1][j], p)
                for j in frontier
            )
        ]
        wr, frontier = best_under(r, allowed)
        et.append(wr)
    et.reverse()

    # CEZ: dimension-r subcodes containing some subcode of weight d_{r-1}
    d = [min(weights[r]) for r in range(1, k + 1)]
    g = [d[0]]
    for r in range(2, k + 1):
        computers = [
            j for j, w in enumerate(weights[r - 1]) if w == d[r - 2]
        ]
        allowed = [
            i
            for i, big in enumerate(by_dim[r])
            if any(
                _contains(by_dim[r - 1][j], big, pivots[r][i], p)
                for j in computers
            )
        ]
        gr, _ = best_under(r, allowed)
        g.append(gr)

    return tuple(e), tuple(et), tuple(g)


def code_weights(C: LinearCode) -> WeightReport:
    """Production path: the full weight report through the code's matroid."""
    return weight_report(code_matroid(C))


# -- code file format --------------------------------------------------------


def parse_code_file(text: str) -> LinearCode:
    """Role header ("generator" | "parity_check") followed by matrix text."""
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise InputError("empty code file")
    role = lines[idx].strip()
    if role not in ("generator", "parity_check"):
        raise InputError(f"unknown code role {role!r}")
    mat = parse_matrix("\n".join(lines[idx + 1 :]))
    if role == "generator":
        return LinearCode(mat)
    return LinearCode.from_parity_check(mat)


def format_code_file(C: LinearCode, role: str = "generator") -> str:
    if role != "generator":
        raise InputError("only generator output is supported")
    return "generator\n" + format_matrix(C.generator)
