"""Code-side operations and oracles, and the code <-> matroid bridge."""

from __future__ import annotations

import numpy as np
import pytest

from matgreedy.codes import (
    LinearCode,
    code_matroid,
    code_weights,
    echelon_subspaces,
    format_code_file,
    ghw_bruteforce,
    greedy_bruteforce,
    parse_code_file,
    shortened_subcode,
    support,
    weight,
)
from matgreedy.errors import CapExceeded, InputError
from matgreedy.gfp import FieldMatrix
from matgreedy.ladder import is_cycle, ladder
from matgreedy.masks import from_labels
from matgreedy.matroid import validate_axioms
from matgreedy.weights import is_chained
from tests.conftest import random_code


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


REP3 = LinearCode(FieldMatrix(2, [[1, 1, 1]]))
MDS42 = LinearCode(FieldMatrix(3, [[1, 0, 1, 1], [0, 1, 1, 2]]))


def test_support_examples(ternary84_code):
    assert support([np.zeros(8, dtype=int)]) == 0
    msg = np.array([1, 2, 0, 0])
    word = ternary84_code.encode(msg)
    assert word.tolist() == [1, 2, 0, 0, 0, 0, 0, 0]
    assert support([word]) == from_labels([1, 2])
    rows = ternary84_code.generator.data[2:]
    assert support(rows) == from_labels([5, 6, 7, 8])
    assert weight(rows) == 4


def test_support_length_mismatch():
    with pytest.raises(InputError):
        support([[1, 0], [1, 0, 0]])


def test_generator_must_have_full_row_rank():
    with pytest.raises(InputError):
        LinearCode(FieldMatrix(2, [[1, 1], [1, 1]]))


def test_parity_check_construction_roundtrip(ternary84_code):
    h = ternary84_code.generator.kernel_basis()
    C2 = LinearCode.from_parity_check(h)
    assert C2.k == ternary84_code.k
    M1, M2 = code_matroid(ternary84_code), code_matroid(C2)
    for mask in range(1 << 8):
        assert M1.rank(mask) == M2.rank(mask)


def test_shortened_subcode_cases(ternary84_code):
    assert shortened_subcode(ternary84_code, 0).nrows == 0
    sub = shortened_subcode(ternary84_code, from_labels([1, 2]))
    assert sub.nrows == 1
    assert sub.data.tolist() == [[1, 2, 0, 0, 0, 0, 0, 0]]
    assert shortened_subcode(ternary84_code, from_labels([5, 6, 7, 8])).nrows == 2


def test_shortened_dimension_equals_nullity(ternary84_code):
    M = code_matroid(ternary84_code)
    for mask in range(1 << 8):
        assert shortened_subcode(ternary84_code, mask).nrows == M.nullity(mask)


def test_shortened_dimension_random_codes():
    rng = np.random.default_rng(8)
    for _ in range(10):
        C = random_code(rng, int(rng.choice([2, 3])), int(rng.integers(3, 10)), 3)
        M = code_matroid(C)
        for mask in range(1 << C.n):
            sub = shortened_subcode(C, mask)
            assert sub.nrows == M.nullity(mask)
            for row in sub.data:
                assert support([row]) & ~mask == 0


def test_code_matroid_fixtures(ternary84_code):
    M = code_matroid(ternary84_code)
    assert M.corank == 4
    identity = LinearCode(FieldMatrix(2, np.eye(3, dtype=int).tolist()))
    Mi = code_matroid(identity)
    assert Mi.corank == 3
    assert all(Mi.nullity(1 << b) == 1 for b in range(3))
    single = LinearCode(FieldMatrix(2, [[1, 1, 1]]))
    lad = ladder(code_matroid(single))
    assert lad.levels == ((from_labels([1, 2, 3]),),)


def test_echelon_subspace_counts():
    for p in (2, 3):
        for k in range(1, 5):
            for r in range(0, k + 1):
                assert len(echelon_subspaces(p, k, r)) == gaussian_binomial(k, r, p)


def test_echelon_subspaces_distinct():
    seen = set()
    for basis in echelon_subspaces(3, 4, 2):
        key = basis.tobytes()
        assert key not in seen
        seen.add(key)


def test_ghw_bruteforce_ternary84(ternary84_code):
    assert [ghw_bruteforce(ternary84_code, r) for r in (1, 2, 3, 4)] == [2, 4, 6, 8]


def test_ghw_bruteforce_repetition():
    assert ghw_bruteforce(REP3, 1) == 3


def test_ghw_cap_and_range(ternary84_code):
    with pytest.raises(CapExceeded):
        ghw_bruteforce(ternary84_code, 1, cap=8)
    with pytest.raises(InputError):
        ghw_bruteforce(ternary84_code, 5)


def test_greedy_bruteforce_ternary84(ternary84_code):
    e, et, g = greedy_bruteforce(ternary84_code)
    assert e == (2, 4, 7, 8)
    assert et == (3, 4, 6, 8)
    # the level-3 CEZ weight is 6: span{rows 3,4} has weight d_2 = 4 and
    # extends by the weight-2 word to a 3-dimensional subcode of weight 6
    assert g == (2, 4, 6, 8)


def test_greedy_bruteforce_repetition():
    assert greedy_bruteforce(REP3) == ((3,), (3,), (3,))


def test_greedy_bruteforce_mds42():
    assert greedy_bruteforce(MDS42) == ((3, 4), (3, 4), (3, 4))
    assert [ghw_bruteforce(MDS42, r) for r in (1, 2)] == [3, 4]


def test_code_weights_fixtures(ternary84_code):
    report = code_weights(ternary84_code)
    assert report.d == (2, 4, 6, 8)
    assert report.e == (2, 4, 7, 8)
    assert report.e_tilde == (3, 4, 6, 8)
    assert report.g == (2, 4, 6, 8)
    rep = code_weights(REP3)
    assert rep.d == rep.e == rep.e_tilde == rep.g == (3,)
    assert rep.chained


def test_weights_coincide_random_campaign():
    # code-side brute force against the matroid path on a quick sample;
    # the full 200-code campaign runs in the acceptance suite
    rng = np.random.default_rng(555)
    for _ in range(30):
        p = int(rng.choice([2, 3]))
        n = int(rng.integers(2, 10))
        k = int(rng.integers(1, min(n, 3) + 1))
        C = random_code(rng, p, n, k)
        report = code_weights(C)
        d_oracle = tuple(ghw_bruteforce(C, r) for r in range(1, k + 1))
        assert report.d == d_oracle
        assert (report.e, report.e_tilde, report.g) == greedy_bruteforce(C)


def test_greedy_subcode_supports_are_ladder_members():
    # supports of optimal greedy subcodes found by the oracle are cycles of
    # the matching level
    rng = np.random.default_rng(77)
    for _ in range(10):
        C = random_code(rng, int(rng.choice([2, 3])), int(rng.integers(3, 9)), 2)
        M = code_matroid(C)
        report = code_weights(C)
        for level, mask in enumerate(report.witness_e, start=1):
            sub = shortened_subcode(C, mask)
            assert sub.nrows == level
            assert support(sub.data) == mask
            assert is_cycle(M, mask) == (True, level)


def test_d_computing_subcode_supports_are_minimal_cycles():
    # every r-dimensional subcode of minimal weight, found by exhaustive
    # enumeration, has a support that is inclusion-minimal for nullity r
    rng = np.random.default_rng(404)
    from matgreedy.codes import _subspace_weight, echelon_subspaces

    for _ in range(12):
        C = random_code(rng, int(rng.choice([2, 3])), int(rng.integers(2, 9)), 2)
        M = code_matroid(C)
        lad = ladder(M)
        for r in range(1, C.k + 1):
            d_r = ghw_bruteforce(C, r)
            for basis in echelon_subspaces(C.p, C.k, r):
                if _subspace_weight(C, basis) == d_r:
                    words = (basis @ C.generator.data) % C.p
                    mask = support(words)
                    assert lad.contains(r, mask)


def test_zero_dimensional_code():
    h = FieldMatrix(3, np.eye(4, dtype=int).tolist())
    C = LinearCode.from_parity_check(h)
    assert C.k == 0 and C.n == 4
    report = code_weights(C)
    assert report.t == 0
    assert report.d == () and report.chained


def test_chained_code_iff_chained_matroid():
    rng = np.random.default_rng(2718)
    for _ in range(25):
        C = random_code(rng, int(rng.choice([2, 3])), int(rng.integers(2, 9)), 2)
        report = code_weights(C)
        e, et, g = greedy_bruteforce(C)
        d = tuple(ghw_bruteforce(C, r) for r in range(1, C.k + 1))
        code_chained = d == e
        assert code_chained == is_chained(code_matroid(C))[0]
        assert code_chained == report.chained


def test_code_matroid_axioms(ternary84_code):
    assert validate_axioms(code_matroid(ternary84_code)).ok


def test_code_file_roundtrip(ternary84_code):
    text = format_code_file(ternary84_code)
    C2 = parse_code_file(text)
    assert C2.generator == ternary84_code.generator
    assert format_code_file(C2) == text


def test_code_file_parity_check_role(ternary84_code):
    h = ternary84_code.generator.kernel_basis()
    text = "parity_check\n" + "\n".join(
        [f"{h.p} {h.nrows} {h.ncols}"]
        + [" ".join(str(int(x)) for x in row) for row in h.data]
    )
    C2 = parse_code_file(text)
    assert C2.k == 4
    M1, M2 = code_matroid(ternary84_code), code_matroid(C2)
    assert all(M1.rank(m) == M2.rank(m) for m in range(1 << 8))


def test_code_file_errors():
    with pytest.raises(InputError):
        parse_code_file("")
    with pytest.raises(InputError):
        parse_code_file("weird\n2 1 2\n1 1")
