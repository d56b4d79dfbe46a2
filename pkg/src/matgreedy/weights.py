"""Weight hierarchies over the cycle ladder: generalized Hamming weights,
bottom-up / top-down greedy weights, CEZ greedy weights, chainedness.

The greedy vectors are computed by frontier sweeps over the ladder.  For the
bottom-up (lex-minimal) profile the frontier at level l holds every ladder
member that ends an optimal length-l prefix; prefix feasibility depends only
on that endpoint, and every ladder member extends to the next level, so the
sweep is exact.  The top-down (revlex-minimal) profile is the mirrored sweep
from the top.  chains_bruteforce is an independent exhaustive-DFS oracle
(memoized on chain endpoints) used to cross-check both.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .ladder import CycleLadder, is_cycle, ladder
from .masks import is_subset, popcount, to_labels
from .matroid import Matroid

DEFAULT_CHAIN_CAP = 5_000_000


def hamming_weights(M: Matroid) -> tuple[int, ...]:
    """d_r = minimum cardinality at ladder level r; empty for corank 0."""
    lad = ladder(M)
    return tuple(popcount(level[0]) for level in lad.levels)


def _frontier_up(lad: CycleLadder) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bottom-up sweep; returns (profile, witness chain)."""
    if lad.t == 0:
        return (), ()
    level1 = lad.level(1)
    d1 = popcount(level1[0])
    frontier = [m for m in level1 if popcount(m) == d1]
    parent: dict[tuple[int, int], int | None] = {(1, m): None for m in frontier}
    profile = [d1]
    for l in range(2, lad.t + 1):
        best: int | None = None
        achievers: list[int] = []
        for mu in lad.level(l):  # sorted by (cardinality, mask)
            card = popcount(mu)
            if best is not None and card > best:
                break
            for sigma in frontier:
                if is_subset(sigma, mu):
                    best = card
                    achievers.append(mu)
                    parent[(l, mu)] = sigma
                    break
        assert best is not None, "every ladder member has a cover"
        profile.append(best)
        frontier = achievers
    chain = [min(frontier)]
    for l in range(lad.t, 1, -1):
        chain.append(parent[(l, chain[-1])])
    chain.reverse()
    return tuple(profile), tuple(chain)


def _frontier_down(lad: CycleLadder) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Top-down sweep; returns (profile, witness chain), both bottom-first."""
    if lad.t == 0:
        return (), ()
    top = lad.level(lad.t)
    dt = popcount(top[0])
    frontier = [m for m in top if popcount(m) == dt]
    child: dict[tuple[int, int], int | None] = {(lad.t, m): None for m in frontier}
    profile = [dt]
    for l in range(lad.t - 1, 0, -1):
        best: int | None = None
        achievers: list[int] = []
        for tau in lad.level(l):
            card = popcount(tau)
            if best is not None and card > best:
                break
            for sigma in frontier:
                if is_subset(tau, sigma):
                    best = card
                    achievers.append(tau)
                    child[(l, tau)] = sigma
                    break
        assert best is not None, "every ladder member contains a lower one"
        profile.append(best)
        frontier = achievers
    chain = [min(frontier)]
    for l in range(1, lad.t):
        chain.append(child[(l, chain[-1])])
    profile.reverse()
    return tuple(profile), tuple(chain)


def greedy_bottom_up(M: Matroid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Lex-minimal cardinality profile over maximal ladder chains, plus one
    witness chain realizing it."""
    return _frontier_up(ladder(M))


def greedy_top_down(M: Matroid) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Revlex-minimal profile (rightmost coordinate compared first, smaller
    wins), plus one witness chain."""
    return _frontier_down(ladder(M))


def greedy_cez(M: Matroid) -> tuple[tuple[int, ...], tuple[tuple[int | None, int], ...]]:
    """CEZ greedy weights: per-level minimum over ladder members containing
    some minimum-cardinality member of the previous level.

    Unlike the bottom-up sweep there is no chain memory, which is why the
    vector can fail to be monotone.  Witnesses are (tau, mu) pairs.
    """
    lad = ladder(M)
    if lad.t == 0:
        return (), ()
    d = hamming_weights(M)
    level1 = lad.level(1)
    g = [d[0]]
    pairs: list[tuple[int | None, int]] = [(None, level1[0])]
    for r in range(2, lad.t + 1):
        taus = [t_ for t_ in lad.level(r - 1) if popcount(t_) == d[r - 2]]
        witness: tuple[int, int] | None = None
        for mu in lad.level(r):  # ascending (cardinality, mask): first hit is minimal
            for tau in taus:
                if is_subset(tau, mu):
                    witness = (tau, mu)
                    break
            if witness is not None:
                break
        assert witness is not None, (
            "some ladder member must contain a minimum-cardinality one"
        )
        g.append(popcount(witness[1]))
        pairs.append(witness)
    return tuple(g), tuple(pairs)


def chains_bruteforce(
    M: Matroid, cap: int = DEFAULT_CHAIN_CAP
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Exact lex- and revlex-minimal profiles by exhaustive chain search.

    Dynamic programming over chain endpoints: the suffix DP carries, for each
    ladder member, the lex-minimal profile of all chains through it upward;
    the prefix DP the revlex-minimal profile downward.  Equivalent to plain
    DFS over every maximal chain, independently of the frontier sweeps.
    """
    lad = ladder(M)
    if lad.t == 0:
        return (), ()
    work = 0
    adj: dict[tuple[int, int], list[int]] = {}
    for l in range(1, lad.t):
        for sigma in lad.level(l):
            ups = []
            for mu in lad.level(l + 1):
                work += 1
                if work > cap:
                    raise CapExceeded(f"chain search exceeded {cap} subset tests")
                if is_subset(sigma, mu):
                    ups.append(mu)
            adj[(l, sigma)] = ups
    suffix: dict[int, tuple[int, ...]] = {
        sigma: (popcount(sigma),) for sigma in lad.level(lad.t)
    }
    for l in range(lad.t - 1, 0, -1):
        nxt: dict[int, tuple[int, ...]] = {}
        for sigma in lad.level(l):
            ups = adj[(l, sigma)]
            assert ups, "every ladder member has a cover"
            nxt[sigma] = (popcount(sigma),) + min(suffix[mu] for mu in ups)
        suffix = nxt
    lex_min = min(suffix.values())

    def revkey(profile: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(reversed(profile))

    prefix: dict[int, tuple[int, ...]] = {
        sigma: (popcount(sigma),) for sigma in lad.level(1)
    }
    for l in range(2, lad.t + 1):
        nxt = {}
        for mu in lad.level(l):
            below = [
                prefix[tau]
                for tau in lad.level(l - 1)
                if is_subset(tau, mu)
            ]
            assert below, "every ladder member contains a lower one"
            nxt[mu] = min(below, key=revkey) + (popcount(mu),)
        prefix = nxt
    revlex_min = min(prefix.values(), key=revkey)
    return lex_min, revlex_min


def is_chained(M: Matroid) -> tuple[bool, tuple[int, ...] | None]:
    """Whether one chain computes every d_i; witness chain when it does.

    Equivalent to e == d and to e-tilde == d (both directions of the sweep
    reach the same verdict, asserted here).  A chained matroid also has
    g == d; the converse can fail, so g is only checked one way.
    """
    d = hamming_weights(M)
    e, chain = greedy_bottom_up(M)
    et, _ = greedy_top_down(M)
    chained = e == d
    assert chained == (et == d), "bottom-up and top-down chainedness disagree"
    if chained:
        g, _ = greedy_cez(M)
        assert g == d, "chained matroid must have CEZ weights equal to d"
        return True, chain
    return False, None


@dataclass(frozen=True)
class WeightReport:
    """All four weight vectors with witnesses and the chainedness verdict."""

    n: int
    t: int
    d: tuple[int, ...]
    e: tuple[int, ...]
    e_tilde: tuple[int, ...]
    g: tuple[int, ...]
    witness_d: tuple[int, ...]
    witness_e: tuple[int, ...]
    witness_e_tilde: tuple[int, ...]
    witness_g: tuple[tuple[int | None, int], ...]
    chained: bool

    def validate(self) -> None:
        for name, vec in (("d", self.d), ("e", self.e), ("e_tilde", self.e_tilde)):
            assert all(a < b for a, b in zip(vec, vec[1:])), (
                f"{name} must be strictly increasing, got {vec}"
            )
        assert len(self.d) == self.t
        if self.t >= 1:
            assert self.e[0] == self.g[0] == self.d[0]
            assert self.e_tilde[-1] == self.d[-1]
        if self.t >= 2:
            assert self.g[1] == self.e[1]
        for i in range(self.t):
            assert self.d[i] <= self.e[i]
            assert self.d[i] <= self.e_tilde[i]
            assert self.d[i] <= self.g[i]
        for chain in (self.witness_e, self.witness_e_tilde):
            for a, b in zip(chain, chain[1:]):
                assert is_subset(a, b) and a != b, "witness chain must increase"
        assert tuple(popcount(m) for m in self.witness_e) == self.e
        assert tuple(popcount(m) for m in self.witness_e_tilde) == self.e_tilde
        assert tuple(popcount(m) for m in self.witness_d) == self.d
        assert tuple(popcount(p[1]) for p in self.witness_g) == self.g
        assert self.chained == (self.e == self.d)

    def to_json_dict(self) -> dict:
        def labels(mask: int) -> list[int]:
            return list(to_labels(mask))

        return {
            "n": self.n,
            "t": self.t,
            "d": list(self.d),
            "e": list(self.e),
            "e_tilde": list(self.e_tilde),
            "g": list(self.g),
            "chained": self.chained,
            "witnesses": {
                "d": [labels(m) for m in self.witness_d],
                "e": [labels(m) for m in self.witness_e],
                "e_tilde": [labels(m) for m in self.witness_e_tilde],
                "g": [
                    [None if t_ is None else labels(t_), labels(mu)]
                    for t_, mu in self.witness_g
                ],
            },
        }


def weight_report(M: Matroid) -> WeightReport:
    """Compute every weight family and validate the report invariants."""
    lad = ladder(M)
    d = hamming_weights(M)
    e, chain_e = greedy_bottom_up(M)
    et, chain_et = greedy_top_down(M)
    g, pairs = greedy_cez(M)
    witness_d = tuple(level[0] for level in lad.levels)
    report = WeightReport(
        n=M.n,
        t=lad.t,
        d=d,
        e=e,
        e_tilde=et,
        g=g,
        witness_d=witness_d,
        witness_e=chain_e,
        witness_e_tilde=chain_et,
        witness_g=pairs,
        chained=e == d,
    )
    report.validate()
    for level_idx, mask in enumerate(chain_e, start=1):
        assert is_cycle(M, mask) == (True, level_idx)
    return report
