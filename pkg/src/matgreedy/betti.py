"""Betti data of the circuit-generated monomial quotient ring, strand
predicates, and resolution-shape classification.

The multigraded Betti support equals the cycle ladder (plus the unit in
homological index 0), which is how betti_support reads it off.  Exact values
come from reduced homology of restricted independence complexes in
complementary degree; since these are matroid complexes the numbers are
field-independent and no field parameter is exposed.  Strand predicates are
purely combinatorial and never materialize differential matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded, InputError
from .homology import RESTRICTION_CAP, reduced_betti_single
from .ladder import ladder
from .masks import is_subset, popcount, to_labels
from .matroid import Matroid


@dataclass(frozen=True)
class BettiDiagram:
    """Multigraded support (and optionally values) per homological index.

    levels[i] lists the support sets at homological index i, for i in 0..t;
    level 0 is always the empty set alone.  values maps (i, mask) pairs to
    positive integers when computed.
    """

    n: int
    t: int
    levels: tuple[tuple[int, ...], ...]
    values: dict[tuple[int, int], int] | None = None

    def support(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, mask) for i, lv in enumerate(self.levels) for mask in lv
        )

    def table_support(self) -> tuple[tuple[int, int], ...]:
        """Sorted (i, j) pairs with some support set of cardinality j at index i."""
        pairs = {
            (i, popcount(mask))
            for i, lv in enumerate(self.levels)
            for mask in lv
        }
        return tuple(sorted(pairs))

    def table_values(self) -> dict[tuple[int, int], int]:
        """Aggregated table: sum of the multigraded values per cardinality."""
        if self.values is None:
            raise InputError("diagram carries no values; use betti_values()")
        out: dict[tuple[int, int], int] = {}
        for (i, mask), val in self.values.items():
            key = (i, popcount(mask))
            out[key] = out.get(key, 0) + val
        return out

    def min_degrees(self) -> tuple[int, ...]:
        """Per homological index 1..t, the smallest support cardinality."""
        return tuple(popcount(lv[0]) for lv in self.levels[1:])

    def to_json_dict(self) -> dict:
        doc: dict = {
            "n": self.n,
            "t": self.t,
            "support": [
                [i, list(to_labels(mask))]
                for i, lv in enumerate(self.levels)
                for mask in lv
            ],
            "table_support": [list(p) for p in self.table_support()],
        }
        if self.values is not None:
            doc["values"] = {
                f"{i}|{','.join(str(x) for x in to_labels(mask))}": val
                for (i, mask), val in sorted(self.values.items())
            }
            doc["table"] = {
                f"{i}|{j}": val for (i, j), val in sorted(self.table_values().items())
            }
        return doc


def betti_support(M: Matroid) -> BettiDiagram:
    """Support read directly off the cycle ladder; no homology computed."""
    lad = ladder(M)
    return BettiDiagram(n=M.n, t=lad.t, levels=((0,),) + lad.levels)


def betti_value(M: Matroid, i: int, X: int) -> int:
    """Exact multigraded Betti number at homological index i and set X.

    Computed as reduced homology of the restriction to X in degree
    |X| - i - 1; this is deliberately independent of the ladder so the two
    routes can be checked against each other.
    """
    if i < 0:
        return 0
    return reduced_betti_single(M, X, popcount(X) - i - 1)


def betti_values(M: Matroid) -> BettiDiagram:
    """Support plus exact values on every support pair.

    Checks the restriction cap against the whole support up front so an
    infeasible request fails before any slow homology is attempted.
    """
    diagram = betti_support(M)
    widest = max(
        (popcount(mask) for lv in diagram.levels for mask in lv), default=0
    )
    if widest > RESTRICTION_CAP:
        raise CapExceeded(
            f"support contains a {widest}-element set, "
            f"values are capped at {RESTRICTION_CAP} elements"
        )
    values = {
        (i, mask): betti_value(M, i, mask)
        for i, lv in enumerate(diagram.levels)
        for mask in lv
    }
    for (i, mask), val in values.items():
        assert val >= 1, (
            f"support pair ({i}, {to_labels(mask)}) computed a zero value"
        )
    return BettiDiagram(n=M.n, t=diagram.t, levels=diagram.levels, values=values)


def strand_nonzero(M: Matroid, l: int, rho: int, mu: int) -> bool:
    """Whether the component map at step l between multidegrees rho and mu is
    nonzero: rho a ladder member at level l-1 (the empty set when l = 1),
    mu one at level l, and rho strictly contained in mu."""
    if l < 1:
        return False
    lad = ladder(M)
    if l > lad.t or not lad.contains(l, mu):
        return False
    if l == 1:
        return rho == 0
    return lad.contains(l - 1, rho) and rho != mu and is_subset(rho, mu)


def graded_strand_nonzero(M: Matroid, l: int, p: int, q: int) -> bool:
    """Whether the total-degree (p, q) block of the step-l differential is
    nonzero, i.e. some multigraded component with those cardinalities is."""
    if l < 1:
        return False
    lad = ladder(M)
    if l > lad.t:
        return False
    if l == 1:
        return p == 0 and any(popcount(mu) == q for mu in lad.level(1))
    taus = [t_ for t_ in lad.level(l - 1) if popcount(t_) == p]
    for mu in lad.level(l):
        if popcount(mu) == q:
            for tau in taus:
                if is_subset(tau, mu) and tau != mu:
                    return True
    return False


@dataclass(frozen=True)
class StrandSpec:
    """A strand selector: either a chain of subsets (multigraded) or a vector
    of total degrees (one per homological index 1..t).

    Sequences that fail to increase are representable on purpose: their
    strands simply contain a zero map, so strand_check returns False rather
    than rejecting them.
    """

    sets: tuple[int, ...] | None = None
    degrees: tuple[int, ...] | None = None

    def __post_init__(self):
        if (self.sets is None) == (self.degrees is None):
            raise InputError("give exactly one of sets or degrees")
        seq = self.sets if self.sets is not None else self.degrees
        if not seq:
            raise InputError("empty strand spec")


def strand_check(M: Matroid, spec: StrandSpec) -> bool:
    """Whether every component map along the strand is nonzero."""
    lad = ladder(M)
    seq = spec.sets if spec.sets is not None else spec.degrees
    if len(seq) != lad.t:
        raise InputError(f"strand length {len(seq)} differs from corank {lad.t}")
    if spec.sets is not None:
        prev = 0
        for l, mask in enumerate(spec.sets, start=1):
            if not strand_nonzero(M, l, prev, mask):
                return False
            prev = mask
        return True
    prev_deg = 0
    for l, deg in enumerate(spec.degrees, start=1):
        if not graded_strand_nonzero(M, l, prev_deg, deg):
            return False
        prev_deg = deg
    return True


def greedy_from_strands(
    M: Matroid,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Recompute (bottom-up, top-down, CEZ) greedy vectors using only the
    Betti support and the strand predicate, no direct ladder-chain search."""
    diagram = betti_support(M)
    t = diagram.t
    if t == 0:
        return (), (), ()
    levels = diagram.levels

    def level_min(i: int) -> int:
        return popcount(levels[i][0])

    e = [level_min(1)]
    frontier = [s for s in levels[1] if popcount(s) == e[0]]
    for l in range(2, t + 1):
        hits = [
            s
            for s in levels[l]
            if any(strand_nonzero(M, l, tau, s) for tau in frontier)
        ]
        best = min(popcount(s) for s in hits)
        e.append(best)
        frontier = [s for s in hits if popcount(s) == best]

    et = [level_min(t)]
    frontier = [s for s in levels[t] if popcount(s) == et[0]]
    for l in range(t - 1, 0, -1):
        hits = [
            s
            for s in levels[l]
            if any(strand_nonzero(M, l + 1, s, tau) for tau in frontier)
        ]
        best = min(popcount(s) for s in hits)
        et.append(best)
        frontier = [s for s in hits if popcount(s) == best]
    et.reverse()

    d = diagram.min_degrees()
    g = [d[0]]
    for l in range(2, t + 1):
        candidates = sorted({popcount(s) for s in levels[l]})
        best = next(
            q for q in candidates if graded_strand_nonzero(M, l, d[l - 2], q)
        )
        g.append(best)
    return tuple(e), tuple(et), tuple(g)


@dataclass(frozen=True)
class ResolutionShape:
    pure: bool
    linear: bool
    degrees: tuple[int, ...] | None

    def to_json_dict(self) -> dict:
        return {
            "pure": self.pure,
            "linear": self.linear,
            "degrees": None if self.degrees is None else list(self.degrees),
        }


def resolution_shape(M: Matroid) -> ResolutionShape:
    """Purity (one support cardinality per level) and linearity (consecutive
    cardinalities).  Degrees in this setting strictly increase, so linearity
    is the +1 condition."""
    lad = ladder(M)
    degrees = []
    for lv in lad.levels:
        cards = {popcount(m) for m in lv}
        if len(cards) != 1:
            return ResolutionShape(pure=False, linear=False, degrees=None)
        degrees.append(cards.pop())
    linear = all(b == a + 1 for a, b in zip(degrees, degrees[1:]))
    return ResolutionShape(pure=True, linear=linear, degrees=tuple(degrees))
