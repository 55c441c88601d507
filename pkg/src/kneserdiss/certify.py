"""Certificate checks and structural verifications.

Covers the degree-bound check behind every solver witness, its dual
(3-path vertex covers), Hall matchings with explicit violators, the
neighborhood expansion property of odd graphs, and exhaustive counting of
k-sets appearing as cyclic substrings of arrangements of [n].
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .errors import CapacityError, DomainError
from .graphs import GenericGraph, bits, mask_of
from .kneser import KneserGraph, KSubset, build_kneser

ARRANGEMENT_CAP = 9  # (n-1)! arrangements are enumerated exhaustively


def check_max_degree(g: GenericGraph, s, d: int) -> bool:
    """True iff every vertex of s has at most d neighbors inside s."""
    if d < 0:
        raise DomainError("d must be nonnegative")
    mask = s if isinstance(s, int) else mask_of(s)
    if mask >> g.order:
        raise DomainError("s is not a subset of the vertex set")
    for v in bits(mask):
        if (g.adj[v] & mask).bit_count() > d:
            return False
    return True


def check_p3_cover(g: GenericGraph, cover) -> bool:
    """True iff removing ``cover`` leaves no path on 3 vertices.

    Checked directly from the definition (no vertex of the remainder keeps
    two neighbors), independently of check_max_degree.
    """
    mask = cover if isinstance(cover, int) else mask_of(cover)
    if mask >> g.order:
        raise DomainError("cover is not a subset of the vertex set")
    rest = g.full_mask & ~mask
    for v in bits(rest):
        deg = 0
        for u in bits(g.adj[v] & rest):
            deg += 1
            if deg >= 2:
                return False
    return True


@dataclass(frozen=True)
class MatchingResult:
    """Either a matching saturating X, or a Hall violator W with |N(W)| < |W|."""

    matching: tuple | None = None
    violator: frozenset | None = None

    def __post_init__(self):
        if (self.matching is None) == (self.violator is None):
            raise DomainError("exactly one of matching/violator must be set")

    @property
    def saturated(self) -> bool:
        return self.matching is not None


X_SIDE_CAP = 10_000


def find_x_matching(x_side, y_side, edges) -> MatchingResult:
    """Augmenting-path matching saturating X, or an explicit Hall violator."""
    xs = list(x_side)
    if len(xs) > X_SIDE_CAP:
        raise CapacityError(f"matching capped at |X| <= {X_SIDE_CAP}")
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * len(xs) + 200))
    ys = set(y_side)
    nbr: dict = {x: [] for x in xs}
    for x, y in edges:
        if x not in nbr or y not in ys:
            raise DomainError(f"edge ({x!r},{y!r}) off the bipartition")
        if y not in nbr[x]:
            nbr[x].append(y)

    match_y: dict = {}  # y -> x

    def try_augment(x, seen_y) -> bool:
        for y in nbr[x]:
            if y in seen_y:
                continue
            seen_y.add(y)
            if y not in match_y or try_augment(match_y[y], seen_y):
                match_y[y] = x
                return True
        return False

    unmatched = []
    for x in xs:
        if not try_augment(x, set()):
            unmatched.append(x)

    if not unmatched:
        match_x = {x: y for y, x in match_y.items()}
        return MatchingResult(matching=tuple((x, match_x[x]) for x in xs))

    # alternating reachability from an unsaturated x gives the violator
    x0 = unmatched[0]
    w = {x0}
    reached_y: set = set()
    frontier = [x0]
    while frontier:
        nxt = []
        for x in frontier:
            for y in nbr[x]:
                if y in reached_y:
                    continue
                reached_y.add(y)
                partner = match_y.get(y)
                if partner is not None and partner not in w:
                    w.add(partner)
                    nxt.append(partner)
        frontier = nxt
    if len(reached_y) >= len(w):
        raise AssertionError("matching bookkeeping broken: violator is not one")
    return MatchingResult(violator=frozenset(w))


def odd_expansion_check(k: int, subset, g: KneserGraph | None = None) -> bool:
    """Exact test of k*|N(L) n D| >= (k+1)*|L| in the odd graph K(2k+1, k).

    L must be a nonempty subset of the center of element 2k+1; D is the set
    of vertices avoiding 2k+1 (they induce a perfect matching).
    """
    if k < 2:
        raise DomainError("odd graphs need k >= 2")
    n = 2 * k + 1
    if g is None:
        g = build_kneser(n, k)
    elif (g.n, g.k) != (n, k):
        raise DomainError(f"graph is not the odd graph K({n},{k})")

    center = g.center_mask(n)
    bottom = g.full_mask & ~center

    lmask = 0
    for item in subset:
        idx = item if isinstance(item, int) and not isinstance(item, bool) else None
        if idx is None:
            idx = g.vertex_index(item)
        if not 0 <= idx < g.order:
            raise DomainError(f"vertex index {idx} out of range")
        lmask |= 1 << idx
    if lmask == 0:
        raise DomainError("L must be nonempty")
    if lmask & ~center:
        raise DomainError("L must lie inside the center of element 2k+1")

    nbhd = 0
    for v in bits(lmask):
        nbhd |= g.adj[v]
    return k * (nbhd & bottom).bit_count() >= (k + 1) * lmask.bit_count()


@dataclass(frozen=True)
class CyclicArrangement:
    """A cyclic order of [n], normalized so element 1 sits at position 0."""

    order: tuple[int, ...]

    def __post_init__(self):
        n = len(self.order)
        if sorted(self.order) != list(range(1, n + 1)):
            raise DomainError("order must be a permutation of [n]")
        if self.order[0] != 1:
            raise DomainError("normalized arrangements start with element 1")

    @classmethod
    def from_sequence(cls, seq) -> "CyclicArrangement":
        seq = tuple(seq)
        if 1 not in seq:
            raise DomainError("sequence must contain element 1")
        i = seq.index(1)
        return cls(order=seq[i:] + seq[:i])

    def window_masks(self, k: int) -> list[int]:
        """Element masks of the n cyclic windows of length k."""
        n = len(self.order)
        if not 1 <= k <= n:
            raise DomainError(f"window length {k} out of range")
        doubled = self.order + self.order
        return [
            sum(1 << (e - 1) for e in doubled[s : s + k]) for s in range(n)
        ]


def all_arrangements(n: int):
    """Yield all (n-1)! normalized cyclic arrangements of [n]."""
    if n < 1:
        raise DomainError("n must be positive")
    if n > ARRANGEMENT_CAP:
        raise CapacityError(f"arrangement enumeration capped at n <= {ARRANGEMENT_CAP}")
    for rest in permutations(range(2, n + 1)):
        yield CyclicArrangement(order=(1,) + rest)


def _family_masks(family, n: int, k: int) -> frozenset:
    masks = set()
    for member in family:
        if isinstance(member, KSubset):
            mask = member.mask
        elif isinstance(member, int):
            mask = member
        else:
            mask = sum(1 << (e - 1) for e in member)
        if mask >> n or mask.bit_count() != k:
            raise DomainError(f"family member {member!r} is not a k-subset of [n]")
        masks.add(mask)
    return frozenset(masks)


def substrings_in_arrangement(c: CyclicArrangement, family, k: int) -> int:
    """How many family members occupy k cyclically consecutive positions of c."""
    n = len(c.order)
    masks = _family_masks(family, n, k)
    return sum(1 for w in c.window_masks(k) if w in masks)


def max_substrings(n: int, k: int, family) -> tuple[int, CyclicArrangement]:
    """Maximum substring count over all (n-1)! arrangements, with a witness."""
    masks = _family_masks(family, n, k)
    best = -1
    witness = None
    for c in all_arrangements(n):
        count = sum(1 for w in c.window_masks(k) if w in masks)
        if count > best:
            best, witness = count, c
    return best, witness


def double_count_identity(n: int, k: int, family) -> bool:
    """Each k-set is a substring of exactly k!(n-k)! arrangements.

    Summing substring counts over all (n-1)! arrangements must therefore
    give |family| * k! * (n-k)!.  This is an exact combinatorial identity;
    returning False would indicate an implementation bug.
    """
    masks = _family_masks(family, n, k)
    total = 0
    for c in all_arrangements(n):
        total += sum(1 for w in c.window_masks(k) if w in masks)
    return total == len(masks) * factorial(k) * factorial(n - k)
