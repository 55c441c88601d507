"""Closed-form bounds and known exact values for the dissociation number of K(n, k).

Everything here is exact integer or rational arithmetic.  Each bound comes
from one of three places: the independence number C(n-1, k-1) of the Kneser
graph, counting arguments around a saturated edge of a dissociation set, or
cyclic-arrangement (Katona-style) double counting.  A BoundReport collects
every bound applicable to a given (n, k) together with the best-known
interval and, where a theorem settles it, the exact value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError, SearchFailure

# threshold scan gives up past this point (never reached for sane k)
_SCAN_SLACK = 64


def binom(n: int, k: int) -> int:
    """Exact C(n, k); zero when k > n.  Python ints never wrap silently.

    Unlike graph construction, bound arithmetic has no 64-element encoding
    limit; reports stay meaningful for ground sets too big to build.
    """
    if n < 0 or k < 0:
        raise DomainError(f"binom needs nonnegative arguments, got ({n},{k})")
    return comb(n, k)


def _require_kneser(n: int, k: int, min_k: int = 1) -> None:
    if k < min_k or n < 2 * k:
        raise DomainError(f"need n >= 2k >= {2 * min_k}, got n={n} k={k}")


def alpha_kneser(n: int, k: int) -> int:
    """Independence number of K(n, k): every center has this size."""
    _require_kneser(n, k)
    return binom(n - 1, k - 1)


def sandwich(alpha: int) -> tuple[int, int]:
    """The generic two-sided bound diss between alpha and 2*alpha."""
    if alpha < 0:
        raise DomainError("alpha must be nonnegative")
    return alpha, 2 * alpha


def subgraph_lower(n: int, k: int) -> int:
    """C(2k, k): the k-subsets of [2k] induce a perfect matching in K(n, k)."""
    _require_kneser(n, k)
    return binom(2 * k, k)


def edge_nonneighbor_count(n: int, k: int) -> int:
    """Number of vertices meeting both endpoints of an edge of K(n, k).

    Counted by composition: a vertex outside N[x] u N[y] takes i elements
    from outside x u y, j >= 1 from x and the remaining k-i-j >= 1 from y.
    """
    _require_kneser(n, k, min_k=2)
    total = 0
    for i in range(0, k - 1):
        outer = binom(n - 2 * k, i)
        if outer == 0:
            continue
        inner = sum(binom(k, j) * binom(k, k - j - i) for j in range(1, k - i))
        total += outer * inner
    return total


def edge_nonneighbor_closed_form(n: int, k: int) -> int:
    """Same count via inclusion-exclusion on the two closed neighborhoods."""
    _require_kneser(n, k, min_k=2)
    return binom(n, k) - 2 * binom(n - k, k) + binom(n - 2 * k, k)


def nonindependent_upper(n: int, k: int) -> int:
    """Upper bound on any dissociation set that contains an edge.

    Such a set lies inside the edge itself plus the vertices meeting both
    endpoints, hence has at most 2 + edge_nonneighbor_count(n, k) vertices.
    """
    return 2 + edge_nonneighbor_count(n, k)


def combined_upper(n: int, k: int) -> int:
    """Sound upper bound for diss(K(n,k)) from the independent-or-not split."""
    return max(alpha_kneser(n, k), nonindependent_upper(n, k))


def alpha_dominance_threshold(k: int) -> int:
    """Smallest n with alpha >= nonindependent_upper, by ascending scan.

    From this point on a maximum dissociation set must be independent.  The
    scan also verifies the inequality stays true over the whole scanned
    range instead of assuming monotonicity.
    """
    if k < 2:
        raise DomainError("threshold defined for k >= 2")
    cap = 10 * k + _SCAN_SLACK
    first = None
    for n in range(2 * k, cap + 1):
        holds = alpha_kneser(n, k) >= nonindependent_upper(n, k)
        if first is None and holds:
            first = n
        elif first is not None and not holds:
            raise SearchFailure(
                f"alpha dominance not monotone: holds at {first}, fails at {n}"
            )
    if first is None:
        raise SearchFailure(f"no dominance threshold for k={k} up to n={cap}")
    return first


def _katona_large_r_fraction(n: int, k: int) -> Fraction | None:
    # applicable when any two disjoint k-windows leave >= k-1 positions over
    if n <= 3 * k - 2:
        return None
    return Fraction(k + 1, k) * binom(n - 1, k - 1)


def _katona_small_r_fraction(n: int, k: int) -> Fraction | None:
    r = n - 2 * k
    if not 1 <= r <= k - 2:
        return None
    return Fraction(2 * (r * k + 2 * r + k + 1), k * (2 * r + 1)) * binom(n - 1, k - 1)


def katona_upper_large_r(n: int, k: int) -> int | None:
    """Cyclic-window bound for n > 3k-2: floor((k+1)/k * C(n-1,k-1)).

    Returns None when the precondition fails (bound not applicable).
    """
    _require_kneser(n, k, min_k=2)
    frac = _katona_large_r_fraction(n, k)
    return None if frac is None else frac.numerator // frac.denominator


def katona_upper_small_r(n: int, k: int) -> int | None:
    """Cyclic-window bound for 1 <= n-2k <= k-2, exact rational then floored.

    The double-point frequency enters as k/(2r+1) without rounding up; the
    report keeps the raw rational of this (slightly weaker) displayed form.
    """
    _require_kneser(n, k, min_k=2)
    frac = _katona_small_r_fraction(n, k)
    return None if frac is None else frac.numerator // frac.denominator


def alpha_equality_lower(k: int) -> int:
    """No n below 2k+2 can have diss = alpha: C(2k,k) > C(n-1,k-1) there."""
    if k < 2:
        raise DomainError("defined for k >= 2")
    return 2 * k + 2


# sources for known exact values; names describe the closing argument
SRC_PAIRS = "pairs_closed_form"            # k=2: max(n-1, 6)
SRC_TRIPLES = "triples_equal_independence"  # k=3, n>=8: alpha
SRC_MATCHING = "perfect_matching_graph"     # n=2k: whole vertex set
SRC_ODD = "odd_graph"                       # n=2k+1: C(2k,k)
SRC_CLOSURE = "bound_closure"               # best lower meets combined upper


def known_exact(n: int, k: int) -> tuple[int, str] | None:
    """Exact diss(K(n,k)) where a theorem or bound closure settles it."""
    _require_kneser(n, k, min_k=2)
    if k == 2:
        return max(n - 1, 6), SRC_PAIRS
    if k == 3 and n >= 8:
        return binom(n - 1, 2), SRC_TRIPLES
    if n == 2 * k:
        return binom(2 * k, k), SRC_MATCHING
    if n == 2 * k + 1:
        return binom(2 * k, k), SRC_ODD
    lo = max(alpha_kneser(n, k), subgraph_lower(n, k))
    if combined_upper(n, k) == lo:
        return lo, SRC_CLOSURE
    return None


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int
    raw: Fraction | None = None

    def as_dict(self) -> dict:
        d = {"name": self.name, "value": self.value}
        if self.raw is not None:
            d["raw"] = str(self.raw)
        return d


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    r: int
    alpha: int
    lower_bounds: tuple[BoundEntry, ...]
    upper_bounds: tuple[BoundEntry, ...]
    known_exact: tuple[int, str] | None
    best_lower: int
    best_upper: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alpha": self.alpha,
            "lower": [b.as_dict() for b in self.lower_bounds],
            "upper": [b.as_dict() for b in self.upper_bounds],
            "exact": (
                {"value": self.known_exact[0], "source": self.known_exact[1]}
                if self.known_exact
                else None
            ),
            "interval": [self.best_lower, self.best_upper],
        }


def report(n: int, k: int) -> BoundReport:
    """All applicable bounds for (n, k) plus the best-known interval."""
    _require_kneser(n, k, min_k=2)
    alpha = alpha_kneser(n, k)

    count = edge_nonneighbor_count(n, k)
    if count != edge_nonneighbor_closed_form(n, k):
        raise AssertionError(f"edge non-neighbor formulas disagree at ({n},{k})")

    lower = [
        BoundEntry("independence_number", alpha),
        BoundEntry("matching_subgraph", subgraph_lower(n, k)),
    ]
    upper = [
        BoundEntry("twice_independence", 2 * alpha),
        BoundEntry("case_split", max(alpha, 2 + count)),
    ]
    frac = _katona_large_r_fraction(n, k)
    if frac is not None:
        upper.append(
            BoundEntry("katona_large_r", frac.numerator // frac.denominator, frac)
        )
    frac = _katona_small_r_fraction(n, k)
    if frac is not None:
        upper.append(
            BoundEntry("katona_small_r", frac.numerator // frac.denominator, frac)
        )

    # the interval is formed from the bound lists alone; known_exact rides
    # alongside so that solver pruning never quotes the value it must prove
    best_lower = max(b.value for b in lower)
    best_upper = min(b.value for b in upper)
    exact = known_exact(n, k)
    if best_lower > best_upper:
        raise AssertionError(f"inconsistent bounds for ({n},{k})")

    return BoundReport(
        n=n,
        k=k,
        r=n - 2 * k,
        alpha=alpha,
        lower_bounds=tuple(lower),
        upper_bounds=tuple(upper),
        known_exact=exact,
        best_lower=best_lower,
        best_upper=best_upper,
    )
