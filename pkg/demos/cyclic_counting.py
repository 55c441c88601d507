"""Cyclic-arrangement counting behind the sharper upper bounds.

A k-subset "appears as a substring" of a cyclic arrangement of [n] when
its elements sit in k consecutive positions.  Two facts are checked by
exhaustive enumeration here: each k-set appears in exactly k!(n-k)! of the
(n-1)! arrangements, and an exactly-computed maximum dissociation set of
K(n,2) never appears more than 3 times in any single arrangement.
"""

from itertools import combinations
from math import factorial

from kneserdiss import (
    all_arrangements,
    build_kneser,
    double_count_identity,
    max_substrings,
    solve,
    substrings_in_arrangement,
)

print("=== double counting: one set, all arrangements of [5] ===")
family = [(1, 2)]
total = sum(substrings_in_arrangement(c, family, 2) for c in all_arrangements(5))
print(f"{{1,2}} appears {total} times across 4! arrangements; "
      f"2!*3! = {factorial(2) * factorial(3)}")
assert double_count_identity(5, 2, family)

print()
print("=== the identity holds for arbitrary families ===")
for n, k in ((5, 2), (6, 2), (6, 3), (7, 3)):
    pool = list(combinations(range(1, n + 1), k))
    family = pool[:: max(1, len(pool) // 5)]
    ok = double_count_identity(n, k, family)
    print(f"n={n} k={k} |family|={len(family)}: identity {'holds' if ok else 'FAILS'}")

print()
print("=== substring ceiling for maximum dissociation sets, k=2 ===")
for n in (5, 6, 7):
    g = build_kneser(n, 2)
    res = solve(g, 1)
    family = g.vertex_set_elements(res.witness)
    top, witness = max_substrings(n, 2, family)
    print(f"K({n},2): max set of size {res.best_size} appears at most {top} "
          f"times (ceiling 3); extremal arrangement {witness.order}")
