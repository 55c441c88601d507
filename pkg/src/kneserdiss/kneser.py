"""Kneser graphs with a bit-exact vertex encoding.

Vertices of K(n, k) are the k-element subsets of {1, ..., n}, encoded as
n-bit masks with bit i-1 set iff element i is in the subset, and ordered
lexicographically by sorted element list.  Two vertices are adjacent iff
their masks are disjoint, so the whole adjacency test is one AND.  The
ground set is capped at n <= 64 so a subset always fits a machine word.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb

from .certificates import Certificate
from .errors import CapacityError, DomainError
from .graphs import GenericGraph, bits

MAX_GROUND_SET = 64
DEFAULT_VERTEX_CAP = 2_000_000
VERTEX_CAP_ENV = "KNESER_VERTEX_CAP"

# above this order, adjacency rows are built with vectorized mask arithmetic
_BULK_BUILD_THRESHOLD = 1024


def vertex_cap() -> int:
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None:
        return DEFAULT_VERTEX_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise CapacityError(f"{VERTEX_CAP_ENV}={raw!r} is not an integer") from exc
    if cap <= 0:
        raise CapacityError(f"{VERTEX_CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class KSubset:
    """A k-subset of {1, ..., ground_n} stored as a bit mask."""

    mask: int
    ground_n: int

    def __post_init__(self):
        if self.ground_n > MAX_GROUND_SET:
            raise CapacityError(f"ground set {self.ground_n} exceeds {MAX_GROUND_SET}")
        if not 0 <= self.mask < (1 << self.ground_n):
            raise DomainError("mask outside the ground set")

    @classmethod
    def from_elements(cls, elements, ground_n: int) -> "KSubset":
        mask = 0
        for e in elements:
            if not 1 <= e <= ground_n:
                raise DomainError(f"element {e} outside [1, {ground_n}]")
            mask |= 1 << (e - 1)
        return cls(mask=mask, ground_n=ground_n)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(b + 1 for b in bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def disjoint(self, other: "KSubset") -> bool:
        return self.mask & other.mask == 0

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def enumerate_k_subsets(n: int, k: int, cap: int | None = None) -> list[KSubset]:
    """All k-subsets of [n] in lexicographic order of their element lists."""
    if n < 0 or k < 0 or k > n:
        raise DomainError(f"need 0 <= k <= n, got n={n} k={k}")
    if n > MAX_GROUND_SET:
        raise CapacityError(f"ground set {n} exceeds the {MAX_GROUND_SET}-bit encoding")
    count = comb(n, k)
    limit = cap if cap is not None else vertex_cap()
    if count > limit:
        raise CapacityError(f"C({n},{k}) = {count} exceeds the vertex cap {limit}")
    return [
        KSubset(mask=sum(1 << (e - 1) for e in combo), ground_n=n)
        for combo in combinations(range(1, n + 1), k)
    ]


@dataclass(frozen=True)
class KneserGraph(GenericGraph):
    """K(n, k): k-subsets of [n], adjacent iff disjoint.  Immutable."""

    n: int = 0
    k: int = 0
    vertices: tuple[KSubset, ...] = ()

    @cached_property
    def _index(self) -> dict[int, int]:
        return {v.mask: i for i, v in enumerate(self.vertices)}

    def vertex_index(self, vertex) -> int:
        """Index of a vertex given as an index, KSubset, or element iterable."""
        if isinstance(vertex, int):
            if not 0 <= vertex < self.order:
                raise DomainError(f"vertex index {vertex} out of range")
            return vertex
        if isinstance(vertex, KSubset):
            mask = vertex.mask
        else:
            mask = KSubset.from_elements(vertex, self.n).mask
        try:
            return self._index[mask]
        except KeyError:
            raise DomainError(f"{sorted_elements(mask)} is not a vertex of K({self.n},{self.k})") from None

    def center_mask(self, i: int) -> int:
        """Bitset of all vertices whose subset contains element i."""
        if not 1 <= i <= self.n:
            raise DomainError(f"element {i} outside [1, {self.n}]")
        bit = 1 << (i - 1)
        m = 0
        for idx, v in enumerate(self.vertices):
            if v.mask & bit:
                m |= 1 << idx
        return m

    def vertex_set_elements(self, s: int) -> tuple[tuple[int, ...], ...]:
        """Element tuples of the vertices in bitset ``s``."""
        return tuple(self.vertices[i].elements for i in bits(s))


def sorted_elements(mask: int) -> list[int]:
    return [b + 1 for b in bits(mask)]


def _adjacency_rows(masks: list[int]) -> list[int]:
    order = len(masks)
    if order <= _BULK_BUILD_THRESHOLD:
        rows = []
        for i, mi in enumerate(masks):
            row = 0
            for j, mj in enumerate(masks):
                if i != j and mi & mj == 0:
                    row |= 1 << j
            rows.append(row)
        return rows
    import numpy as np

    arr = np.asarray(masks, dtype=np.uint64)
    rows = []
    for i in range(order):
        disjoint = (arr & arr[i]) == 0
        packed = np.packbits(disjoint, bitorder="little").tobytes()
        rows.append(int.from_bytes(packed, "little"))
    return rows


def build_kneser(n: int, k: int, cap: int | None = None) -> KneserGraph:
    """Construct K(n, k).  Requires n >= 2k >= 2 and C(n,k) within the cap."""
    if k < 1 or n < 2 * k:
        raise DomainError(f"K({n},{k}) needs n >= 2k >= 2")
    verts = enumerate_k_subsets(n, k, cap=cap)
    adj = _adjacency_rows([v.mask for v in verts])
    return KneserGraph(
        order=len(verts), adj=tuple(adj), n=n, k=k, vertices=tuple(verts)
    )


def center(g: KneserGraph, i: int) -> Certificate:
    """The independent set of all vertices containing element i."""
    members = g.vertex_set_elements(g.center_mask(i))
    return Certificate(d=0, members=members, provenance="heuristic", n=g.n, k=g.k)


def edge_nonneighbors(g: KneserGraph, x, y) -> int:
    """Vertices outside N[x] u N[y] for an adjacent pair x, y, as a bitset.

    Every returned vertex meets both x and y, so together with {x, y} these
    are the only vertices a dissociation set containing the edge xy may use.
    """
    xi, yi = g.vertex_index(x), g.vertex_index(y)
    if not g.has_edge(xi, yi):
        raise DomainError("x and y must be adjacent (disjoint subsets)")
    closed = g.adj[xi] | g.adj[yi] | (1 << xi) | (1 << yi)
    return g.full_mask & ~closed


def certificate_mask(g: KneserGraph, cert: Certificate) -> int:
    """Vertex bitset of a certificate's members on graph g."""
    m = 0
    for member in cert.members:
        m |= 1 << g.vertex_index(member)
    return m


def kneser_to_json(g: KneserGraph) -> str:
    return json.dumps(
        {"n": g.n, "k": g.k, "vertices": [list(v.elements) for v in g.vertices]}
    )


def kneser_from_json(text: str) -> KneserGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(f"malformed graph JSON: {exc}") from exc
    try:
        n, k = int(doc["n"]), int(doc["k"])
        listed = [tuple(v) for v in doc["vertices"]]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"graph JSON missing field: {exc}") from exc
    g = build_kneser(n, k)
    canonical = [v.elements for v in g.vertices]
    if listed != canonical:
        raise DomainError("vertex list does not match canonical enumeration")
    return g
