"""Simple graphs as immutable per-vertex adjacency bitsets.

A graph on ``order`` vertices stores, for each vertex ``v``, an integer
``adj[v]`` whose bit ``u`` is set iff ``u`` and ``v`` are adjacent.  Vertex
sets throughout the package are plain integers used as bitmasks over the
vertex indices ``0 .. order-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError


def bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class GenericGraph:
    """Arbitrary simple graph; adjacency is symmetric and irreflexive."""

    order: int
    adj: tuple[int, ...]
    # for induced subgraphs: position i holds the vertex index in the parent
    parent_index: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.order:
            raise DomainError("adjacency length does not match order")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Yield edges (u, v) with u < v."""
        for u in range(self.order):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def max_degree_in(self, s: int) -> int:
        """Largest number of neighbours inside ``s`` over vertices of ``s``."""
        best = 0
        for v in bits(s):
            d = (self.adj[v] & s).bit_count()
            if d > best:
                best = d
        return best


def graph_from_edges(order: int, edges) -> GenericGraph:
    adj = [0] * order
    for u, v in edges:
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise DomainError(f"edge ({u},{v}) out of range for order {order}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return GenericGraph(order=order, adj=tuple(adj))


def induced_subgraph(g: GenericGraph, s: int) -> GenericGraph:
    """Subgraph induced by the vertex bitset ``s``, with an index map back to g."""
    if s >> g.order:
        raise DomainError("vertex set is not a subset of the graph")
    keep = list(bits(s))
    pos = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << pos[u]
        adj.append(row)
    return GenericGraph(order=len(keep), adj=tuple(adj), parent_index=tuple(keep))


def write_dimacs(g: GenericGraph) -> str:
    """DIMACS edge format, 1-based vertex indices."""
    lines = [f"p edge {g.order} {g.edge_count()}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> GenericGraph:
    order = None
    declared_edges = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] != "edge":
                raise DomainError(f"line {lineno}: bad problem line {line!r}")
            order, declared_edges = int(tok[2]), int(tok[3])
        elif tok[0] == "e":
            if order is None:
                raise DomainError(f"line {lineno}: edge before problem line")
            u, v = int(tok[1]), int(tok[2])
            if not (1 <= u <= order and 1 <= v <= order):
                raise DomainError(f"line {lineno}: vertex out of range")
            edges.append((u - 1, v - 1))
        else:
            raise DomainError(f"line {lineno}: unknown record {tok[0]!r}")
    if order is None:
        raise DomainError("missing problem line")
    g = graph_from_edges(order, edges)
    if declared_edges is not None and g.edge_count() != declared_edges:
        raise DomainError(
            f"header declares {declared_edges} edges, file defines {g.edge_count()}"
        )
    return g
