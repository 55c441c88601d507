import json
import random

import pytest

from kneserdiss import (
    CapacityError,
    DomainError,
    build_kneser,
    center,
    check_max_degree,
    edge_nonneighbors,
    enumerate_k_subsets,
    induced_subgraph,
    kneser_from_json,
    kneser_to_json,
    read_dimacs,
    write_dimacs,
)
from kneserdiss.graphs import bits
from support import pascal_binom, set_based_kneser


def elements(subsets):
    return [s.elements for s in subsets]


def test_enumerate_4_2_full_listing():
    got = elements(enumerate_k_subsets(4, 2))
    assert got == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def test_enumerate_empty_subset():
    got = enumerate_k_subsets(5, 0)
    assert len(got) == 1 and got[0].mask == 0


def test_enumerate_count_matches_pascal_oracle():
    assert len(enumerate_k_subsets(10, 5)) == pascal_binom(10, 5) == 252


def test_enumerate_order_and_endpoints():
    subs = enumerate_k_subsets(7, 3)
    elems = elements(subs)
    assert elems == sorted(elems)
    assert len(set(elems)) == len(elems)
    assert elems[0] == (1, 2, 3) and elems[-1] == (5, 6, 7)
    assert all(len(s) == 3 for s in subs)


def test_enumerate_capacity_errors():
    with pytest.raises(CapacityError):
        enumerate_k_subsets(65, 2)
    with pytest.raises(CapacityError):
        enumerate_k_subsets(40, 20, cap=1000)
    with pytest.raises(DomainError):
        enumerate_k_subsets(3, 5)


def test_vertex_cap_env_override(monkeypatch):
    monkeypatch.setenv("KNESER_VERTEX_CAP", "5")
    with pytest.raises(CapacityError):
        enumerate_k_subsets(4, 2)
    monkeypatch.setenv("KNESER_VERTEX_CAP", "6")
    assert len(enumerate_k_subsets(4, 2)) == 6


def test_build_petersen():
    g = build_kneser(5, 2)
    assert g.order == 10
    assert g.edge_count() == 15
    assert all(g.degree(v) == 3 for v in range(10))


def test_build_4_2_is_perfect_matching():
    g = build_kneser(4, 2)
    assert g.order == 6
    assert sorted(g.edges()) == [(0, 5), (1, 4), (2, 3)]


def test_build_7_3_regularity():
    g = build_kneser(7, 3)
    assert g.order == 35
    assert all(g.degree(v) == pascal_binom(4, 3) for v in range(35))


def test_build_domain_error():
    with pytest.raises(DomainError):
        build_kneser(3, 2)
    with pytest.raises(DomainError):
        build_kneser(5, 0)


def test_graph_invariants_all_pairs_at_scale():
    # symmetry, irreflexivity, regularity and the disjointness law across
    # every vertex pair of an 8568-vertex instance, vectorized
    import numpy as np

    g = build_kneser(18, 5)
    nbytes = (g.order + 7) // 8
    packed = np.frombuffer(
        b"".join(row.to_bytes(nbytes, "little") for row in g.adj), dtype=np.uint8
    ).reshape(g.order, nbytes)
    mat = np.unpackbits(packed, axis=1, bitorder="little")[:, : g.order]
    assert (mat == mat.T).all()
    assert not mat.diagonal().any()
    assert (mat.sum(axis=1) == pascal_binom(13, 5)).all()
    masks = np.array([v.mask for v in g.vertices], dtype=np.uint64)
    for start in range(0, g.order, 1024):
        chunk = masks[start : start + 1024]
        # nonzero masks never self-pair, so no diagonal fixup is needed
        disjoint = (chunk[:, None] & masks[None, :]) == 0
        assert (disjoint == mat[start : start + 1024].astype(bool)).all()


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (6, 2), (7, 3), (8, 3), (9, 4)])
def test_graph_invariants_against_set_oracle(n, k):
    g = build_kneser(n, k)
    assert g.order == pascal_binom(n, k)
    deg = pascal_binom(n - k, k)
    verts, oracle_adj = set_based_kneser(n, k)
    for v in range(g.order):
        assert g.degree(v) == deg
        assert not g.adj[v] >> v & 1  # irreflexive
        assert sorted(bits(g.adj[v])) == oracle_adj[v]
    for u in range(g.order):
        for v in range(g.order):
            assert (g.adj[u] >> v & 1) == (g.adj[v] >> u & 1)


def test_center_petersen():
    g = build_kneser(5, 2)
    cert = center(g, 1)
    assert set(cert.members) == {(1, 2), (1, 3), (1, 4), (1, 5)}
    assert len(cert) == 4


def test_center_8_3_size_matches_oracle():
    g = build_kneser(8, 3)
    assert len(center(g, 7)) == pascal_binom(7, 2) == 21


def test_center_is_independent():
    for n, k in [(4, 2), (5, 2), (7, 3)]:
        g = build_kneser(n, k)
        for i in (1, n):
            mask = g.center_mask(i)
            assert check_max_degree(g, mask, 0)
    g = build_kneser(4, 2)
    assert set(center(g, 3).members) == {(1, 3), (2, 3), (3, 4)}


def test_center_domain_error():
    g = build_kneser(5, 2)
    with pytest.raises(DomainError):
        center(g, 0)
    with pytest.raises(DomainError):
        center(g, 6)


def test_edge_nonneighbors_petersen():
    g = build_kneser(5, 2)
    u = edge_nonneighbors(g, (1, 2), (3, 4))
    got = set(g.vertex_set_elements(u))
    assert got == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_edge_nonneighbors_8_3_against_enumeration():
    g = build_kneser(8, 3)
    u = edge_nonneighbors(g, (1, 2, 3), (4, 5, 6))
    x, y = {1, 2, 3}, {4, 5, 6}
    expect = [
        v.elements
        for v in g.vertices
        if set(v.elements) & x and set(v.elements) & y
        and set(v.elements) not in (x, y)
    ]
    assert sorted(g.vertex_set_elements(u)) == sorted(expect)
    assert u.bit_count() == 36


def test_edge_nonneighbors_4_2():
    g = build_kneser(4, 2)
    u = edge_nonneighbors(g, (1, 2), (3, 4))
    assert set(g.vertex_set_elements(u)) == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_edge_nonneighbors_requires_adjacency():
    g = build_kneser(5, 2)
    with pytest.raises(DomainError):
        edge_nonneighbors(g, (1, 2), (2, 3))


def test_edge_nonneighbors_size_is_edge_invariant():
    rng = random.Random(7)
    for n, k in [(5, 2), (8, 3), (9, 4)]:
        g = build_kneser(n, k)
        edges = list(g.edges())
        sizes = {
            edge_nonneighbors(g, u, v).bit_count()
            for u, v in rng.sample(edges, min(20, len(edges)))
        }
        assert len(sizes) == 1


def test_induced_subgraph_kneser_restriction():
    g = build_kneser(7, 3)
    keep = 0
    for i, v in enumerate(g.vertices):
        if 7 not in v.elements:
            keep |= 1 << i
    h = induced_subgraph(g, keep)
    # the restriction is a copy of K(6,3): a perfect matching on 20 vertices
    assert h.order == 20
    assert all(h.degree(v) == 1 for v in range(h.order))
    assert h.parent_index is not None and len(h.parent_index) == 20


def test_induced_subgraph_trivial_cases():
    g = build_kneser(5, 2)
    assert induced_subgraph(g, 0).order == 0
    h = induced_subgraph(g, g.center_mask(2))
    assert h.order == 4 and h.edge_count() == 0


def test_dimacs_round_trip():
    g = build_kneser(5, 2)
    text = write_dimacs(g)
    assert text.splitlines()[0] == "p edge 10 15"
    h = read_dimacs(text)
    assert h.order == g.order and h.adj == g.adj


def test_dimacs_rejects_garbage():
    with pytest.raises(DomainError):
        read_dimacs("p edge 2 1\nq 1 2\n")
    with pytest.raises(DomainError):
        read_dimacs("e 1 2\n")
    with pytest.raises(DomainError):
        read_dimacs("p edge 2 5\ne 1 2\n")


def test_json_round_trip():
    g = build_kneser(6, 2)
    h = kneser_from_json(kneser_to_json(g))
    assert (h.n, h.k) == (6, 2) and h.adj == g.adj


def test_json_rejects_noncanonical_vertices():
    g = build_kneser(4, 2)
    doc = json.loads(kneser_to_json(g))
    doc["vertices"][0], doc["vertices"][1] = doc["vertices"][1], doc["vertices"][0]
    with pytest.raises(DomainError):
        kneser_from_json(json.dumps(doc))
    with pytest.raises(DomainError):
        kneser_from_json("{not json")
