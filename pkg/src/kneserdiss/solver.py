"""Exact maximum bounded-degree induced subgraphs by branch and bound.

``solve(g, d)`` finds a largest vertex set whose induced subgraph has
maximum degree at most d (d=0: independent set, d=1: dissociation set).
Search state per vertex is undecided / excluded / included-unsaturated /
included-saturated.  The d=1 engine works purely on bitmasks: once an
included vertex saturates, its whole undecided neighborhood is excluded,
and an undecided vertex adjacent to two included vertices can never be
picked, so every undecided vertex has at most one included neighbor.  The
counting bound and the exact endgame closure both fall out of that
invariant.  A slower counter-based engine covers arbitrary d.

``solve_kneser`` adds what is only sound for Kneser graphs: the canonical
first vertex may be forced into the solution (vertex-transitivity), the
incumbent is seeded with the best known construction, and the root is
capped by the bound report's interval.
"""

from __future__ import annotations

import multiprocessing as mp
import time
from dataclasses import dataclass
from itertools import combinations
from math import comb

from . import bounds
from .certificates import Certificate
from .certify import check_max_degree
from .errors import CapacityError, DomainError
from .graphs import GenericGraph, bits
from .kneser import KneserGraph, build_kneser

BRUTE_FORCE_CAP = 26
_SYNC_INTERVAL = 2048  # nodes between time/shared-incumbent checks


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_time: float | None = None  # seconds
    thread_count: int = 1

    def __post_init__(self):
        if self.thread_count < 1:
            raise DomainError("thread_count must be >= 1")


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class SolveResult:
    best_size: int
    witness: int  # vertex bitset
    optimal: bool
    nodes_explored: int
    wall_time: float
    bound_source: str | None = None

    def to_json_dict(self, g: KneserGraph | None = None) -> dict:
        if g is not None:
            witness = [list(e) for e in g.vertex_set_elements(self.witness)]
        else:
            witness = [v + 1 for v in bits(self.witness)]
        return {
            "size": self.best_size,
            "witness": witness,
            "optimal": self.optimal,
            "nodes": self.nodes_explored,
            "millis": int(self.wall_time * 1000),
        }


# ---------------------------------------------------------------------------
# d = 1 engine (bitmask state: free, unsat, seen, chosen, count)
# ---------------------------------------------------------------------------


def _deg1_root(adj, order, fixed: int | None):
    full = (1 << order) - 1
    if fixed is None:
        return (full, 0, 0, 0, 0)
    vbit = 1 << fixed
    free = full & ~vbit
    return (free, vbit, adj[fixed] & free, vbit, 1)


def _branch_vertex(adj, free):
    """Undecided vertex of maximum undecided-degree, lowest index on ties."""
    best_v, best_d = -1, -1
    m = free
    while m:
        lsb = m & -m
        v = lsb.bit_length() - 1
        d = (adj[v] & free).bit_count()
        if d > best_d:
            best_d, best_v = d, v
        m ^= lsb
    return best_v, best_d


def _deg1_children(adj, state):
    """Include/exclude children for the branch vertex, or None at the endgame."""
    free, unsat, seen, chosen, count = state
    v, bd = _branch_vertex(adj, free)
    if bd <= 0:
        # no undecided-undecided edges left: the closure is exact
        return None
    vbit = 1 << v
    out = []
    ku = adj[v] & unsat
    if ku == 0:
        # v starts a new unsaturated inclusion; undecided neighbors that
        # already touch an unsaturated vertex would reach two and go out
        nbf = adj[v] & free
        nfree = free & ~vbit & ~(nbf & seen)
        out.append(
            (nfree, unsat | vbit, seen | (adj[v] & nfree), chosen | vbit, count + 1)
        )
    elif ku.bit_count() == 1:
        # v pairs up with its unique unsaturated neighbor; both saturate
        u = ku.bit_length() - 1
        nfree = free & ~vbit & ~adj[v] & ~adj[u]
        out.append((nfree, unsat & ~ku, seen & nfree, chosen | vbit, count + 1))
    out.append((free & ~vbit, unsat, seen, chosen, count))
    return out


def _deg1_closure(adj, state):
    """Exact optimum once no undecided-undecided edges remain."""
    free, unsat, seen, chosen, count = state
    take = free & ~seen
    size = count + take.bit_count()
    wit = chosen | take
    m = unsat
    while m:
        lsb = m & -m
        u = lsb.bit_length() - 1
        m ^= lsb
        su = adj[u] & seen & free
        if su:
            # one partner per unsaturated vertex; lowest index, deterministic
            size += 1
            wit |= su & -su
    return size, wit


def _deg1_bound(state):
    free, unsat, seen, _, count = state
    f = free.bit_count()
    sc = (seen & free).bit_count()
    return count + (f - sc) + min(sc, unsat.bit_count())


# ---------------------------------------------------------------------------
# general-d engine (free, caps tuple, chosen, count)
# ---------------------------------------------------------------------------


def _degd_root(adj, order, d, fixed: int | None):
    full = (1 << order) - 1
    caps = [d] * order
    if fixed is None:
        return (full, tuple(caps), 0, 0)
    free = full & ~(1 << fixed)
    nfree = free
    for u in bits(adj[fixed] & free):
        caps[u] -= 1
        if caps[u] < 0:
            nfree &= ~(1 << u)
    if caps[fixed] == 0:
        nfree &= ~adj[fixed]
    return (nfree, tuple(caps), 1 << fixed, 1)


def _degd_children(adj, d, state):
    free, caps, chosen, count = state
    v, _ = _branch_vertex(adj, free)
    if v < 0:
        return None
    vbit = 1 << v
    out = []
    feasible = caps[v] >= 0
    if feasible:
        for u in bits(adj[v] & chosen):
            if caps[u] < 1:
                feasible = False
                break
    if feasible:
        ncaps = list(caps)
        nfree = free & ~vbit
        for u in bits(adj[v] & (chosen | nfree)):
            ncaps[u] -= 1
            if ncaps[u] < 0 and nfree >> u & 1:
                nfree &= ~(1 << u)
        # saturated inclusions forbid their whole undecided neighborhood
        if ncaps[v] == 0:
            nfree &= ~adj[v]
        for u in bits(adj[v] & chosen):
            if ncaps[u] == 0:
                nfree &= ~adj[u]
        out.append((nfree, tuple(ncaps), chosen | vbit, count + 1))
    out.append((free & ~vbit, caps, chosen, count))
    return out


def _clique_cover_count(adj, free):
    """Greedy clique partition size: an upper bound on independence number."""
    count = 0
    rem = free
    while rem:
        lsb = rem & -rem
        v = lsb.bit_length() - 1
        clique = lsb
        cand = adj[v] & rem
        while cand:
            ul = cand & -cand
            clique |= ul
            cand &= adj[ul.bit_length() - 1]
        rem &= ~clique
        count += 1
    return count


def _degd_bound(adj, d, state):
    free, _, _, count = state
    f = free.bit_count()
    return count + min(f, (d + 1) * _clique_cover_count(adj, free))


# ---------------------------------------------------------------------------
# search driver, shared by both engines
# ---------------------------------------------------------------------------


class _Outcome:
    __slots__ = ("found", "witness", "nodes", "completed")

    def __init__(self, found, witness, nodes, completed):
        self.found = found
        self.witness = witness
        self.nodes = nodes
        self.completed = completed


def _run_search(adj, d, root, prune_seed, max_nodes, deadline, shared, stop_at):
    """Depth-first search from ``root``; returns an _Outcome.

    ``prune_seed`` primes the pruning threshold only.  ``found`` reports the
    best size this search actually constructed a witness for, -1 if none,
    so callers never mistake a borrowed incumbent for a solution.
    """
    if d == 1:
        children_of = lambda s: _deg1_children(adj, s)
        bound_of = _deg1_bound
        closure_of = lambda s: _deg1_closure(adj, s)
    else:
        children_of = lambda s: _degd_children(adj, d, s)
        bound_of = lambda s: _degd_bound(adj, d, s)
        closure_of = None

    incumbent = prune_seed
    found = -1
    witness = 0
    nodes = 0
    out_of_budget = False
    stack = [root]
    while stack:
        state = stack.pop()
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            out_of_budget = True
            break
        if nodes % _SYNC_INTERVAL == 0:
            if deadline is not None and time.monotonic() > deadline:
                out_of_budget = True
                break
            if shared is not None and shared.value > incumbent:
                incumbent = shared.value
        if stop_at is not None and incumbent >= stop_at:
            break
        if bound_of(state) <= incumbent:
            continue
        kids = children_of(state)
        if kids is None:
            if closure_of is not None:
                size, wit = closure_of(state)
            else:
                size, wit = state[3], state[2]
            if size > incumbent:
                incumbent = found = size
                witness = wit
                if shared is not None:
                    with shared.get_lock():
                        if size > shared.value:
                            shared.value = size
            continue
        # children are include-first; the stack flips them, so push reversed
        for ch in reversed(kids):
            stack.append(ch)
    return _Outcome(found, witness, nodes, not out_of_budget)


def _expand_frontier(children_of, root, want):
    """Breadth-first split of the root into independent subproblems."""
    frontier = [root]
    tasks = []
    expansions = 0
    while frontier and len(tasks) + len(frontier) < want:
        state = frontier.pop(0)
        kids = children_of(state)
        expansions += 1
        if kids is None:
            tasks.append(state)
        else:
            frontier.extend(kids)
    return tasks + frontier, expansions


_WORKER: dict = {}


def _pool_init(shared, adj, d, max_nodes, deadline, stop_at):
    _WORKER.update(
        shared=shared, adj=adj, d=d, max_nodes=max_nodes,
        deadline=deadline, stop_at=stop_at,
    )


def _pool_task(state):
    w = _WORKER
    out = _run_search(
        w["adj"], w["d"], state, w["shared"].value,
        w["max_nodes"], w["deadline"], w["shared"], w["stop_at"],
    )
    return out.found, out.witness, out.nodes, out.completed


def _deadline_of(budget: SearchBudget, started: float):
    if budget.max_time is None:
        return None
    return started + budget.max_time


def _solve_root(g, d, budget, root, seed, seed_witness, stop_at, bound_source):
    started = time.monotonic()
    deadline = _deadline_of(budget, started)
    adj = g.adj

    if stop_at is not None and seed >= stop_at:
        # the bound interval already pins the optimum; no search needed
        return SolveResult(seed, seed_witness, True, 0, time.monotonic() - started,
                           bound_source)

    if budget.thread_count == 1:
        out = _run_search(adj, d, root, seed,
                          budget.max_nodes, deadline, None, stop_at)
        nodes, completed = out.nodes, out.completed
        results = [(out.found, out.witness)]
    else:
        children_of = (lambda s: _deg1_children(adj, s)) if d == 1 else (
            lambda s: _degd_children(adj, d, s))
        tasks, expansions = _expand_frontier(children_of, root,
                                             budget.thread_count * 8)
        per_task_nodes = None
        if budget.max_nodes is not None:
            per_task_nodes = max(1, budget.max_nodes // max(1, len(tasks)))
        ctx = mp.get_context("fork")
        shared = ctx.Value("q", seed)
        with ctx.Pool(
            budget.thread_count,
            initializer=_pool_init,
            initargs=(shared, adj, d, per_task_nodes, deadline, stop_at),
        ) as pool:
            outs = pool.map(_pool_task, tasks, chunksize=1)
        nodes = expansions + sum(o[2] for o in outs)
        completed = all(o[3] for o in outs)
        results = [(o[0], o[1]) for o in outs]

    found, witness = seed, seed_witness
    for f, w in results:
        if f > found:
            found, witness = f, w

    optimal = completed
    source = None
    if stop_at is not None and found >= stop_at:
        optimal = True
        source = bound_source
    return SolveResult(found, witness, optimal, nodes,
                       time.monotonic() - started, source)


def _greedy_seed(adj, order, d):
    """Deterministic greedy degree-bounded set: a valid starting incumbent."""
    caps = [d] * order
    chosen = 0
    for v in range(order):
        if caps[v] < 0:
            continue
        ok = True
        for u in bits(adj[v] & chosen):
            if caps[u] < 1:
                ok = False
                break
        if not ok:
            continue
        chosen |= 1 << v
        for u in bits(adj[v]):
            caps[u] -= 1
    return chosen.bit_count(), chosen


def solve(g: GenericGraph, d: int, budget: SearchBudget | None = None) -> SolveResult:
    """Largest vertex set of g inducing maximum degree <= d, exactly."""
    if d < 0:
        raise DomainError("d must be nonnegative")
    budget = budget or UNLIMITED
    if g.order == 0:
        return SolveResult(0, 0, True, 0, 0.0)
    seed, seed_witness = _greedy_seed(g.adj, g.order, d)
    root = _deg1_root(g.adj, g.order, None) if d == 1 else _degd_root(
        g.adj, g.order, d, None)
    # the greedy seed primes pruning but must also survive as a witness,
    # so it enters as found/witness rather than a bare threshold
    result = _solve_root(g, d, budget, root, seed, seed_witness, None, None)
    if not check_max_degree(g, result.witness, d):
        raise AssertionError("solver produced an invalid witness")
    return result


def heuristic_lower(n: int, k: int) -> Certificate:
    """Best known dissociation construction: a center, or all of [2k] choose k.

    The second induces a perfect matching; for k=2 it equals the optimal
    6-vertex set on the smallest instances.
    """
    if k < 2 or n < 2 * k:
        raise DomainError(f"need n >= 2k >= 4, got n={n} k={k}")
    if comb(n - 1, k - 1) >= comb(2 * k, k):
        members = tuple(
            (1,) + rest for rest in combinations(range(2, n + 1), k - 1)
        )
    else:
        members = tuple(combinations(range(1, 2 * k + 1), k))
    return Certificate(d=1, members=members, provenance="heuristic", n=n, k=k)


def _certificate_vertex_mask(g: KneserGraph, cert: Certificate) -> int:
    m = 0
    for member in cert.members:
        m |= 1 << g.vertex_index(member)
    return m


def solve_kneser(
    n: int, k: int, d: int = 1, budget: SearchBudget | None = None
) -> SolveResult:
    """solve() on K(n, k) with the symmetry and bound tricks that are sound here.

    Vertex-transitivity lets the search assume the vertex {1,...,k} is in
    some maximum solution; for d=1 the incumbent starts at the best known
    construction and the search stops once it meets the bound interval's
    upper end.
    """
    if d < 0:
        raise DomainError("d must be nonnegative")
    budget = budget or UNLIMITED
    g = build_kneser(n, k)

    stop_at = None
    bound_source = None
    if d == 1 and k >= 2:
        rep = bounds.report(n, k)
        stop_at = rep.best_upper
        bound_source = next(
            b.name for b in rep.upper_bounds if b.value == rep.best_upper
        )
        cert = heuristic_lower(n, k)
        seed_witness = _certificate_vertex_mask(g, cert)
        seed = len(cert)
    elif d == 0:
        seed_witness = g.center_mask(1)
        seed = seed_witness.bit_count()
    else:
        seed, seed_witness = _greedy_seed(g.adj, g.order, d)

    root = _deg1_root(g.adj, g.order, 0) if d == 1 else _degd_root(
        g.adj, g.order, d, 0)
    result = _solve_root(g, d, budget, root, seed, seed_witness, stop_at, bound_source)
    if not check_max_degree(g, result.witness, d):
        raise AssertionError("solver produced an invalid witness")
    return result


def brute_force(g: GenericGraph, d: int, cap: int = BRUTE_FORCE_CAP) -> int:
    """Oracle: exhaustive enumeration with early degree-violation pruning."""
    if g.order > cap:
        raise CapacityError(f"brute force capped at {cap} vertices")
    if d < 0:
        raise DomainError("d must be nonnegative")
    adj = g.adj
    order = g.order
    best = 0
    degs = [0] * order

    def rec(i: int, chosen: int, size: int):
        nonlocal best
        if i == order:
            if size > best:
                best = size
            return
        # include i when neither i nor any chosen vertex would exceed d
        nb = adj[i] & chosen
        feasible = nb.bit_count() <= d
        if feasible:
            for u in bits(nb):
                if degs[u] + 1 > d:
                    feasible = False
                    break
        if feasible:
            for u in bits(nb):
                degs[u] += 1
            degs[i] = nb.bit_count()
            rec(i + 1, chosen | (1 << i), size + 1)
            for u in bits(nb):
                degs[u] -= 1
            degs[i] = 0
        rec(i + 1, chosen, size)

    rec(0, 0, 0)
    return best


def witness_certificate(g: KneserGraph, result: SolveResult, d: int) -> Certificate:
    """Package a solve witness as a solver-provenance certificate."""
    members = g.vertex_set_elements(result.witness)
    return Certificate(d=d, members=members, provenance="solver", n=g.n, k=g.k)


def psi3(g: GenericGraph, budget: SearchBudget | None = None) -> tuple[int, bool]:
    """3-path vertex cover number as |V| - diss, with an optimality flag."""
    r = solve(g, 1, budget)
    return g.order - r.best_size, r.optimal
