"""Exact independent-set counting.

Three independent routes to the same number:

* ``sigma_naive`` - backtracking oracle, deliberately simple, capped small.
* ``sigma`` - memoized branch-and-reduce over components, the workhorse.
* ``expansion_sum`` - the subset-expansion identity, used as a cross-check.

All counts are plain Python integers, so they are exact at every size this
package accepts (an edgeless graph on 64 vertices already needs 2^64).
"""

from __future__ import annotations

from typing import Optional

from .graphs import CapacityError, Graph, bits, neighborhood

NAIVE_CAP = 30
SUBGRAPH_TABLE_CAP = 20


class MemoCache:
    """Shared memo for ``sigma``: one mask table per distinct root graph.

    Keys within a table are vertex masks of the root graph; every induced
    subgraph of a fixed root is identified by its surviving vertex set, so
    the pair (root graph, mask) is collision free.  Reads and inserts are
    single dict operations, so concurrent threads may at worst recompute a
    value, never corrupt one.
    """

    def __init__(self) -> None:
        self._tables: dict[tuple[int, tuple[int, ...]], dict[int, int]] = {}

    def table_for(self, g: Graph) -> dict[int, int]:
        return self._tables.setdefault((g.n, g.adj), {})

    def __len__(self) -> int:
        return sum(len(t) for t in self._tables.values())


def sigma_naive(g: Graph) -> int:
    """Count independent sets by backtracking over vertices in ascending order.

    The ground-truth oracle: no memoization, no component splitting.  Capped
    at 30 vertices to keep runtimes bounded.
    """
    if g.n > NAIVE_CAP:
        raise CapacityError(f"oracle cap exceeded: n={g.n} > {NAIVE_CAP}")
    adj = g.adj
    n = g.n

    def count(i: int, blocked: int) -> int:
        while i < n and blocked >> i & 1:
            i += 1
        if i == n:
            return 1
        # skip vertex i, then take it (which blocks its neighbors)
        return count(i + 1, blocked) + count(i + 1, blocked | adj[i])

    return count(0, 0)


def _sigma_component(adj: tuple[int, ...], comp: int, table: dict[int, int]) -> int:
    cached = table.get(comp)
    if cached is not None:
        return cached
    # max-degree pivot within the component, ties broken by lowest index
    pivot = -1
    best = -1
    for v in bits(comp):
        d = (adj[v] & comp).bit_count()
        if d > best:
            best = d
            pivot = v
    bit = 1 << pivot
    value = _sigma_mask(adj, comp & ~bit, table) + _sigma_mask(
        adj, comp & ~(adj[pivot] | bit), table
    )
    table[comp] = value
    return value


def _sigma_mask(adj: tuple[int, ...], mask: int, table: dict[int, int]) -> int:
    result = 1
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= adj[u] & mask
            frontier = grow & ~comp
            comp |= frontier
        rest &= ~comp
        if comp.bit_count() == 1:
            result *= 2
        else:
            result *= _sigma_component(adj, comp, table)
    return result


def sigma(g: Graph, cache: Optional[MemoCache] = None) -> int:
    """Number of independent vertex sets of ``g``, the empty set included.

    Splits into connected components (the count is multiplicative across
    them), branches on a maximum-degree vertex, and memoizes per component
    vertex mask.  Pass a shared ``MemoCache`` to reuse work across the many
    deletion variants of one graph; the default is a private cache per call.
    """
    table = (cache if cache is not None else MemoCache()).table_for(g)
    return _sigma_mask(g.adj, g.full, table)


def sigma_deleted(g: Graph, w: int, cache: Optional[MemoCache] = None) -> int:
    """σ of the graph left after deleting the vertex set ``w``."""
    g.check_set(w)
    table = (cache if cache is not None else MemoCache()).table_for(g)
    return _sigma_mask(g.adj, g.full & ~w, table)


def expansion_sum(g: Graph, u: int, cache: Optional[MemoCache] = None) -> int:
    """Recompute σ(g) by expanding over one vertex set ``u``.

    Every independent set meets ``u`` in some independent W ⊆ u, and the
    sets with that exact intersection are counted by σ(G − u − N(W)); the
    sum over all such W therefore equals σ(g).  With u = {v} this is the
    two-term deletion recurrence.
    """
    g.check_set(u)
    table = (cache if cache is not None else MemoCache()).table_for(g)
    adj = g.adj
    total = 0
    w = 0
    while True:
        independent = True
        for v in bits(w):
            if adj[v] & w:
                independent = False
                break
        if independent:
            total += _sigma_mask(adj, g.full & ~(u | neighborhood(g, w)), table)
        if w == u:
            return total
        w = (w - u) & u


def sigma_all_subgraphs(g: Graph) -> list[int]:
    """σ of every induced subgraph, indexed by vertex mask.

    One dynamic-programming pass over all 2^n masks using the deletion
    recurrence on each mask's lowest vertex.  Capped at 20 vertices (the
    table itself is the cost); entry 0 is the empty graph, entry full is
    sigma(g).
    """
    if g.n > SUBGRAPH_TABLE_CAP:
        raise CapacityError(
            f"subgraph table cap exceeded: n={g.n} > {SUBGRAPH_TABLE_CAP}"
        )
    closed = [g.adj[v] | 1 << v for v in range(g.n)]
    table = [1] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        v = (mask & -mask).bit_length() - 1
        table[mask] = table[mask ^ (1 << v)] + table[mask & ~closed[v]]
    return table
