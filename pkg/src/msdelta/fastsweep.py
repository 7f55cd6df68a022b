"""Batched sweep engines over ranges of the labeled-graph enumeration.

The exhaustive acceptance sweeps visit millions of graphs, so these engines
process contiguous edge-mask ranges as numpy batches: adjacency rows,
per-subset σ tables, Δ sign grids, BFS distances, and path-parity tables
are all computed vectorized across a batch.  σ values are held in int64,
which is exact here: a graph on n ≤ 20 vertices has σ ≤ 2^n ≤ 2^20, so the
products inside Δ stay below 2^40, far under the int64 limit; the ``n``
caps enforce that bound.  Every flagged case is re-evaluated with the exact
pure-Python reference before it is recorded, so a reported violation never
rests on the batched arithmetic alone.

Record order is deterministic (ascending edge mask, then ascending pair),
matching the one-graph-at-a-time reference engines exactly.
"""

from __future__ import annotations

from collections import Counter

import numpy as np

from .graphs import bits, distance
from .paths import ParityClass, classify
from .delta import delta_sets, sign
from .families import graph_from_edge_mask, pair_slots
from .sweep import (
    SETS_SWEEP_CAP,
    VERTEX_SWEEP_CAP,
    PairClassifier,
    ShardResult,
    _bucket,
    _set_record,
    _vertex_record,
)

INT64_SAFE_CAP = 20

SETS_BATCH = 1024
VERTEX_BATCH = 4096

_LABEL_BY_DISTCODE = ("EvenDist", "OddDist", "Unreachable")
_LABEL_BY_CLASSCODE = ("Even", "Odd", "Mixed", "Infinite")

_cross_cache: dict[int, np.ndarray] = {}


def _adjacency_batch(n: int, masks: np.ndarray) -> np.ndarray:
    """Per-vertex neighbor masks, one row set per graph: (B, n) int64."""
    adj = np.zeros((len(masks), n), dtype=np.int64)
    for i, (u, v) in enumerate(pair_slots(n)):
        bit = (masks >> i) & 1
        adj[:, u] |= bit << v
        adj[:, v] |= bit << u
    return adj


def _sigma_tables(n: int, adj: np.ndarray) -> np.ndarray:
    """σ of every induced subgraph for each graph in the batch: (B, 2^n) int64."""
    if n > INT64_SAFE_CAP:
        raise ValueError(f"int64 batch tables require n <= {INT64_SAFE_CAP}")
    batch = adj.shape[0]
    table = np.ones((batch, 1 << n), dtype=np.int64)
    rows = np.arange(batch)
    for mask in range(1, 1 << n):
        v = (mask & -mask).bit_length() - 1
        drop = mask & ~(adj[:, v] | (1 << v))
        table[:, mask] = table[:, mask ^ (1 << v)] + table[rows, drop]
    return table


def _cross_table(n: int) -> np.ndarray:
    """cross[X, Y]: bitmask of vertex pairs with one endpoint in each set."""
    cached = _cross_cache.get(n)
    if cached is not None:
        return cached
    index = {p: i for i, p in enumerate(pair_slots(n))}
    size = 1 << n
    cross = np.zeros((size, size), dtype=np.int64)
    for x in range(size):
        for y in range(size):
            m = 0
            for s in bits(x):
                for t in bits(y):
                    if s != t:
                        m |= 1 << index[(s, t) if s < t else (t, s)]
            cross[x, y] = m
    _cross_cache[n] = cross
    return cross


def _parity_pair_tables(n: int, adj: np.ndarray) -> np.ndarray:
    """Realizable-path bitsets per endpoint pair and parity: (B, pairs, 2) int64.

    Bit F of entry (pair, parity) is set when the graph has a simple path
    between the pair of that length parity whose interior avoids the vertex
    set F.  This is the batched form of the table built by PairClassifier.
    """
    batch = adj.shape[0]
    size = 1 << n
    full = size - 1
    index = {p: i for i, p in enumerate(pair_slots(n))}
    # subset indicators reinterpreted as int64 bit patterns
    sub = np.array(PairClassifier._sub_for(n), dtype=np.uint64).view(np.int64)
    free = np.zeros((batch, len(index), 2), dtype=np.int64)
    zero = np.int64(0)
    for s in range(n):
        tab = np.zeros((batch, size), dtype=np.int16)
        tab[:, 1 << s] = 1 << s
        for mask in range(1 << s, size):
            if not mask >> s & 1:
                continue
            col = tab[:, mask]
            if not col.any():
                continue
            parity = (mask.bit_count() - 1) & 1
            for t in bits(mask):
                active = (col >> t & 1).astype(bool)
                if not active.any():
                    continue
                if t > s:
                    interior = mask & ~(1 << s) & ~(1 << t)
                    gain = np.where(active, sub[full ^ interior], zero)
                    free[:, index[(s, t)], parity] |= gain
                ext = np.where(active, adj[:, t] & ~mask & full, 0)
                for u in range(n):
                    sel = (ext >> u & 1).astype(bool)
                    if sel.any():
                        tab[sel, mask | 1 << u] |= np.int16(1 << u)
    return free


def _class_code_grid(n: int, free: np.ndarray) -> np.ndarray:
    """Parity class codes for all ordered (A, B) pairs: (B, 4^n) int8.

    Codes: 0 Even, 1 Odd, 2 Mixed, 3 Infinite.
    """
    batch = free.shape[0]
    size = 1 << n
    cross = _cross_table(n)
    npairs = free.shape[1]
    # pair-membership bitmask per forbidden set: pok[:, parity, F]
    pok = np.zeros((batch, 2, size), dtype=np.int64)
    for pi in range(npairs):
        for parity in (0, 1):
            column = free[:, pi, parity]
            for forbidden in range(size):
                bit = (column >> forbidden) & 1
                pok[:, parity, forbidden] |= bit << pi
    code = np.empty((batch, size * size), dtype=np.int8)
    for a in range(size):
        arest = a
        for b in range(size):
            crossmask = cross[a & ~b, b & ~a]
            joint = a | b
            evens = (pok[:, 0, joint] & crossmask) != 0
            odds = (pok[:, 1, joint] & crossmask) != 0
            if a & b:
                col = np.where(odds, np.int8(2), np.int8(0))
            else:
                col = np.where(
                    evens & odds,
                    np.int8(2),
                    np.where(evens, np.int8(0), np.where(odds, np.int8(1), np.int8(3))),
                )
            code[:, arest * size + b] = col
    return code


def _sets_delta_signs(n: int, table: np.ndarray) -> np.ndarray:
    """sign Δ(G, A, B) for all ordered set pairs: (B, 4^n) int8."""
    size = 1 << n
    full = size - 1
    comp = table[:, ::-1]  # comp[:, a] = σ(G − a)
    outer = comp[:, :, None] * comp[:, None, :]
    joint = np.bitwise_or(np.arange(size)[:, None], np.arange(size)[None, :])
    second = table[:, full ^ joint] * table[:, full][:, None, None]
    return np.sign(outer - second).astype(np.int8).reshape(len(table), size * size)


def sets_shard(n: int, lo: int, hi: int) -> ShardResult:
    """Assert the path-parity trichotomy over all set pairs of a mask range."""
    if not 2 <= n <= SETS_SWEEP_CAP:
        raise ValueError(f"batched set sweep handles 2 <= n <= {SETS_SWEEP_CAP}")
    size = 1 << n
    want_by_code = np.array([-1, 1, 99, 0], dtype=np.int8)  # 99 = no claim
    result = ShardResult()
    tally = np.zeros(12, dtype=np.int64)
    for start in range(lo, hi, SETS_BATCH):
        masks = np.arange(start, min(start + SETS_BATCH, hi), dtype=np.int64)
        adj = _adjacency_batch(n, masks)
        table = _sigma_tables(n, adj)
        signs = _sets_delta_signs(n, table)
        code = _class_code_grid(n, _parity_pair_tables(n, adj))
        tally += np.bincount((code.astype(np.int64) * 3 + signs + 1).ravel(), minlength=12)
        want = want_by_code[code]
        bad = (want != 99) & (want != signs)
        for gi, pi in np.argwhere(bad):
            g = graph_from_edge_mask(n, int(masks[gi]))
            a, b = int(pi) // size, int(pi) % size
            delta = delta_sets(g, a, b)
            parity = classify(g, a, b)
            if sign(delta) == {"Even": -1, "Odd": 1, "Infinite": 0}.get(str(parity)):
                raise RuntimeError(
                    f"batched engine flagged a case the exact recheck clears: "
                    f"n={n} mask={masks[gi]} a={a} b={b}"
                )
            result.violations.append(_set_record("violation", g, a, b, delta, parity))
        result.graphs += len(masks)
        result.cases += len(masks) * size * size
    for ci in range(4):
        for si in range(3):
            if tally[ci * 3 + si]:
                result.counts[(_LABEL_BY_CLASSCODE[ci], _bucket(si - 1))] += int(
                    tally[ci * 3 + si]
                )
    return result


def _vertex_batch_tables(n: int, masks: np.ndarray):
    """Distances, bipartiteness, connectivity, Δ signs for one batch."""
    batch = len(masks)
    adj = _adjacency_batch(n, masks)
    abool = ((adj[:, :, None] >> np.arange(n)[None, None, :]) & 1).astype(np.uint8)
    eye = np.eye(n, dtype=bool)
    # BFS by repeated boolean matmul; dist stays -1 where unreachable
    dist = np.where(eye, 0, -1).astype(np.int8)
    dist = np.broadcast_to(dist, (batch, n, n)).copy()
    reach = np.broadcast_to(eye, (batch, n, n)).copy()
    for step in range(1, n):
        grown = reach | (np.matmul(reach.astype(np.uint8), abool) > 0)
        dist[grown & ~reach] = step
        reach = grown
    # walk-parity closure: a graph is bipartite iff no odd closed walk
    even = np.broadcast_to(eye, (batch, n, n)).copy()
    odd = abool.astype(bool)
    for _ in range(2 * n):
        even, odd = (
            even | (np.matmul(odd.astype(np.uint8), abool) > 0),
            odd | (np.matmul(even.astype(np.uint8), abool) > 0),
        )
    bip = ~(odd & eye).any(axis=(1, 2))
    conn = (dist[:, 0, :] >= 0).all(axis=1)
    table = _sigma_tables(n, adj)
    full = (1 << n) - 1
    singles = full ^ (1 << np.arange(n))
    tv = table[:, singles]
    outer = tv[:, :, None] * tv[:, None, :]
    pairdrop = full ^ ((1 << np.arange(n))[:, None] | (1 << np.arange(n))[None, :])
    second = table[:, pairdrop] * table[:, full][:, None, None]
    dsign = np.sign(outer - second).astype(np.int8)
    return abool.astype(bool), dist, bip, conn, dsign


def _tally_pairs(result: ShardResult, dist, dsign, sel) -> None:
    labelcode = np.where(dist < 0, 2, dist & 1).astype(np.int64)
    combined = labelcode * 3 + dsign + 1
    tally = np.bincount(combined[sel], minlength=9)
    for li in range(3):
        for si in range(3):
            if tally[li * 3 + si]:
                result.counts[(_LABEL_BY_DISTCODE[li], _bucket(si - 1))] += int(
                    tally[li * 3 + si]
                )
    result.cases += int(sel.sum())


def _emit_vertex_violations(
    result: ShardResult, n: int, masks, bad, adjacent, split_adjacent: bool
) -> None:
    for gi, u, v in np.argwhere(bad):
        g = graph_from_edge_mask(n, int(masks[gi]))
        u, v = int(u), int(v)
        delta = delta_sets(g, 1 << u, 1 << v)
        d = distance(g, u, v)
        expect = 0 if d is None else (-1 if d % 2 == 0 else 1)
        if sign(delta) == expect:
            raise RuntimeError(
                f"batched engine flagged a case the exact recheck clears: "
                f"n={n} mask={masks[gi]} pair=({u}, {v})"
            )
        record = _vertex_record("violation", g, u, v, delta, d)
        if split_adjacent and adjacent[gi, u, v]:
            result.adjacent_hits.append(record)
        else:
            result.violations.append(record)


def vertex_shard(n: int, lo: int, hi: int, checks: tuple[str, ...]) -> dict[str, ShardResult]:
    """Distance-parity sweeps over a mask range, several checks in one pass.

    Checks: ``bipartite`` asserts the law on every pair of every bipartite
    graph; ``adjacent`` asserts Δ > 0 on the edges of every graph; ``hunt``
    asserts the law on connected non-bipartite graphs, splitting any
    adjacent-pair hits into their own channel; ``hunt-bipartite`` is the
    hunt's control run on connected bipartite graphs.
    """
    if not 2 <= n <= VERTEX_SWEEP_CAP:
        raise ValueError(f"batched vertex sweep handles 2 <= n <= {VERTEX_SWEEP_CAP}")
    for check in checks:
        if check not in ("bipartite", "adjacent", "hunt", "hunt-bipartite"):
            raise ValueError(f"unknown check {check!r}")
    results = {check: ShardResult() for check in checks}
    triu = np.triu(np.ones((n, n), dtype=bool))
    for start in range(lo, hi, VERTEX_BATCH):
        masks = np.arange(start, min(start + VERTEX_BATCH, hi), dtype=np.int64)
        adjacent, dist, bip, conn, dsign = _vertex_batch_tables(n, masks)
        expect = np.where(dist < 0, 0, np.where(dist & 1 == 0, -1, 1)).astype(np.int8)
        mismatch = dsign != expect
        for check in checks:
            result = results[check]
            if check == "bipartite":
                popmask = bip
                pairsel = popmask[:, None, None] & triu[None, :, :]
            elif check == "adjacent":
                popmask = np.ones(len(masks), dtype=bool)
                pairsel = adjacent & triu[None, :, :]
            else:
                popmask = conn & (bip if check == "hunt-bipartite" else ~bip)
                pairsel = popmask[:, None, None] & triu[None, :, :]
            result.graphs += int(popmask.sum())
            _tally_pairs(result, dist, dsign, pairsel)
            _emit_vertex_violations(
                result,
                n,
                masks,
                mismatch & pairsel,
                adjacent,
                split_adjacent=check.startswith("hunt"),
            )
    return results
