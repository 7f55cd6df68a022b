"""Verification sweeps: case generation, tallies, reports.

This module holds the exact pure-Python reference engines (one graph at a
time, arbitrary-precision arithmetic throughout) and the report plumbing
shared with the batched engines.  Two laws are swept:

* sets mode: over (A, B) vertex-set pairs, the path-parity trichotomy —
  purely even families force Δ < 0, empty families force Δ = 0, purely odd
  families force Δ > 0; mixed families are tallied, never asserted.
* vertex mode: over vertex pairs (u, v), the distance-parity law — Δ < 0
  for even distance, Δ > 0 for odd, Δ = 0 for disconnected pairs.  The law
  is a theorem on bipartite graphs and for adjacent pairs in general, and
  exactly the conjecture the hunt falsifies elsewhere.

Reports are deterministic: record order is fixed, timing never enters the
serialized output.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .graphs import CapacityError, Graph, all_distances_from, bits, is_bipartite
from .graph6 import emit_graph6
from .paths import ParityClass
from .sigma import MemoCache, sigma_all_subgraphs, sigma_deleted
from .delta import sign
from .families import is_connected, pair_slots

PAIR_CLASSIFIER_CAP = 8
SETS_SWEEP_CAP = 6
VERTEX_SWEEP_CAP = 7

# tally labels, in fixed report order
SETS_LABELS = ("Even", "Odd", "Mixed", "Infinite")
VERTEX_LABELS = ("EvenDist", "OddDist", "Unreachable")
SIGN_BUCKETS = ("neg", "zero", "pos")

_CODE_TO_LABEL = {0: "Even", 1: "Odd", 2: "Mixed", 3: "Infinite"}
_CODE_TO_CLASS = {
    0: ParityClass.EVEN,
    1: ParityClass.ODD,
    2: ParityClass.MIXED,
    3: ParityClass.INFINITE,
}
# asserted sign per class code; None makes no claim
_CODE_TO_SIGN = {0: -1, 1: 1, 2: None, 3: 0}


class PairClassifier:
    """Exhaustive all-pairs path-parity classification for one small graph.

    A dynamic program over vertex subsets finds, for every endpoint pair and
    length parity, the internal vertex sets realizable by a simple path.
    Those are folded into one bitset per (pair, parity) whose bit F answers
    "is there such a path avoiding the forbidden set F?", so classifying a
    pair (A, B) is a handful of bit tests.  Unlike the search-based
    classifier there is no budget: the table is complete by construction.
    """

    CAP = PAIR_CLASSIFIER_CAP

    _sub_cache: dict[int, list[int]] = {}

    def __init__(self, g: Graph) -> None:
        if g.n > self.CAP:
            raise CapacityError(f"pair classifier capped at n={self.CAP}, got {g.n}")
        self.g = g
        n = g.n
        full = g.full
        sub = self._sub_for(n)
        self._index = {p: i for i, p in enumerate(pair_slots(n))}
        # free[pair][parity]: bitset over forbidden sets F
        self.free = [[0, 0] for _ in self._index]
        adj = g.adj
        for s in range(n):
            tab = [0] * (1 << n)
            tab[1 << s] = 1 << s
            for mask in range(1 << s, 1 << n):
                ends = tab[mask]
                if not ends:
                    continue
                parity = (mask.bit_count() - 1) & 1
                for t in bits(ends):
                    if t > s:
                        interior = mask & ~(1 << s) & ~(1 << t)
                        self.free[self._index[(s, t)]][parity] |= sub[full & ~interior]
                    for u in bits(adj[t] & ~mask):
                        tab[mask | 1 << u] |= 1 << u

    @classmethod
    def _sub_for(cls, n: int) -> list[int]:
        cached = cls._sub_cache.get(n)
        if cached is None:
            # sub[c] has bit F set for every F ⊆ c; doubling construction:
            # entries with the new vertex keep their old subsets plus the
            # shifted copies that include it
            cached = [1]
            for v in range(n):
                grow = 1 << (1 << v)
                cached = cached + [t | t * grow for t in cached]
            cls._sub_cache[n] = cached
        return cached

    def query(self, a: int, b: int) -> ParityClass:
        self.g.check_set(a)
        self.g.check_set(b)
        even = bool(a & b)
        odd = False
        forbidden = a | b
        for s in bits(a & ~b):
            for t in bits(b & ~a):
                f = self.free[self._index[(s, t) if s < t else (t, s)]]
                if f[0] >> forbidden & 1:
                    even = True
                if f[1] >> forbidden & 1:
                    odd = True
            if even and odd:
                break
        if even and odd:
            return ParityClass.MIXED
        if even:
            return ParityClass.EVEN
        if odd:
            return ParityClass.ODD
        return ParityClass.INFINITE


@dataclass
class ShardResult:
    """Tallies and findings from one contiguous slice of a sweep."""

    graphs: int = 0
    cases: int = 0
    counts: Counter = field(default_factory=Counter)  # (label, bucket) -> count
    violations: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)
    adjacent_hits: list[dict] = field(default_factory=list)

    def merge(self, other: "ShardResult") -> None:
        self.graphs += other.graphs
        self.cases += other.cases
        self.counts.update(other.counts)
        self.violations.extend(other.violations)
        self.inconclusive.extend(other.inconclusive)
        self.adjacent_hits.extend(other.adjacent_hits)


def _bucket(s: int) -> str:
    return SIGN_BUCKETS[s + 1]


def _set_record(kind: str, g: Graph, a: int, b: int, delta: int, parity: ParityClass) -> dict:
    return {
        "record": kind,
        "graph6": emit_graph6(g),
        "a": list(bits(a)),
        "b": list(bits(b)),
        "delta": delta,
        "parity": str(parity),
    }


def _vertex_record(kind: str, g: Graph, u: int, v: int, delta: int, dist: Optional[int]) -> dict:
    return {
        "record": kind,
        "graph6": emit_graph6(g),
        "a": [u],
        "b": [v],
        "delta": delta,
        "distance": dist,
        "expected_sign": 0 if dist is None else (-1 if dist % 2 == 0 else 1),
    }


# -- reference sets-mode sweep ---------------------------------------------

def sets_cases(g: Graph) -> Iterator[tuple[int, int, ParityClass, int]]:
    """Every (A, B) pair of one graph with its parity class and exact Δ."""
    table = sigma_all_subgraphs(g)
    classifier = PairClassifier(g)
    full = g.full
    whole = table[full]
    for a in range(full + 1):
        left = table[full ^ a]
        for b in range(full + 1):
            delta = left * table[full ^ b] - whole * table[full ^ (a | b)]
            yield a, b, classifier.query(a, b), delta


def sweep_sets_graph(g: Graph, out: Optional[ShardResult] = None) -> ShardResult:
    """Assert the path-parity trichotomy over all set pairs of one graph."""
    if g.n > SETS_SWEEP_CAP:
        raise CapacityError(f"all-pairs sweep capped at n={SETS_SWEEP_CAP}")
    result = out if out is not None else ShardResult()
    result.graphs += 1
    for a, b, parity, delta in sets_cases(g):
        s = sign(delta)
        result.cases += 1
        result.counts[(str(parity), _bucket(s))] += 1
        want = _CODE_TO_SIGN[{"Even": 0, "Odd": 1, "Mixed": 2, "Infinite": 3}[str(parity)]]
        if want is not None and s != want:
            result.violations.append(_set_record("violation", g, a, b, delta, parity))
    return result


# -- reference vertex-mode sweep -------------------------------------------

def vertex_cases(
    g: Graph, cache: Optional[MemoCache] = None
) -> Iterator[tuple[int, int, Optional[int], int]]:
    """Every unordered vertex pair (u ≤ v) with BFS distance and exact Δ."""
    if g.n <= 20:
        table = sigma_all_subgraphs(g)
        full = g.full

        def delta_of(u: int, v: int) -> int:
            pair = 1 << u | 1 << v
            return table[full ^ (1 << u)] * table[full ^ (1 << v)] - table[full] * table[
                full ^ pair
            ]

    else:
        if cache is None:
            cache = MemoCache()

        def delta_of(u: int, v: int) -> int:
            return sigma_deleted(g, 1 << u, cache) * sigma_deleted(
                g, 1 << v, cache
            ) - sigma_deleted(g, 0, cache) * sigma_deleted(g, 1 << u | 1 << v, cache)

    for u in range(g.n):
        dist = all_distances_from(g, u)
        for v in range(u, g.n):
            yield u, v, dist[v], delta_of(u, v)


def sweep_vertices_graph(
    g: Graph,
    adjacent_only: bool = False,
    out: Optional[ShardResult] = None,
    split_adjacent_hits: bool = False,
) -> ShardResult:
    """Assert the distance-parity law over the vertex pairs of one graph.

    With ``adjacent_only`` only edges are asserted (and tallied); that
    restriction of the law holds for every graph.  With
    ``split_adjacent_hits`` violations at adjacent pairs are reported in
    their own list, which the hunt uses as a sanity channel that must stay
    empty.
    """
    result = out if out is not None else ShardResult()
    result.graphs += 1
    for u, v, dist, delta in vertex_cases(g):
        adjacent = g.has_edge(u, v) if u != v else False
        if adjacent_only and not adjacent:
            continue
        s = sign(delta)
        if dist is None:
            label, want = "Unreachable", 0
        elif dist % 2 == 0:
            label, want = "EvenDist", -1
        else:
            label, want = "OddDist", 1
        result.cases += 1
        result.counts[(label, _bucket(s))] += 1
        if s != want:
            record = _vertex_record("violation", g, u, v, delta, dist)
            if adjacent and split_adjacent_hits:
                result.adjacent_hits.append(record)
            else:
                result.violations.append(record)
    return result


# -- report assembly -------------------------------------------------------

@dataclass
class SweepReport:
    """Aggregated outcome of one sweep, serializable as JSON lines or TSV."""

    command: str
    config: dict
    result: ShardResult

    @property
    def passed(self) -> bool:
        return not self.result.violations and not self.result.adjacent_hits

    def counts_table(self) -> dict:
        labels = [l for l, _ in self.result.counts] or []
        order = [l for l in SETS_LABELS + VERTEX_LABELS if (l, "neg") in self.result.counts
                 or (l, "zero") in self.result.counts or (l, "pos") in self.result.counts]
        # keep any unexpected labels too, after the known ones
        for l in labels:
            if l not in order:
                order.append(l)
        return {
            l: {b: self.result.counts.get((l, b), 0) for b in SIGN_BUCKETS} for l in order
        }

    def summary(self) -> dict:
        out = {
            "record": "summary",
            "graphs": self.result.graphs,
            "cases": self.result.cases,
            "counts": self.counts_table(),
            "violations": len(self.result.violations),
            "inconclusive": len(self.result.inconclusive),
            "verdict": "PASS" if self.passed else "FAIL",
        }
        if self.result.adjacent_hits:
            out["adjacent_hits"] = len(self.result.adjacent_hits)
        return out

    def jsonl_lines(self) -> Iterator[str]:
        yield json.dumps({"record": "header", "command": self.command, "config": self.config})
        for rec in itertools.chain(
            self.result.violations, self.result.adjacent_hits, self.result.inconclusive
        ):
            yield json.dumps(rec)
        yield json.dumps(self.summary())

    def tsv_lines(self) -> Iterator[str]:
        yield "# command\t" + self.command
        yield "# config\t" + json.dumps(self.config)
        yield "section\tfield1\tfield2\tfield3\tfield4\tfield5"
        for label, table in self.counts_table().items():
            yield "count\t{}\t{}\t{}\t{}\t".format(
                label, table["neg"], table["zero"], table["pos"]
            )
        for rec in itertools.chain(
            self.result.violations, self.result.adjacent_hits, self.result.inconclusive
        ):
            yield "{}\t{}\t{}\t{}\t{}\t{}".format(
                rec["record"],
                rec["graph6"],
                ",".join(map(str, rec["a"])),
                ",".join(map(str, rec["b"])),
                rec["delta"],
                rec.get("parity", rec.get("distance", "")),
            )
        s = self.summary()
        yield "summary\tgraphs\t{}\tcases\t{}\t".format(s["graphs"], s["cases"])
        yield "summary\tviolations\t{}\tinconclusive\t{}\t{}".format(
            s["violations"], s["inconclusive"], s["verdict"]
        )

    def render(self, fmt: str) -> str:
        lines = self.jsonl_lines() if fmt == "json" else self.tsv_lines()
        return "\n".join(lines) + "\n"
