"""Graph populations for verification sweeps.

Exhaustive streams enumerate every labeled graph on n vertices as an edge
bitmask, so sweeps can shard the mask range and re-derive their share.
Structured and random families (paths, cycles, trees, unicyclic, random
bipartite) mirror the populations for which the sign conjecture was settled
earlier, and a seeded generator makes every stream reproducible.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import CapacityError, Graph, bipartition, components, is_bipartite

ALL_LABELED_CAP = 8
DEDUP_CAP = 7

FAMILY_KINDS = (
    "all",
    "connected",
    "bipartite",
    "nonbipartite",
    "paths",
    "cycles",
    "trees",
    "unicyclic",
    "bipartite-unicyclic",
    "gnp",
    "bipartite-gnp",
)


def pair_slots(n: int) -> list[tuple[int, int]]:
    """The C(n,2) vertex pairs in the fixed enumeration order."""
    return list(itertools.combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Labeled graph number ``mask`` in the edge-subset enumeration."""
    pairs = pair_slots(n)
    if mask < 0 or mask >> len(pairs):
        raise ValueError(f"edge mask {mask:#x} out of range for n={n}")
    return Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def edge_mask_of(g: Graph) -> int:
    """Inverse of ``graph_from_edge_mask`` for the same vertex count."""
    mask = 0
    index = {p: i for i, p in enumerate(pair_slots(g.n))}
    for e in g.edges():
        mask |= 1 << index[e]
    return mask


def labeled_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def all_labeled(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, ascending by edge mask."""
    if n > ALL_LABELED_CAP:
        raise CapacityError(f"exhaustive enumeration capped at n={ALL_LABELED_CAP}")
    pairs = pair_slots(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# -- fixed shapes ----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- random families -------------------------------------------------------

def tree_from_pruefer(n: int, seq: Iterable[int]) -> Graph:
    """Decode a Pruefer sequence of length n-2 into a labeled tree."""
    seq = list(seq)
    if n < 1:
        raise ValueError("trees need at least one vertex")
    if len(seq) != max(n - 2, 0):
        raise ValueError(f"sequence length {len(seq)} does not match n={n}")
    if n <= 2:
        return path_graph(n)
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    return tree_from_pruefer(n, (rng.randrange(n) for _ in range(max(n - 2, 0))))


def random_unicyclic(n: int, rng: random.Random, even_cycle: bool = False) -> Graph:
    """A random tree plus one random non-edge (one cycle, n edges).

    With ``even_cycle`` the added edge must close an even cycle, so the
    result stays bipartite; trees whose non-edges all close odd cycles are
    redrawn.
    """
    if n < 3:
        raise ValueError(f"unicyclic graphs need at least 3 vertices, got {n}")
    while True:
        t = random_tree(n, rng)
        color = bipartition(t)
        candidates = [
            (u, v)
            for u, v in itertools.combinations(range(n), 2)
            if not t.has_edge(u, v) and (not even_cycle or color[u] != color[v])
        ]
        if candidates:
            u, v = rng.choice(candidates)
            return Graph.from_edges(n, t.edges() + [(u, v)])


def random_gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [pair for pair in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_bipartite_gnp(n: int, p: float, rng: random.Random) -> Graph:
    """Random part assignment per vertex, then each cross pair with probability p."""
    side = [rng.randrange(2) for _ in range(n)]
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if side[u] != side[v] and rng.random() < p
    ]
    return Graph.from_edges(n, edges)


# -- the family abstraction ------------------------------------------------

@dataclass(frozen=True)
class GraphFamily:
    """A reproducible stream of graphs.

    Exhaustive kinds (all, connected, bipartite, nonbipartite) enumerate
    every labeled graph on ``n`` vertices through the kind's filter; the
    fixed kinds (paths, cycles) emit their single member; random kinds
    draw ``count`` samples from the generator seeded with ``seed``.
    """

    kind: str
    n: int
    p: float = 0.5
    seed: int = 0
    count: int = 1000

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; choose from {FAMILY_KINDS}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"edge probability {self.p} outside [0, 1]")
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        if self.kind == "cycles" and self.n < 3:
            raise ValueError("cycles need at least 3 vertices")
        if self.kind in ("unicyclic", "bipartite-unicyclic") and self.n < 3:
            raise ValueError("unicyclic graphs need at least 3 vertices")
        if self.kind == "trees" and self.n < 1:
            raise ValueError("trees need at least one vertex")
        if self.count < 0:
            raise ValueError(f"negative sample count {self.count}")

    def graphs(self) -> Iterator[Graph]:
        kind = self.kind
        if kind == "all":
            yield from all_labeled(self.n)
        elif kind == "connected":
            yield from (g for g in all_labeled(self.n) if is_connected(g))
        elif kind == "bipartite":
            yield from (g for g in all_labeled(self.n) if is_bipartite(g))
        elif kind == "nonbipartite":
            yield from (g for g in all_labeled(self.n) if not is_bipartite(g))
        elif kind == "paths":
            yield path_graph(self.n)
        elif kind == "cycles":
            yield cycle_graph(self.n)
        else:
            rng = random.Random(self.seed)
            for _ in range(self.count):
                if kind == "trees":
                    yield random_tree(self.n, rng)
                elif kind == "unicyclic":
                    yield random_unicyclic(self.n, rng)
                elif kind == "bipartite-unicyclic":
                    yield random_unicyclic(self.n, rng, even_cycle=True)
                elif kind == "gnp":
                    yield random_gnp(self.n, self.p, rng)
                else:
                    yield random_bipartite_gnp(self.n, self.p, rng)


# -- isomorphism reduction (optional, small n) -----------------------------

def canonical_key(g: Graph) -> int:
    """Minimum edge mask over all vertex relabelings; equal iff isomorphic."""
    if g.n > DEDUP_CAP:
        raise CapacityError(f"canonicalization capped at n={DEDUP_CAP}")
    pairs = pair_slots(g.n)
    index = {p: i for i, p in enumerate(pairs)}
    edges = g.edges()
    best = None
    for perm in itertools.permutations(range(g.n)):
        mask = 0
        for u, v in edges:
            a, b = perm[u], perm[v]
            mask |= 1 << index[(a, b) if a < b else (b, a)]
        if best is None or mask < best:
            best = mask
    return best if best is not None else 0


def canonical_dedup(stream: Iterable[Graph], n: int) -> Iterator[Graph]:
    """Drop graphs isomorphic to an earlier stream member."""
    if n > DEDUP_CAP:
        raise CapacityError(f"canonicalization capped at n={DEDUP_CAP}")
    seen: set[int] = set()
    for g in stream:
        key = canonical_key(g)
        if key not in seen:
            seen.add(key)
            yield g
