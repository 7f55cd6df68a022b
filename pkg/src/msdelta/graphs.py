"""Compact undirected simple graphs on at most 64 vertices.

Vertices are the integers 0..n-1.  Adjacency is stored as one bitmask per
vertex, and every vertex subset handled by this package is likewise a plain
``int`` bitmask over the owning graph's vertices.  Graphs are immutable value
objects: equal graphs compare and hash equal, and all operations here are
pure functions, so graphs and masks can be shared freely between tasks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

MAX_VERTICES = 64


class CapacityError(ValueError):
    """A size cap was exceeded (graph too large, or an enforced oracle cap)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> int:
    """Bitmask for an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vlist(mask: int) -> list[int]:
    """Sorted vertex indices of a bitmask."""
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus per-vertex neighbor bitmasks."""

    n: int
    adj: tuple[int, ...]
    full: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        object.__setattr__(self, "full", full)
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbor bits beyond n={self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls.from_edges(n, ())

    def edges(self) -> list[tuple[int, int]]:
        """Edge list with u < v, sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(row):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside 0..{self.n - 1}")

    def check_set(self, w: int) -> None:
        """Validate that ``w`` is a vertex-set mask of this graph."""
        if w < 0 or w & ~self.full:
            raise ValueError(f"vertex set {w:#x} not within 0..{self.n - 1}")


class Subgraph(NamedTuple):
    """A deletion result: the surviving graph plus the relabeling record.

    ``kept[new_index]`` is the original index of each survivor; survivors keep
    their relative order, so the map is order preserving.
    """

    graph: Graph
    kept: tuple[int, ...]

    def to_sub(self, mask: int) -> int:
        """Map an original-coordinate vertex set into subgraph coordinates.

        Deleted vertices in ``mask`` are silently dropped.
        """
        out = 0
        for new, old in enumerate(self.kept):
            if mask >> old & 1:
                out |= 1 << new
        return out

    def to_orig(self, mask: int) -> int:
        """Map a subgraph-coordinate vertex set back to original coordinates."""
        out = 0
        for new, old in enumerate(self.kept):
            if mask >> new & 1:
                out |= 1 << old
        return out


def delete(g: Graph, w: int) -> Subgraph:
    """Remove the vertices of ``w`` and their incident edges.

    Survivors are relabeled 0..k-1 in ascending original order; the returned
    record carries the relabeling so callers can translate vertex sets into
    the subgraph.  ``w = 0`` returns an identical copy, ``w = full`` the
    empty graph.
    """
    g.check_set(w)
    kept = tuple(v for v in range(g.n) if not w >> v & 1)
    index = {old: new for new, old in enumerate(kept)}
    rows = []
    for old in kept:
        row = 0
        for u in bits(g.adj[old] & ~w):
            row |= 1 << index[u]
        rows.append(row)
    return Subgraph(Graph(len(kept), tuple(rows)), kept)


def neighborhood(g: Graph, w: int) -> int:
    """Open neighborhood N(w): all vertices adjacent to some vertex of ``w``.

    This is the raw union of the rows, so it may intersect ``w`` when ``w``
    contains adjacent vertices; callers needing N(w) outside ``w`` intersect
    explicitly.
    """
    g.check_set(w)
    out = 0
    for v in bits(w):
        out |= g.adj[v]
    return out


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by minimum vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= g.adj[u]
            frontier = grow & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def component_of(g: Graph, v: int) -> int:
    """Vertex mask of the component containing ``v``."""
    g._check_vertex(v)
    comp = 1 << v
    frontier = comp
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= g.adj[u]
        frontier = grow & ~comp
        comp |= frontier
    return comp


def distance(g: Graph, u: int, v: int) -> Optional[int]:
    """BFS shortest-path edge count, or ``None`` for different components."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        grow = 0
        for x in bits(frontier):
            grow |= g.adj[x]
        frontier = grow & ~seen
        if frontier >> v & 1:
            return d
        seen |= frontier
    return None


def all_distances_from(g: Graph, u: int) -> list[Optional[int]]:
    """BFS distances from ``u`` to every vertex (``None`` if unreachable)."""
    g._check_vertex(u)
    dist: list[Optional[int]] = [None] * g.n
    dist[u] = 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        d += 1
        grow = 0
        for x in bits(frontier):
            grow |= g.adj[x]
        frontier = grow & ~seen
        for x in bits(frontier):
            dist[x] = d
        seen |= frontier
    return dist


def bipartition(g: Graph) -> Optional[tuple[int, ...]]:
    """A proper 2-coloring (0/1 per vertex) or ``None`` if none exists.

    Deterministic: components are explored by BFS from their minimum vertex,
    which is colored 0.
    """
    color: list[int] = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in bits(g.adj[x]):
                if color[y] == -1:
                    color[y] = color[x] ^ 1
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return tuple(color)


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted above ``g1``'s."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(f"disjoint union has {n} > {MAX_VERTICES} vertices")
    rows = list(g1.adj) + [row << g1.n for row in g2.adj]
    return Graph(n, tuple(rows))


def induced(g: Graph, keep: int) -> Subgraph:
    """Induced subgraph on the vertex set ``keep`` (complement of a deletion)."""
    g.check_set(keep)
    return delete(g, g.full & ~keep)


def is_independent(g: Graph, w: int) -> bool:
    """True when no two vertices of ``w`` are adjacent."""
    g.check_set(w)
    for v in bits(w):
        if g.adj[v] & w:
            return False
    return True


def independent_submasks(g: Graph, u: int) -> Iterator[int]:
    """All independent subsets of ``u``, the empty set first, ascending as ints."""
    g.check_set(u)
    sub = 0
    while True:
        ok = True
        for v in bits(sub):
            if g.adj[v] & sub:
                ok = False
                break
        if ok:
            yield sub
        if sub == u:
            return
        # next submask of u in ascending order
        sub = (sub - u) & u
