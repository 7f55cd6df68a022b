"""Classification of A-B-path families by length parity.

An A-B-path is a simple path whose only vertex in A is its first vertex and
whose only vertex in B is its last; internal vertices avoid both sets.  A
single vertex of A ∩ B counts as a path of length 0, hence even.  The family
of all such paths is classified as:

* ``EVEN``     - at least one path, every length even
* ``ODD``      - at least one path, every length odd
* ``MIXED``    - both parities occur
* ``INFINITE`` - no A-B-path at all

The classifier enumerates paths by depth-first search under an explicit
work budget; a run that is cut short reports inconclusive (``None``) rather
than guessing a class.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .graphs import Graph, bipartition, bits, delete, independent_submasks, neighborhood

DEFAULT_MAX_PATHS = 1_000_000


class ParityClass(Enum):
    EVEN = "Even"
    ODD = "Odd"
    MIXED = "Mixed"
    INFINITE = "Infinite"

    def __str__(self) -> str:
        return self.value


@dataclass
class PathBudget:
    """Cap on enumerated paths for one classification call.

    Every path prefix explored by the search is charged once, which also
    bounds the number of complete A-B-paths seen.  When the cap is hit,
    ``exceeded`` is set and the classification comes back inconclusive.
    """

    max_paths: int = DEFAULT_MAX_PATHS
    spent: int = 0
    exceeded: bool = False

    def charge(self, amount: int = 1) -> bool:
        self.spent += amount
        if self.spent > self.max_paths:
            self.exceeded = True
            return False
        return True


def classify(
    g: Graph, a: int, b: int, budget: Optional[PathBudget] = None
) -> Optional[ParityClass]:
    """Parity class of the A-B-path family, or ``None`` if the budget ran out.

    Exhaustive depth-first enumeration from each start in A \\ B, never
    entering A ∪ B again except to finish at a vertex of B \\ A.  Exits early
    once both parities are seen.
    """
    g.check_set(a)
    g.check_set(b)
    if budget is None:
        budget = PathBudget()
    seen_even = bool(a & b)
    seen_odd = False
    if seen_even:
        budget.charge((a & b).bit_count())
    adj = g.adj
    ends = b & ~a
    free = g.full & ~(a | b)

    def dfs(v: int, visited: int, parity: int) -> bool:
        # parity is the prefix length mod 2; True aborts the whole search
        nonlocal seen_even, seen_odd
        hits = adj[v] & ends
        if hits:
            budget.charge(hits.bit_count())
            if parity:
                seen_even = True
            else:
                seen_odd = True
            if seen_even and seen_odd:
                return True
        for u in bits(adj[v] & free & ~visited):
            if not budget.charge():
                return True
            if dfs(u, visited | 1 << u, parity ^ 1):
                return True
        return False

    for s in bits(a & ~b):
        if not budget.charge():
            break
        if dfs(s, 1 << s, 0):
            break
    if budget.exceeded:
        return None
    if seen_even and seen_odd:
        return ParityClass.MIXED
    if seen_even:
        return ParityClass.EVEN
    if seen_odd:
        return ParityClass.ODD
    return ParityClass.INFINITE


def bipartite_shortcut(g: Graph, a: int, b: int) -> Optional[ParityClass]:
    """Classification via the 2-coloring; ``None`` when ``g`` is not bipartite.

    In a bipartite graph every path between two fixed vertices has the
    parity dictated by their colors, so enumeration collapses to a
    reachability check: an endpoint pair contributes its color parity
    whenever the end is reachable from the start through vertices outside
    A ∪ B.
    """
    g.check_set(a)
    g.check_set(b)
    color = bipartition(g)
    if color is None:
        return None
    seen_even = bool(a & b)
    seen_odd = False
    ends = b & ~a
    free = g.full & ~(a | b)
    for s in bits(a & ~b):
        comp = 1 << s
        frontier = comp
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= g.adj[u]
            frontier = grow & free & ~comp
            comp |= frontier
        reach = 0
        for u in bits(comp):
            reach |= g.adj[u]
        for t in bits(reach & ends):
            if color[s] == color[t]:
                seen_even = True
            else:
                seen_odd = True
        if seen_even and seen_odd:
            break
    if seen_even and seen_odd:
        return ParityClass.MIXED
    if seen_even:
        return ParityClass.EVEN
    if seen_odd:
        return ParityClass.ODD
    return ParityClass.INFINITE


@dataclass
class FlipVerdict:
    """Outcome of the parity-flip check over all independent W ⊆ A."""

    base: Optional[ParityClass]
    checked: int = 0
    flip_seen: bool = False
    violations: list[int] = field(default_factory=list)
    inconclusive: bool = False

    @property
    def ok(self) -> bool:
        return not self.inconclusive and not self.violations and self.flip_seen


def parity_flip_check(
    g: Graph, a: int, b: int, max_paths: int = DEFAULT_MAX_PATHS
) -> FlipVerdict:
    """Check the parity flip under deletion of A.

    Requires disjoint A, B whose path family is purely even or purely odd.
    For every independent W ⊆ A, the family from N(W) to B inside G − A must
    then have the opposite parity or be empty, and at least one W must
    realize the opposite parity.  Returns the verdict with any violating W
    masks; budget overruns mark it inconclusive instead of failed.
    """
    g.check_set(a)
    g.check_set(b)
    if a & b:
        raise ValueError("a and b must be disjoint")
    base = classify(g, a, b, PathBudget(max_paths))
    if base is None:
        return FlipVerdict(base=None, inconclusive=True)
    if base not in (ParityClass.EVEN, ParityClass.ODD):
        raise ValueError(f"path family must be purely even or odd, got {base}")
    flipped = ParityClass.ODD if base is ParityClass.EVEN else ParityClass.EVEN
    sub = delete(g, a)
    b_sub = sub.to_sub(b)
    verdict = FlipVerdict(base=base)
    for w in independent_submasks(g, a):
        # N(W) may hit deleted A vertices; the survivor map drops them
        terminals = sub.to_sub(neighborhood(g, w))
        got = classify(sub.graph, terminals, b_sub, PathBudget(max_paths))
        verdict.checked += 1
        if got is None:
            verdict.inconclusive = True
        elif got is flipped:
            verdict.flip_seen = True
        elif got is not ParityClass.INFINITE:
            verdict.violations.append(w)
    return verdict
