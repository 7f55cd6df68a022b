"""The signed difference term and its structural reductions.

For vertex sets A and B of a graph G the quantity of interest is

    Δ(G, A, B) = σ(G−A) · σ(G−B) − σ(G) · σ(G−A−B)

where σ counts independent sets and G−A−B deletes A ∪ B.  The sign of Δ is
predicted by the parity class of the A-B-path family: purely even paths
force Δ < 0, no paths force Δ = 0, purely odd paths force Δ > 0, and a
mixed family supports no claim.  Components touching at most one of the two
sets factor out of Δ as a σ product, which ``reduce_to_ab_components``
exposes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from .graphs import Graph, components, induced
from .paths import ParityClass, PathBudget, classify
from .sigma import MemoCache, sigma_deleted


class SignPrediction(Enum):
    NEGATIVE = "Negative"
    ZERO = "Zero"
    POSITIVE = "Positive"
    NO_CLAIM = "NoClaim"

    def __str__(self) -> str:
        return self.value


PARITY_TO_SIGN = {
    ParityClass.EVEN: SignPrediction.NEGATIVE,
    ParityClass.INFINITE: SignPrediction.ZERO,
    ParityClass.ODD: SignPrediction.POSITIVE,
    ParityClass.MIXED: SignPrediction.NO_CLAIM,
}


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def delta_sets(g: Graph, a: int, b: int, cache: Optional[MemoCache] = None) -> int:
    """Exact Δ(G, A, B) from four σ evaluations sharing one memo cache.

    The sets may overlap; the joint deletion removes A ∪ B.
    """
    g.check_set(a)
    g.check_set(b)
    if cache is None:
        cache = MemoCache()
    return sigma_deleted(g, a, cache) * sigma_deleted(g, b, cache) - sigma_deleted(
        g, 0, cache
    ) * sigma_deleted(g, a | b, cache)


def delta_vertices(g: Graph, u: int, v: int, cache: Optional[MemoCache] = None) -> int:
    """Δ for singleton sets {u}, {v}; u = v is allowed."""
    if not 0 <= u < g.n or not 0 <= v < g.n:
        raise ValueError(f"vertex pair ({u}, {v}) outside 0..{g.n - 1}")
    return delta_sets(g, 1 << u, 1 << v, cache)


class ABReduction(NamedTuple):
    """Split of a graph into the components coupling A to B and the rest.

    ``core`` holds every component containing vertices of both sets, with
    ``core_a``/``core_b`` the sets mapped into its coordinates; ``rest``
    holds all remaining components likewise.  Δ of the whole graph is
    σ(rest−A) · σ(rest−B) · Δ(core, A, B).
    """

    core: Graph
    core_a: int
    core_b: int
    rest: Graph
    rest_a: int
    rest_b: int


def reduce_to_ab_components(g: Graph, a: int, b: int) -> ABReduction:
    g.check_set(a)
    g.check_set(b)
    core_mask = 0
    for comp in components(g):
        if comp & a and comp & b:
            core_mask |= comp
    core_sub = induced(g, core_mask)
    rest_sub = induced(g, g.full & ~core_mask)
    return ABReduction(
        core=core_sub.graph,
        core_a=core_sub.to_sub(a),
        core_b=core_sub.to_sub(b),
        rest=rest_sub.graph,
        rest_a=rest_sub.to_sub(a),
        rest_b=rest_sub.to_sub(b),
    )


def delta_via_reduction(g: Graph, a: int, b: int, cache: Optional[MemoCache] = None) -> int:
    """Δ computed through the component split; equal to ``delta_sets``."""
    red = reduce_to_ab_components(g, a, b)
    factor = sigma_deleted(red.rest, red.rest_a, cache) * sigma_deleted(
        red.rest, red.rest_b, cache
    )
    return factor * delta_sets(red.core, red.core_a, red.core_b, cache)


@dataclass(frozen=True)
class Prediction:
    """Sign claim derived from path parity, with the parity it came from."""

    sign: SignPrediction
    parity: Optional[ParityClass]
    inconclusive: bool = False

    def matches(self, delta: int) -> Optional[bool]:
        """Whether a computed Δ agrees; ``None`` when no claim is made."""
        if self.sign is SignPrediction.NO_CLAIM:
            return None
        want = {
            SignPrediction.NEGATIVE: -1,
            SignPrediction.ZERO: 0,
            SignPrediction.POSITIVE: 1,
        }[self.sign]
        return sign(delta) == want


def predict_sign(
    g: Graph, a: int, b: int, budget: Optional[PathBudget] = None
) -> Prediction:
    """Predict sign(Δ) from the parity class of the A-B-path family.

    A budget overrun yields ``NO_CLAIM`` flagged inconclusive, never a
    fabricated class.
    """
    parity = classify(g, a, b, budget)
    if parity is None:
        return Prediction(SignPrediction.NO_CLAIM, None, inconclusive=True)
    return Prediction(PARITY_TO_SIGN[parity], parity)
