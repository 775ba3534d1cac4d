"""Edge weights by triangle membership: 2 inside some triangle, 3 otherwise."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BudgetExceeded
from .graphs import SimpleGraph, canonical_code, enumerate_graphs

MAX_WEIGHT_T = 7

# exact rational upper bound for sqrt(2) + 0.01 (sqrt(2) + 0.01 = 1.42421356...)
SQRT2_PLUS = Fraction(14243, 10000)
# decay exponent 0.16 as a fraction
DECAY = Fraction(4, 25)


def _in_triangle(graph: SimpleGraph, u: int, v: int) -> bool:
    return bool(graph.adj[u] & graph.adj[v])


@dataclass
class WeightedGraphReport:
    code: str
    e2: int
    e3: int
    ebar: int

    @property
    def w(self) -> int:
        return 2**self.e2 * 3**self.e3

    def to_json(self) -> dict:
        return {"graph": self.code, "e2": self.e2, "e3": self.e3, "ebar": self.ebar, "w": str(self.w)}


def weigh(graph: SimpleGraph) -> WeightedGraphReport:
    e2 = sum(1 for u, v in graph.edges if _in_triangle(graph, u, v))
    e3 = graph.num_edges - e2
    ebar = comb(graph.n, 2) - graph.num_edges
    return WeightedGraphReport(canonical_code(graph) if graph.n <= 8 else "", e2, e3, ebar)


def weight(graph: SimpleGraph) -> int:
    return weigh(graph).w


def vertex_weights(graph: SimpleGraph) -> list[int]:
    """Product of the weights of the edges at each vertex."""
    out = [1] * graph.n
    for u, v in graph.edges:
        f = 2 if _in_triangle(graph, u, v) else 3
        out[u] *= f
        out[v] *= f
    return out


def vertex_weight_identity_check(graph: SimpleGraph) -> bool:
    """``w(G)^2`` equals the product of the vertex weights."""
    prod = 1
    for x in vertex_weights(graph):
        prod *= x
    return weight(graph) ** 2 == prod


@dataclass
class MaxWeight:
    t: int
    max_w: int
    argmax: list[str]
    bound: int

    @property
    def bound_holds(self) -> bool:
        return self.max_w <= self.bound

    @property
    def complete_graph_attains(self) -> bool:
        return self.max_w == self.bound


def max_w(t: int) -> MaxWeight:
    """Largest weight over all graphs on ``t`` vertices, next to ``2^C(t,2)``."""
    if t > MAX_WEIGHT_T:
        raise BudgetExceeded(f"weight sweep capped at t <= {MAX_WEIGHT_T}, got t={t}")
    reports = [weigh(g) for g in enumerate_graphs(t)]
    best = max(r.w for r in reports)
    return MaxWeight(t, best, sorted(r.code for r in reports if r.w == best), 2 ** comb(t, 2))


@dataclass
class StabilityComponents:
    t: int
    ebar: int
    e3: int
    w: int
    e3_bound_holds: bool
    decay_bound_holds: bool


def stability_components(graph: SimpleGraph) -> StabilityComponents:
    """Check ``e3 <= (sqrt2 + 0.01) ebar`` and ``w <= 2^C(t,2) 2^(-0.16 ebar)`` exactly.

    The first uses the rational ``14243/10000``, which is at least
    ``sqrt2 + 0.01``.  The second is raised to the 25th power so both sides
    are integers: ``w^25 <= 2^(25 C(t,2) - 4 ebar)``.
    """
    rep = weigh(graph)
    t = graph.n
    e3_ok = rep.e3 <= SQRT2_PLUS * rep.ebar
    exp = DECAY.denominator * comb(t, 2) - DECAY.numerator * rep.ebar
    decay_ok = exp >= 0 and rep.w ** DECAY.denominator <= 2**exp
    return StabilityComponents(t, rep.ebar, rep.e3, rep.w, e3_ok, decay_ok)
