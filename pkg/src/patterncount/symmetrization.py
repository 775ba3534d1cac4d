"""Zykov-style operations on host graphs, each verified by exact counting.

Norm comparisons are done on s-th powers (``sum_H c(v, H)^s``), never on
real roots, so ties are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .counting import count, power_norms, weighted_profiles
from .errors import BudgetExceeded, InvariantViolation
from .graphs import PartSizes, SimpleGraph, multipartite_parts, _bits
from .patterns import Pattern


@dataclass
class Replacement:
    graph: SimpleGraph
    chosen: int
    independent: list[int]
    power_norms: dict[int, int]
    count_before: int
    count_after: int


def replace_independent_set(
    graph: SimpleGraph, independent: Sequence[int], pattern: Pattern, r: int
) -> Replacement:
    """Replace an independent set by twins of its best member.

    The member ``v`` with the largest ``sum_H c(v, H)^s`` (``s = |S|``,
    lowest index on ties) is kept and every other member of ``S`` is given
    ``v``'s neighbourhood.  Both counts are computed directly and the result
    is checked to be no smaller, and to equal ``sum_H c(v, H)^s``.
    """
    S, rows = weighted_profiles(graph, independent, pattern, r)
    s = len(S)
    norms = dict(zip(S, power_norms(rows, s) or [0] * s))
    chosen = max(S, key=lambda u: (norms[u], -u))
    new = graph
    for u in S:
        if u != chosen:
            new = new.clone_onto(chosen, u)
    before = count(graph, pattern, r)
    after = count(new, pattern, r)
    if after != norms[chosen]:
        raise InvariantViolation(
            f"twin graph count {after} differs from the s-th power norm {norms[chosen]}"
        )
    if after < before:
        raise InvariantViolation(f"replacement decreased the count: {before} -> {after}")
    return Replacement(new, chosen, S, norms, before, after)


@dataclass
class StepReport:
    op: str
    args: tuple[int, ...]
    graph: SimpleGraph
    count_before: int
    count_after: int

    @property
    def direction(self) -> str:
        if self.count_after > self.count_before:
            return "increase"
        if self.count_after < self.count_before:
            return "decrease"
        return "equal"

    def to_json(self) -> dict:
        return {
            "op": self.op,
            "args": list(self.args),
            "count_before": str(self.count_before),
            "count_after": str(self.count_after),
        }


def clone_step(graph: SimpleGraph, u: int, v: int, pattern: Pattern, r: int) -> StepReport:
    """Delete ``v`` and add a twin of ``u`` in its place; report both counts.

    For an extremal host the counts are equal.  Otherwise either direction
    can occur and is only reported.
    """
    if u == v or graph.has_edge(u, v):
        raise ValueError(f"{u} and {v} must be distinct and non-adjacent")
    new = graph.clone_onto(u, v)
    return StepReport("clone", (u, v), new, count(graph, pattern, r), count(new, pattern, r))


def edge_deletion_step(graph: SimpleGraph, u: int, v: int, w: int, pattern: Pattern, r: int) -> StepReport:
    """Delete ``vw`` where ``uv`` and ``uw`` are non-edges; report both counts."""
    if len({u, v, w}) != 3 or graph.has_edge(u, v) or graph.has_edge(u, w) or not graph.has_edge(v, w):
        raise ValueError("configuration not present: need uv, uw non-edges and vw an edge")
    new = graph.remove_edge(v, w)
    return StepReport("delete-edge", (u, v, w), new, count(graph, pattern, r), count(new, pattern, r))


def deletion_configurations(graph: SimpleGraph) -> list[tuple[int, int, int]]:
    """All ``(u, v, w)`` with ``uv, uw`` non-edges and ``vw`` an edge (``v < w``)."""
    out = []
    for u in range(graph.n):
        for v, w in graph.edges:
            if u not in (v, w) and not graph.has_edge(u, v) and not graph.has_edge(u, w):
                out.append((u, v, w))
    return out


@dataclass
class SymmetrizationTrace:
    steps: list[StepReport] = field(default_factory=list)
    initial_count: int = 0
    final_graph: SimpleGraph | None = None
    final_parts: PartSizes | None = None
    failed: str | None = None

    @property
    def final_count(self) -> int:
        return self.steps[-1].count_after if self.steps else self.initial_count

    def to_json(self) -> dict:
        return {
            "initial_count": str(self.initial_count),
            "steps": [s.to_json() for s in self.steps],
            "final_parts": list(self.final_parts.sizes) if self.final_parts else None,
            "final_count": str(self.final_count),
            "failed": self.failed,
        }


def _pair_winner(graph: SimpleGraph, a: int, b: int, pattern: Pattern, r: int) -> int:
    """Which of two non-adjacent vertices has the larger 2-norm profile (``a`` on ties)."""
    S, rows = weighted_profiles(graph, [a, b], pattern, r)
    norms = dict(zip(S, power_norms(rows, 2) or [0, 0]))
    return b if norms[b] > norms[a] else a


def symmetrize(graph: SimpleGraph, pattern: Pattern, r: int, *, max_steps: int = 10_000) -> SymmetrizationTrace:
    """Turn ``graph`` into a complete multipartite graph without losing colourings.

    Stage by stage: among the residual vertices with a residual neighbour pick
    ``z`` of largest degree; make each of its non-neighbours a twin of ``z``.
    Each clone is oriented by comparing the pair's 2-norm profiles, so it never
    lowers the count.  When the non-neighbour wins strictly, ``z`` is replaced
    by its twin instead and the stage restarts (the count went up, so this
    cannot repeat forever).  On an extremal host every comparison ties and
    this is the plain cloning construction.
    """
    trace = SymmetrizationTrace(initial_count=count(graph, pattern, r))
    current = graph
    residual = (1 << graph.n) - 1
    steps = 0
    try:
        while True:
            inside = [v for v in _bits(residual) if current.adj[v] & residual]
            if not inside:
                break
            z = max(inside, key=lambda v: (current.degree(v), -v))
            restart = False
            for x in _bits(residual & ~current.adj[z] & ~(1 << z)):
                if current.adj[x] == current.adj[z]:
                    continue
                if steps >= max_steps:
                    raise BudgetExceeded(f"symmetrization exceeded {max_steps} steps")
                steps += 1
                if _pair_winner(current, z, x, pattern, r) == x:
                    before = trace.final_count
                    current = current.clone_onto(x, z)
                    trace.steps.append(
                        StepReport("clone", (x, z), current, before, count(current, pattern, r))
                    )
                    restart = True
                    break
                before = trace.final_count
                current = current.clone_onto(z, x)
                trace.steps.append(StepReport("clone", (z, x), current, before, count(current, pattern, r)))
            if restart:
                continue
            residual &= current.adj[z]
        for step in trace.steps:
            if step.count_after < step.count_before:
                raise InvariantViolation(f"step {step.op}{step.args} decreased the count")
    except BudgetExceeded as exc:
        trace.failed = str(exc)
    trace.final_graph = current
    trace.final_parts = multipartite_parts(current)
    if trace.failed is None and trace.final_parts is None:
        raise InvariantViolation("symmetrization ended on a graph that is not complete multipartite")
    return trace


@dataclass
class HolderResult:
    inequality_holds: bool
    equality: bool
    lhs: int
    rhs: int


def holder_check(vectors: Sequence[Sequence[int]]) -> HolderResult:
    """``(sum_t prod_k x_k(t))^s <= prod_k sum_t x_k(t)^s`` for ``s`` nonnegative vectors.

    ``equality`` is the proportionality condition: ``x_i(t)^s * N_j ==
    x_j(t)^s * N_i`` for all ``i, j, t`` with ``N_i = sum_t x_i(t)^s``,
    or some vector is zero (both sides vanish).
    """
    vecs = [list(v) for v in vectors]
    if not vecs:
        raise ValueError("need at least one vector")
    width = len(vecs[0])
    if any(len(v) != width for v in vecs):
        raise ValueError("vectors must have equal length")
    if any(x < 0 for v in vecs for x in v):
        raise ValueError("vectors must be nonnegative")
    s = len(vecs)
    prod_sum = 0
    for t in range(width):
        p = 1
        for v in vecs:
            p *= v[t]
        prod_sum += p
    powers = [[x**s for x in v] for v in vecs]
    norms = [sum(p) for p in powers]
    rhs = 1
    for nrm in norms:
        rhs *= nrm
    lhs = prod_sum**s
    equality = 0 in norms or all(
        powers[i][t] * norms[0] == powers[0][t] * norms[i] for i in range(1, s) for t in range(width)
    )
    return HolderResult(lhs <= rhs, equality, lhs, rhs)
