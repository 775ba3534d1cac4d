"""Exact counting of pattern-free edge colourings.

The search assigns colours edge by edge.  Every k-clique of the host is
attributed to the last of its free edges in search order and is checked
only when that edge receives a colour.  Colours are symmetric (a pattern
ignores colour names), so colours are introduced in order of first use and
the branch that opens a new colour is weighted by the number of colours
still unused.  Edges that lie in no k-clique never constrain anything and
contribute a plain factor of ``r``.

All counts are Python integers.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from operator import itemgetter
from typing import Iterator, Sequence

from .errors import BudgetExceeded
from .graphs import SimpleGraph, PartSizes, cliques, complete_multipartite, graph_key
from .patterns import Pattern, forbidden_colorings, pair_list, relabel_first_appearance

EdgeOrder = str | Sequence[tuple[int, int]]

_TIME_CHECK_MASK = (1 << 14) - 1


def order_edges(edges: Sequence[tuple[int, int]], order: EdgeOrder = "colex") -> list[tuple[int, int]]:
    """Arrange edges for the search.

    ``"colex"`` sorts by larger endpoint first so cliques close early;
    ``"lex"`` keeps lexicographic order; ``"reverse"`` reverses colex;
    ``"random:<seed>"`` shuffles; a sequence of pairs is used as given for
    the edges it names, the rest follow in colex order.
    """
    edges = list(edges)
    if isinstance(order, str):
        if order == "colex":
            return sorted(edges, key=lambda e: (e[1], e[0]))
        if order == "lex":
            return sorted(edges)
        if order == "reverse":
            return sorted(edges, key=lambda e: (e[1], e[0]), reverse=True)
        if order.startswith("random:"):
            rng = random.Random(int(order.split(":", 1)[1]))
            out = sorted(edges)
            rng.shuffle(out)
            return out
        raise ValueError(f"unknown edge order {order!r}")
    wanted = [tuple(sorted(e)) for e in order]
    present = set(edges)
    head = [e for e in wanted if e in present]
    rest = set(edges) - set(head)
    return head + sorted(rest, key=lambda e: (e[1], e[0]))


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = None
    max_seconds: float | None = None


class ColoringSearch:
    """Backtracking over the free edges of a host graph.

    ``fixed`` edges carry colours supplied per call (a precoloured subgraph);
    the remaining edges are searched.  With ``prune_free=True`` free edges
    outside every k-clique are dropped and accounted for by a factor of
    ``r`` each; only the counting entry points allow that.
    """

    def __init__(
        self,
        graph: SimpleGraph,
        pattern: Pattern,
        r: int,
        *,
        fixed: Sequence[tuple[int, int]] = (),
        order: EdgeOrder = "colex",
        prune_free: bool = False,
    ):
        if r < 1:
            raise ValueError("r must be at least 1")
        self.graph = graph
        self.pattern = pattern
        self.r = r
        self.forbidden = forbidden_colorings(pattern, r)
        fixed = [tuple(sorted(e)) for e in fixed]
        for e in fixed:
            if not graph.has_edge(*e):
                raise ValueError(f"fixed edge {e} is not an edge of the host")
        fixed_set = set(fixed)
        if len(fixed_set) != len(fixed):
            raise ValueError("duplicate fixed edges")

        host_cliques = cliques(graph, pattern.k) if self.forbidden else []
        clique_edges = {
            (c[i], c[j]) for c in host_cliques for i, j in pair_list(pattern.k)
        }
        free = [e for e in order_edges(graph.edges, order) if e not in fixed_set]
        if prune_free:
            self.skipped = [e for e in free if e not in clique_edges]
            free = [e for e in free if e in clique_edges]
        else:
            self.skipped = []
        self.fixed = fixed
        self.free = free
        self.slot = {e: i for i, e in enumerate(fixed + free)}
        nf = len(fixed)
        self.checks: list[list[itemgetter]] = [[] for _ in free]
        self.fixed_checks: list[itemgetter] = []
        for c in host_cliques:
            slots = [self.slot[(c[i], c[j])] for i, j in pair_list(pattern.k)]
            getter = itemgetter(*slots)
            last = max(slots)
            if last < nf:
                self.fixed_checks.append(getter)
            else:
                self.checks[last - nf].append(getter)
        self.nodes = 0

    # -- helpers -------------------------------------------------------------

    @property
    def num_slots(self) -> int:
        return len(self.fixed) + len(self.free)

    def _prepare(self, fixed_colors: Sequence[int]) -> tuple[list[int], int]:
        if len(fixed_colors) != len(self.fixed):
            raise ValueError(f"expected {len(self.fixed)} fixed colours, got {len(fixed_colors)}")
        norm = relabel_first_appearance(fixed_colors)
        used = max(norm) + 1 if norm else 0
        if used > self.r or any(not (0 <= c < self.r) for c in fixed_colors):
            raise ValueError("fixed colours must lie in range(r)")
        colors = list(norm) + [0] * len(self.free)
        return colors, used

    def fixed_is_good(self, fixed_colors: Sequence[int]) -> bool:
        colors = list(fixed_colors) + [0] * len(self.free)
        forb = self.forbidden
        return not any(g(colors) in forb for g in self.fixed_checks)

    # -- counting ------------------------------------------------------------

    def count(
        self,
        fixed_colors: Sequence[int] = (),
        *,
        budget: Budget | None = None,
        start: int = 0,
        prefix: Sequence[int] = (),
        used: int | None = None,
    ) -> int:
        """Number of good completions, times ``r`` per skipped edge.

        ``prefix``/``start``/``used`` resume from a partial assignment of the
        first ``start`` free edges (used by the worker pool); the skipped-edge
        factor is then left to the caller.
        """
        colors, used0 = self._prepare(fixed_colors)
        if start:
            nf = len(self.fixed)
            colors[nf : nf + start] = prefix
            used0 = used
        total = self._count_from(colors, start, used0, budget or Budget())
        return total * self.r ** len(self.skipped) if not start else total

    def _count_from(self, colors: list[int], start: int, used: int, budget: Budget) -> int:
        r = self.r
        checks = self.checks
        forb = self.forbidden
        nf = len(self.fixed)
        end = len(self.free)
        max_nodes = budget.max_nodes
        deadline = None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        t0 = time.monotonic()
        nodes = self.nodes

        def rec(pos: int, used: int) -> int:
            nonlocal nodes
            if pos == end:
                return 1
            slot = nf + pos
            chk = checks[pos]
            total = 0
            top = used + 1 if used < r else r
            for c in range(top):
                nodes += 1
                if not nodes & _TIME_CHECK_MASK or (max_nodes is not None and nodes > max_nodes):
                    if max_nodes is not None and nodes > max_nodes:
                        raise BudgetExceeded(
                            f"node budget {max_nodes} exceeded", nodes, time.monotonic() - t0
                        )
                    if deadline is not None and time.monotonic() > deadline:
                        raise BudgetExceeded(
                            f"time budget {budget.max_seconds}s exceeded",
                            nodes,
                            time.monotonic() - t0,
                        )
                colors[slot] = c
                if chk and any(g(colors) in forb for g in chk):
                    continue
                if c == used:
                    total += (r - used) * rec(pos + 1, used + 1)
                else:
                    total += rec(pos + 1, used)
            return total

        try:
            return rec(start, used)
        finally:
            self.nodes = nodes

    # -- enumeration ---------------------------------------------------------

    def iter_weighted(self, fixed_colors: Sequence[int] = (), depth: int | None = None) -> Iterator[tuple[tuple[int, ...], int, int]]:
        """Good assignments of the first ``depth`` free edges, up to colour renaming.

        Yields ``(free_colors, weight, used)``: ``weight`` is the number of
        genuine colourings represented, ``used`` the number of distinct
        colours so far.  Colours follow search order, not lexicographic order.
        """
        colors, used0 = self._prepare(fixed_colors)
        r = self.r
        checks = self.checks
        forb = self.forbidden
        nf = len(self.fixed)
        end = len(self.free) if depth is None else min(depth, len(self.free))

        def rec(pos: int, used: int, weight: int):
            if pos == end:
                yield tuple(colors[nf : nf + end]), weight, used
                return
            slot = nf + pos
            chk = checks[pos]
            top = used + 1 if used < r else r
            for c in range(top):
                self.nodes += 1
                colors[slot] = c
                if chk and any(g(colors) in forb for g in chk):
                    continue
                if c == used:
                    yield from rec(pos + 1, used + 1, weight * (r - used))
                else:
                    yield from rec(pos + 1, used, weight)

        yield from rec(0, used0, 1)

    def iter_colorings(self, fixed_colors: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
        """Every good colouring of the free edges, in search order (no symmetry reduction)."""
        if len(fixed_colors) != len(self.fixed):
            raise ValueError(f"expected {len(self.fixed)} fixed colours, got {len(fixed_colors)}")
        colors = list(fixed_colors) + [0] * len(self.free)
        r = self.r
        checks = self.checks
        forb = self.forbidden
        nf = len(self.fixed)
        end = len(self.free)

        def rec(pos: int):
            if pos == end:
                yield tuple(colors[nf:])
                return
            slot = nf + pos
            chk = checks[pos]
            for c in range(r):
                colors[slot] = c
                if chk and any(g(colors) in forb for g in chk):
                    continue
                yield from rec(pos + 1)

        yield from rec(0)

    def to_lex(self, free_colors: Sequence[int]) -> tuple[int, ...]:
        """Reorder free-edge colours (search order) to the host's lexicographic edge order.

        Only meaningful when there are no fixed or skipped edges.
        """
        pos = {e: i for i, e in enumerate(self.free)}
        return tuple(free_colors[pos[e]] for e in self.graph.edges)


# -- public API ----------------------------------------------------------------


@dataclass
class CountResult:
    count: int
    graph_hash: str
    pattern_code: str
    r: int
    nodes_visited: int
    wall_time: float

    def to_json(self) -> dict:
        return {
            "count": str(self.count),
            "graph": self.graph_hash,
            "pattern_code": self.pattern_code,
            "r": self.r,
            "nodes_visited": self.nodes_visited,
            "wall_time": round(self.wall_time, 6),
        }


@dataclass(frozen=True)
class EdgeColoring:
    """Colours of a graph's edges, aligned with ``graph.edges`` (lexicographic)."""

    graph: SimpleGraph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.graph.num_edges:
            raise ValueError("one colour per edge required")

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edges.index((min(u, v), max(u, v)))]


_worker_search: ColoringSearch | None = None


def _init_worker(graph, pattern, r, order):
    global _worker_search
    _worker_search = ColoringSearch(graph, pattern, r, order=order, prune_free=True)


def _work(task):
    prefix, used, budget = task
    s = _worker_search
    s.nodes = 0
    n = s.count(prefix=prefix, start=len(prefix), used=used, budget=budget)
    return n, s.nodes


def default_workers() -> int:
    env = os.environ.get("PATTERNCOUNT_THREADS")
    return max(1, int(env)) if env else 1


def count_colorings(
    graph: SimpleGraph,
    pattern: Pattern,
    r: int,
    *,
    order: EdgeOrder = "colex",
    workers: int = 1,
    max_nodes: int | None = None,
    max_seconds: float | None = None,
) -> CountResult:
    """Exact number of ``r``-colourings of ``graph`` with no copy of ``pattern``.

    With ``workers > 1`` the top of the search tree is expanded here and the
    subtrees are counted in a process pool; the result is identical to the
    single-process count.  Exceeding a budget raises :class:`BudgetExceeded`.
    """
    t0 = time.monotonic()
    budget = Budget(max_nodes, max_seconds)
    search = ColoringSearch(graph, pattern, r, order=order, prune_free=True)
    if workers <= 1 or len(search.free) < 4:
        total = search.count(budget=budget)
        nodes = search.nodes
    else:
        depth = 1
        while depth < len(search.free) - 2 and r ** depth < 8 * workers:
            depth += 1
        tasks = []
        weights = []
        for prefix, weight, used in search.iter_weighted(depth=depth):
            tasks.append((prefix, used, budget))
            weights.append(weight)
        nodes = search.nodes
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(graph, pattern, r, order)
        ) as pool:
            results = list(pool.map(_work, tasks))
        total = sum(w * c for w, (c, _) in zip(weights, results))
        total *= r ** len(search.skipped)
        nodes += sum(nd for _, nd in results)
    return CountResult(
        count=total,
        graph_hash=graph_key(graph),
        pattern_code=pattern.code_hex,
        r=r,
        nodes_visited=nodes,
        wall_time=time.monotonic() - t0,
    )


def count(graph: SimpleGraph, pattern: Pattern, r: int, **kw) -> int:
    """Shorthand for ``count_colorings(...).count``."""
    return count_colorings(graph, pattern, r, **kw).count


class ExtensionCounter:
    """Counts colourings of the edges from a new vertex into a coloured host.

    Built once per (host, neighbourhood) and queried for many host colourings.
    """

    def __init__(self, host: SimpleGraph, neighbors: Sequence[int], pattern: Pattern, r: int):
        nb = sorted(set(neighbors))
        if any(not (0 <= u < host.n) for u in nb):
            raise ValueError("neighbourhood outside host vertex range")
        self.host = host
        self.neighbors = nb
        self.search = ColoringSearch(
            host.add_vertex(nb), pattern, r, fixed=host.edges, prune_free=True
        )

    def __call__(self, host_colors: Sequence[int], check: bool = False) -> int:
        if check and not self.search.fixed_is_good(host_colors):
            raise ValueError("host colouring already contains the pattern")
        return self.search.count(host_colors)


def count_extensions(
    h_coloring: EdgeColoring, v_adjacency: Sequence[int], pattern: Pattern, r: int
) -> int:
    """Colourings of the edges from a new vertex to ``v_adjacency`` keeping the union good.

    Raises ``ValueError`` if ``h_coloring`` itself contains the pattern.
    """
    return ExtensionCounter(h_coloring.graph, v_adjacency, pattern, r)(h_coloring.colors, check=True)


def good_colorings(graph: SimpleGraph, pattern: Pattern, r: int, *, limit: int | None = None) -> Iterator[tuple[int, ...]]:
    """All good colourings, each aligned with ``graph.edges``."""
    search = ColoringSearch(graph, pattern, r)
    for i, cols in enumerate(search.iter_colorings()):
        if limit is not None and i >= limit:
            raise BudgetExceeded(f"more than {limit} good colourings")
        yield search.to_lex(cols)


def weighted_good_colorings(graph: SimpleGraph, pattern: Pattern, r: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Good colourings up to renaming colours, with multiplicities (lexicographic edge order)."""
    search = ColoringSearch(graph, pattern, r)
    for cols, weight, _ in search.iter_weighted():
        yield search.to_lex(cols), weight


def count_multipartite(parts: PartSizes | Sequence[int], pattern: Pattern, r: int) -> CountResult:
    """Count for a complete multipartite graph via its largest class of twins.

    With ``P`` the largest part (size ``s``) and ``H`` the rest, the count is
    the sum over good colourings of ``H`` of ``c(v, H)^s`` for any ``v`` in ``P``.
    """
    t0 = time.monotonic()
    if not isinstance(parts, PartSizes):
        parts = PartSizes.of(parts)
    s, rest = parts.sizes[0], parts.sizes[1:]
    graph = complete_multipartite(parts)
    if not rest:
        total, nodes = 1, 0
    else:
        host = complete_multipartite(PartSizes(rest))
        ext = ExtensionCounter(host, range(host.n), pattern, r)
        hsearch = ColoringSearch(host, pattern, r)
        total = 0
        for cols, weight, _ in hsearch.iter_weighted():
            total += weight * ext(hsearch.to_lex(cols)) ** s
        nodes = hsearch.nodes + ext.search.nodes
    return CountResult(
        count=total,
        graph_hash=graph_key(graph),
        pattern_code=pattern.code_hex,
        r=r,
        nodes_visited=nodes,
        wall_time=time.monotonic() - t0,
    )


# -- profile vectors -------------------------------------------------------------


@dataclass
class ProfileTable:
    """Extension counts of the vertices of an independent set.

    ``rows`` maps each good colouring of ``H = G - S`` (aligned with
    ``host.edges``) to the tuple ``(c(u, H) for u in S)``.
    """

    host: SimpleGraph
    host_vertices: list[int]
    independent: list[int]
    rows: dict[tuple[int, ...], tuple[int, ...]] = field(default_factory=dict)

    def vector(self, u: int) -> list[int]:
        i = self.independent.index(u)
        return [row[i] for row in self.rows.values()]

    def product_sum(self) -> int:
        total = 0
        for row in self.rows.values():
            p = 1
            for x in row:
                p *= x
            total += p
        return total


def _split(graph: SimpleGraph, independent: Sequence[int]):
    S = sorted(set(independent))
    if not S:
        raise ValueError("independent set must be nonempty")
    if any(not (0 <= u < graph.n) for u in S):
        raise ValueError("vertex out of range")
    if not graph.is_independent(S):
        raise ValueError(f"{S} is not an independent set")
    rest = [v for v in range(graph.n) if v not in set(S)]
    host = graph.induced(rest)
    pos = {v: i for i, v in enumerate(rest)}
    nbs = {u: [pos[w] for w in graph.neighbors(u)] for u in S}
    return S, rest, host, nbs


def profile_vector(
    graph: SimpleGraph,
    independent: Sequence[int],
    pattern: Pattern,
    r: int,
    *,
    max_colorings: int = 200_000,
) -> ProfileTable:
    """Full table of extension counts for every good colouring of ``G - S``."""
    S, rest, host, nbs = _split(graph, independent)
    counters = [ExtensionCounter(host, nbs[u], pattern, r) for u in S]
    table = ProfileTable(host=host, host_vertices=rest, independent=S)
    for cols in good_colorings(host, pattern, r, limit=max_colorings):
        table.rows[cols] = tuple(c(cols) for c in counters)
    return table


def weighted_profiles(
    graph: SimpleGraph, independent: Sequence[int], pattern: Pattern, r: int
) -> tuple[list[int], list[tuple[int, tuple[int, ...]]]]:
    """Profile rows up to colour renaming: ``(S, [(weight, counts), ...])``.

    Sums of symmetric functions of the rows (products, s-th powers) agree
    with the full table once each row is multiplied by its weight.
    """
    S, _, host, nbs = _split(graph, independent)
    counters = [ExtensionCounter(host, nbs[u], pattern, r) for u in S]
    rows = []
    for cols, weight in weighted_good_colorings(host, pattern, r):
        rows.append((weight, tuple(c(cols) for c in counters)))
    return S, rows


def power_norms(rows: Sequence[tuple[int, tuple[int, ...]]], s: int) -> list[int]:
    """``sum_H c(u, H)^s`` for each column, i.e. the s-th power of the l_s norm."""
    if not rows:
        return []
    width = len(rows[0][1])
    return [sum(w * row[i] ** s for w, row in rows) for i in range(width)]
