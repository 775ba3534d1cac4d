"""Exhaustive searches for graphs with the most good colourings."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cache import ResultCache
from .counting import count, count_multipartite
from .errors import BudgetExceeded, InvariantViolation
from .graphs import (
    PartSizes,
    SimpleGraph,
    canonical_code,
    complete_multipartite,
    enumerate_graphs,
    from_graph6,
    integer_partitions,
    multipartite_parts,
    turan_parts,
)
from .patterns import Pattern, catalog
from .ramsey import two_class_ramsey_hypothesis

MAX_ALL_GRAPHS_N = 6
MAX_MULTIPARTITE_N = 10


@dataclass
class SearchReport:
    n: int
    r: int
    pattern_code: str
    best_count: int
    argmax_graphs: list[str]
    argmax_parts: list[PartSizes] = field(default_factory=list)
    mode: str = "all-graphs"
    all_counts: dict[str, int] = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "pattern_code": self.pattern_code,
            "mode": self.mode,
            "best_count": str(self.best_count),
            "argmax_graphs": list(self.argmax_graphs),
            "argmax_parts": [list(p.sizes) for p in self.argmax_parts],
        }


def _recount(graphs: list[SimpleGraph], pattern: Pattern, r: int, best: int) -> None:
    """Re-count every maximizer with a different edge order and the plain engine."""
    for g in graphs:
        again = count(g, pattern, r, order="lex")
        if again != best:
            raise InvariantViolation(f"maximizer recount {again} != {best}")


def search_multipartite(
    n: int, pattern: Pattern, r: int, cache: ResultCache | None = None
) -> SearchReport:
    """Maximise the count over all complete multipartite graphs on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_MULTIPARTITE_N:
        raise BudgetExceeded(f"multipartite sweep capped at n <= {MAX_MULTIPARTITE_N}, got n={n}")
    counts: dict[tuple[int, ...], int] = {}
    for parts in integer_partitions(n):
        c = cache.get(n, r, pattern.code_hex, parts=parts) if cache is not None else None
        if c is None:
            c = count_multipartite(parts, pattern, r).count
            if cache is not None:
                cache.put(n, r, pattern.code_hex, c, parts=parts)
        counts[parts] = c
    best = max(counts.values())
    winners = [p for p in counts if counts[p] == best]
    graphs = [complete_multipartite(p) for p in winners]
    _recount(graphs, pattern, r, best)
    return SearchReport(
        n=n,
        r=r,
        pattern_code=pattern.code_hex,
        best_count=best,
        argmax_graphs=sorted({canonical_code(g) for g in graphs}),
        argmax_parts=[PartSizes(p) for p in winners],
        mode="multipartite",
        all_counts={",".join(map(str, p)): c for p, c in counts.items()},
    )


def _count_job(job):
    g6, pattern, r = job
    return count(from_graph6(g6), pattern, r)


def search_all_graphs(
    n: int, pattern: Pattern, r: int, *, workers: int = 1, cache: ResultCache | None = None
) -> SearchReport:
    """Maximise the count over every isomorphism class of graphs on ``n`` vertices."""
    if n > MAX_ALL_GRAPHS_N:
        raise BudgetExceeded(f"all-graphs sweep capped at n <= {MAX_ALL_GRAPHS_N}, got n={n}")
    classes = list(enumerate_graphs(n))
    codes = [canonical_code(g) for g in classes]
    counts: dict[str, int | None] = {}
    for code in codes:
        counts[code] = cache.get(n, r, pattern.code_hex, graph6=code) if cache is not None else None
    todo = [c for c in codes if counts[c] is None]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_count_job, [(c, pattern, r) for c in todo]))
    else:
        values = [_count_job((c, pattern, r)) for c in todo]
    for code, value in zip(todo, values):
        counts[code] = value
        if cache is not None:
            cache.put(n, r, pattern.code_hex, value, graph6=code)
    best = max(counts.values())
    winners = sorted(c for c in codes if counts[c] == best)
    _recount([from_graph6(c) for c in winners], pattern, r, best)
    parts = [multipartite_parts(from_graph6(c)) for c in winners]
    return SearchReport(
        n=n,
        r=r,
        pattern_code=pattern.code_hex,
        best_count=best,
        argmax_graphs=winners,
        argmax_parts=[p for p in parts if p is not None],
        mode="all-graphs",
        all_counts=dict(counts),
    )


def every_maximizer_expected_multipartite(pattern: Pattern, r: int) -> bool:
    """Whether the pattern meets the hypotheses under which every maximizer is multipartite."""
    if pattern.is_monochromatic or pattern.num_classes > r:
        return False
    if pattern == catalog("T0"):
        return False
    if r == 2 and pattern == catalog("P2"):
        return False
    return True


@dataclass
class MultipartiteVerdict:
    n: int
    r: int
    pattern_code: str
    best_count: int
    multipartite_best: int
    some_maximizer_multipartite: bool
    all_maximizers_multipartite: bool
    all_expected: bool
    non_multipartite_maximizers: list[str]

    @property
    def maxima_agree(self) -> bool:
        return self.best_count == self.multipartite_best

    @property
    def existence_ok(self) -> bool:
        return self.some_maximizer_multipartite and self.maxima_agree

    @property
    def discrepancy(self) -> bool:
        """All maximizers were expected multipartite but one is not."""
        return self.all_expected and not self.all_maximizers_multipartite

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "pattern_code": self.pattern_code,
            "best_count": str(self.best_count),
            "multipartite_best": str(self.multipartite_best),
            "some_maximizer_multipartite": self.some_maximizer_multipartite,
            "all_maximizers_multipartite": self.all_maximizers_multipartite,
            "all_expected": self.all_expected,
            "non_multipartite_maximizers": self.non_multipartite_maximizers,
        }


def verify_multipartite_theorems(
    n: int, pattern: Pattern, r: int, *, workers: int = 1, cache: ResultCache | None = None
) -> MultipartiteVerdict:
    """Compare the all-graphs sweep with the multipartite sweep at ``n``."""
    full = search_all_graphs(n, pattern, r, workers=workers, cache=cache)
    multi = search_multipartite(n, pattern, r, cache=cache)
    bad = [c for c in full.argmax_graphs if multipartite_parts(from_graph6(c)) is None]
    return MultipartiteVerdict(
        n=n,
        r=r,
        pattern_code=pattern.code_hex,
        best_count=full.best_count,
        multipartite_best=multi.best_count,
        some_maximizer_multipartite=len(bad) < len(full.argmax_graphs),
        all_maximizers_multipartite=not bad,
        all_expected=every_maximizer_expected_multipartite(pattern, r),
        non_multipartite_maximizers=bad,
    )


@dataclass
class TuranComparison:
    n: int
    pattern_code: str
    turan_parts: PartSizes
    turan_count: int
    best_parts: list[PartSizes]
    best_count: int

    @property
    def turan_is_best(self) -> bool:
        return self.turan_count == self.best_count


def turan_comparison(n: int, pattern: Pattern, r: int = 3) -> TuranComparison:
    """Multipartite optimum next to ``T_{k-1}(n)`` for a two-class Ramsey-type pattern.

    The Turán graph is only claimed optimal for large ``n``; this merely records
    what happens at small ``n``.
    """
    if not two_class_ramsey_hypothesis(pattern):
        raise ValueError("pattern is not a two-class pattern with a Ramsey class")
    rep = search_multipartite(n, pattern, r)
    tp = turan_parts(n, pattern.k)
    return TuranComparison(
        n=n,
        pattern_code=pattern.code_hex,
        turan_parts=tp,
        turan_count=count_multipartite(tp, pattern, r).count,
        best_parts=rep.argmax_parts,
        best_count=rep.best_count,
    )
