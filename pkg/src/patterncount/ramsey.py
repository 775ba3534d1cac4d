"""Brute-force two-colour Ramsey checks for tiny graphs."""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import BudgetExceeded
from .graphs import SimpleGraph
from .patterns import Pattern, canonicalize, pair_list

MAX_RAMSEY_K = 6


def _copies(J: SimpleGraph, k: int) -> set[int]:
    """Edge masks (over the pairs of K_k) of every copy of J in K_k."""
    idx = {p: i for i, p in enumerate(pair_list(k))}
    verts = [v for v in range(J.n) if J.adj[v]]
    out = set()
    for image in permutations(range(k), len(verts)):
        where = dict(zip(verts, image))
        mask = 0
        for u, v in J.edges:
            a, b = where[u], where[v]
            mask |= 1 << idx[(a, b) if a < b else (b, a)]
        out.add(mask)
    return out


def ramsey_le(J: SimpleGraph, k: int, *, max_k: int = MAX_RAMSEY_K) -> bool:
    """Whether every 2-colouring of K_k has a monochromatic copy of ``J``.

    Isolated vertices of ``J`` are ignored.  Sweeps all ``2^C(k,2)``
    colourings, so ``k`` is capped at ``max_k``.
    """
    if J.num_edges < 1:
        raise ValueError("J needs at least one edge")
    if k > max_k:
        raise BudgetExceeded(f"ramsey sweep capped at k <= {max_k}, got k={k}")
    if sum(1 for v in range(J.n) if J.adj[v]) > k:
        return False
    copies = _copies(J, k)
    full = (1 << (k * (k - 1) // 2)) - 1
    for red in range(full + 1):
        blue = full ^ red
        if not any(c & red == c or c & blue == c for c in copies):
            return False
    return True


def class_graph(pattern: Pattern, cls: int) -> SimpleGraph:
    """The graph on ``pattern.k`` vertices formed by one class of the pattern."""
    return SimpleGraph.from_edges(pattern.k, pattern.classes()[cls])


def two_class_ramsey_hypothesis(pattern: Pattern) -> bool:
    """Two classes, one of which forms a graph ``J`` with ``R(J, J) <= k``."""
    if pattern.num_classes != 2:
        return False
    return any(ramsey_le(class_graph(pattern, c), pattern.k) for c in range(2))


def all_two_class_patterns(k: int) -> list[Pattern]:
    """Every two-class pattern of K_k, one per isomorphism class."""
    m = len(pair_list(k))
    seen: dict[bytes, Pattern] = {}
    for size in range(1, m // 2 + 1):
        for chosen in combinations(range(m), size):
            table = [1 if i in chosen else 0 for i in range(m)]
            p = canonicalize(table, k)
            seen.setdefault(p.code, p)
    return [seen[c] for c in sorted(seen)]
