"""Small simple graphs: constructors, canonical forms, enumeration and I/O.

Graphs are stored as a tuple of adjacency bitmasks.  Canonical forms are
computed by colour refinement followed by an exhaustive minimisation over
all vertex orders that respect the refined cells; below eight vertices this
is a few thousand permutations at worst.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations, product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, LemmaInapplicable

MAX_ENUM_N = 7


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, mask in enumerate(self.adj):
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if mask >> self.n:
                raise ValueError(f"vertex {v} adjacent to a vertex outside range")
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {(u, v)}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> SimpleGraph:
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = sum(1 << v for v in set(vs))
        return all(not self.adj[v] & mask for v in vs)

    def induced(self, vertices: Sequence[int]) -> SimpleGraph:
        """Induced subgraph; vertex ``vertices[i]`` becomes ``i``."""
        pos = {v: i for i, v in enumerate(vertices)}
        return SimpleGraph.from_edges(
            len(vertices),
            [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos],
        )

    def relabel(self, perm: Sequence[int]) -> SimpleGraph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def remove_edge(self, u: int, v: int) -> SimpleGraph:
        if not self.has_edge(u, v):
            raise ValueError(f"{(u, v)} is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SimpleGraph(self.n, tuple(adj))

    def add_vertex(self, neighbors: Iterable[int]) -> SimpleGraph:
        """Append vertex ``n`` joined to ``neighbors``."""
        nb = set(neighbors)
        return SimpleGraph.from_edges(self.n + 1, list(self.edges) + [(u, self.n) for u in nb])

    def clone_onto(self, source: int, target: int) -> SimpleGraph:
        """Make ``target`` a twin of ``source`` (delete ``target``, clone ``source``)."""
        if source == target or self.has_edge(source, target):
            raise ValueError("clone source and target must be distinct non-adjacent vertices")
        new_nb = self.adj[source]
        adj = [m & ~(1 << target) for m in self.adj]
        adj[target] = new_nb
        for u in _bits(new_nb):
            adj[u] |= 1 << target
        return SimpleGraph(self.n, tuple(adj))

    def complement(self) -> SimpleGraph:
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, tuple(full & ~m & ~(1 << v) for v, m in enumerate(self.adj)))

    def to_graph6(self) -> str:
        return to_graph6(self)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- part sizes and constructors ---------------------------------------------


@dataclass(frozen=True)
class PartSizes:
    """Sizes of the parts of a complete multipartite graph, largest first."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes:
            raise ValueError("part sizes must be nonempty")
        if any((not isinstance(s, int)) or s < 1 for s in self.sizes):
            raise ValueError(f"part sizes must be positive integers: {self.sizes}")
        if list(self.sizes) != sorted(self.sizes, reverse=True):
            raise ValueError(f"part sizes must be sorted descending: {self.sizes}")

    @classmethod
    def of(cls, sizes: Iterable[int]) -> PartSizes:
        return cls(tuple(sorted((int(s) for s in sizes if s), reverse=True)))

    @property
    def n(self) -> int:
        return sum(self.sizes)

    @property
    def num_edges(self) -> int:
        n = self.n
        return (n * n - sum(s * s for s in self.sizes)) // 2

    def __iter__(self):
        return iter(self.sizes)

    def __len__(self) -> int:
        return len(self.sizes)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.sizes)) + "]"


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, (0,) * n)


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: PartSizes | Sequence[int]) -> SimpleGraph:
    """Vertices blocked consecutively, largest part first."""
    if not isinstance(parts, PartSizes):
        parts = PartSizes.of(parts)
    block = []
    for p, s in enumerate(parts.sizes):
        block += [p] * s
    n = len(block)
    return SimpleGraph.from_edges(
        n, [(u, v) for u, v in combinations(range(n), 2) if block[u] != block[v]]
    )


def turan_parts(n: int, k: int) -> PartSizes:
    """Part sizes of ``T_{k-1}(n)``, the balanced (k-1)-partite graph."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if n < 1:
        raise ValueError("n must be positive")
    q, rem = divmod(n, k - 1)
    return PartSizes.of([q + 1] * rem + [q] * (k - 1 - rem))


def integer_partitions(n: int, max_parts: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` as descending tuples in colex order, optionally with few parts."""
    out = []

    def grow(rest: int, cap: int, acc: list[int]):
        if rest == 0:
            out.append(tuple(acc))
            return
        if max_parts is not None and len(acc) == max_parts:
            return
        for part in range(min(rest, cap), 0, -1):
            acc.append(part)
            grow(rest - part, part, acc)
            acc.pop()

    grow(n, n, [])
    return sorted(out, key=lambda p: tuple(reversed(p)))


def turan_graph(n: int, k: int) -> SimpleGraph:
    return complete_multipartite(turan_parts(n, k))


def turan_number(n: int, k: int) -> int:
    """ex(n, K_k): edges of ``T_{k-1}(n)``."""
    return turan_parts(n, k).num_edges


def multipartite_parts(graph: SimpleGraph) -> PartSizes | None:
    """Part sizes if ``graph`` is complete multipartite, else ``None``.

    The edgeless graph counts as one part.
    """
    if graph.n == 0:
        return None
    full = (1 << graph.n) - 1
    seen = 0
    sizes = []
    for v in range(graph.n):
        if seen >> v & 1:
            continue
        part = full & ~graph.adj[v]
        for u in _bits(part):
            if full & ~graph.adj[u] != part:
                return None
        seen |= part
        sizes.append(popcount(part))
    return PartSizes.of(sizes)


def is_complete_multipartite(graph: SimpleGraph) -> bool:
    return multipartite_parts(graph) is not None


def cliques(graph: SimpleGraph, k: int) -> list[tuple[int, ...]]:
    """All k-cliques as sorted vertex tuples, in lexicographic order."""
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cand: int):
        if len(clique) == k:
            out.append(tuple(clique))
            return
        for v in _bits(cand):
            clique.append(v)
            grow(clique, cand & graph.adj[v] & ~((1 << (v + 1)) - 1))
            clique.pop()

    if k >= 1:
        grow([], (1 << graph.n) - 1)
    return out


def clique_number(graph: SimpleGraph) -> int:
    best = 1 if graph.n else 0
    while cliques(graph, best + 1):
        best += 1
    return best


# -- canonical form ----------------------------------------------------------


def _refined_cells(graph: SimpleGraph) -> list[list[int]]:
    n = graph.n
    colors = [graph.degree(v) for v in range(n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(graph.adj[v]))))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _code_for_order(graph: SimpleGraph, order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for p in range(n):
        row = graph.adj[order[p]]
        for q in range(p + 1, n):
            code = code << 1 | (row >> order[q] & 1)
    return code


def canonical_order(graph: SimpleGraph) -> tuple[int, ...]:
    """Vertex order (new position -> old vertex) giving the canonical labelling."""
    cells = _refined_cells(graph)
    best_code = None
    best_order: tuple[int, ...] = tuple(range(graph.n))
    for choice in product(*(permutations(c) for c in cells)):
        order = tuple(v for cell in choice for v in cell)
        code = _code_for_order(graph, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return best_order


def canonical_graph(graph: SimpleGraph) -> SimpleGraph:
    order = canonical_order(graph)
    perm = [0] * graph.n
    for new, old in enumerate(order):
        perm[old] = new
    return graph.relabel(perm)


def canonical_code(graph: SimpleGraph) -> str:
    """graph6 string of the canonical relabelling."""
    return to_graph6(canonical_graph(graph))


def is_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_code(g) == canonical_code(h)


def graph_key(graph: SimpleGraph) -> str:
    """Canonical code when cheap, else the labelled graph6 string."""
    if graph.n <= 8:
        return canonical_code(graph)
    return "labeled:" + to_graph6(graph)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[SimpleGraph, ...]:
    if n == 1:
        return (empty_graph(1),)
    reps: dict[str, SimpleGraph] = {}
    for base in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            g = base.add_vertex(_bits(mask))
            code = canonical_code(g)
            if code not in reps:
                reps[code] = canonical_graph(g)
    return tuple(reps[c] for c in sorted(reps, key=lambda c: (reps[c].num_edges, c)))


def enumerate_graphs(n: int) -> Iterator[SimpleGraph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    Built by vertex augmentation with canonical-form deduplication; ordered
    by edge count, then canonical code.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUM_N:
        raise BudgetExceeded(f"graph enumeration is capped at n <= {MAX_ENUM_N}, got n={n}")
    yield from _classes(n)


# -- graph6 and JSON ---------------------------------------------------------


def _n_to_g6(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(graph: SimpleGraph) -> str:
    n = graph.n
    bits = [graph.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[p : p + 6])), 2)) for p in range(0, len(bits), 6)
    )
    return _n_to_g6(n) + body


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s or any(not (63 <= ord(ch) <= 126) for ch in s):
        raise ValueError(f"not a graph6 string: {text!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, data = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] != 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        data = vals[4:]
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        data = vals[8:]
    else:
        raise ValueError(f"truncated graph6 header: {text!r}")
    need = n * (n - 1) // 2
    if len(data) != -(-need // 6):
        raise ValueError(f"graph6 body has {len(data)} bytes, expected {-(-need // 6)}")
    bits = [v >> (5 - b) & 1 for v in data for b in range(6)]
    if any(bits[need:]):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return SimpleGraph.from_edges(n, edges)


def graph_from_json(data: dict) -> SimpleGraph:
    try:
        return SimpleGraph.from_edges(int(data["n"]), data["edges"])
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"graph JSON needs 'n' and 'edges': {exc}") from None


def parse_graph(text: str) -> SimpleGraph:
    """Constructor mini-language, file path, or graph6 string.

    ``K<n>``, ``turan:<n>:<k>``, ``parts:<a,b,...>``, ``path:<n>``,
    ``cycle:<n>``, ``empty:<n>``; a path ending in ``.g6``/``.json`` is read
    from disk; anything else is decoded as graph6.
    """
    s = text.strip()
    try:
        if len(s) > 1 and s[0] in "Kk" and s[1:].isdigit():
            return complete_graph(int(s[1:]))
        head, _, rest = s.partition(":")
        head = head.lower()
        if rest:
            if head == "turan":
                n, k = rest.split(":")
                return turan_graph(int(n), int(k))
            if head == "parts":
                return complete_multipartite(PartSizes.of(int(x) for x in rest.split(",")))
            if head == "path":
                return path_graph(int(rest))
            if head == "cycle":
                return cycle_graph(int(rest))
            if head == "empty":
                return empty_graph(int(rest))
    except ValueError as exc:
        raise ValueError(f"bad graph constructor {text!r}: {exc}") from None
    path = Path(s)
    if path.suffix in (".g6", ".json") or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise ValueError(f"cannot read graph file {text!r}: {exc}") from None
        if path.suffix == ".json":
            try:
                return graph_from_json(json.loads(text))
            except json.JSONDecodeError as exc:
                raise ValueError(f"bad graph JSON in {text!r}: {exc}") from None
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ValueError(f"{text!r} must hold exactly one graph6 line")
        return from_graph6(lines[0])
    return from_graph6(s)


# -- part-size deviation bound -----------------------------------------------


def part_size_bound_check(parts: PartSizes | Sequence[int], k: int, m: int) -> bool:
    """Check that near-extremal (k-1)-partite graphs have near-balanced parts.

    For a complete (k-1)-partite graph on ``t`` vertices with at least
    ``ex(t, K_k) - m`` edges (``m >= (k-1)^2``) every part size ``s`` should
    satisfy ``|s - t/(k-1)| <= sqrt(2(k-2)/(k-1) * m + 2(k-2))``.  Returns
    whether that holds; raises :class:`LemmaInapplicable` when the hypotheses
    fail.  Compared exactly by clearing denominators and squaring.
    """
    if not isinstance(parts, PartSizes):
        parts = PartSizes.of(parts)
    if k < 3:
        raise LemmaInapplicable("k must be at least 3")
    q = k - 1
    if len(parts) > q:
        raise LemmaInapplicable(f"{len(parts)} parts given, at most {q} allowed")
    if m < q * q:
        raise LemmaInapplicable(f"m={m} is below (k-1)^2={q * q}")
    t = parts.n
    if parts.num_edges < turan_number(t, k) - m:
        raise LemmaInapplicable(
            f"{parts.num_edges} edges is fewer than ex({t}, K_{k}) - m = {turan_number(t, k) - m}"
        )
    sizes = list(parts.sizes) + [0] * (q - len(parts))
    # (s*q - t)^2 <= q^2 * (2(k-2)m/q + 2(k-2))
    rhs = 2 * (k - 2) * q * m + 2 * (k - 2) * q * q
    return all((s * q - t) ** 2 <= rhs for s in sizes)


def part_size_deviation_bound(k: int, m: int) -> float:
    """The deviation bound as a float, for display only."""
    q = k - 1
    return ((2 * (k - 2) * m + 2 * (k - 2) * q) / q) ** 0.5
