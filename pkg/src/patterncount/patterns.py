"""Edge-partition patterns of complete graphs.

A pattern of ``K_k`` is a partition of its ``C(k, 2)`` edges into nonempty
classes.  Colour names are irrelevant, so two patterns are the same when one
is obtained from the other by permuting vertices and renaming classes.  The
identity of a pattern is its canonical code: the lexicographically smallest
flattened class table over all ``k!`` vertex orders, with classes renamed by
first appearance.

Pairs are always flattened in lexicographic order ``(0,1), (0,2), ...,
(k-2,k-1)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from pathlib import Path
from typing import Hashable, Iterable, Mapping, Sequence

MAX_K = 8


def pair_list(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


@lru_cache(maxsize=None)
def _pair_index(k: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(pair_list(k))}


def relabel_first_appearance(labels: Iterable[Hashable]) -> tuple[int, ...]:
    """Rename labels to 0, 1, 2, ... in order of first appearance."""
    seen: dict[Hashable, int] = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


@lru_cache(maxsize=None)
def _permuted_pair_indices(k: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, the source pair index of every target pair."""
    idx = _pair_index(k)
    pairs = pair_list(k)
    out = []
    for perm in permutations(range(k)):
        row = []
        for i, j in pairs:
            a, b = perm[i], perm[j]
            row.append(idx[(a, b) if a < b else (b, a)])
        out.append(tuple(row))
    return tuple(out)


def _all_forms(k: int, table: Sequence[int]) -> set[tuple[int, ...]]:
    return {
        relabel_first_appearance(table[s] for s in src)
        for src in _permuted_pair_indices(k)
    }


def _canonical_table(k: int, table: Sequence[int]) -> tuple[int, ...]:
    best = None
    for src in _permuted_pair_indices(k):
        form = relabel_first_appearance(table[s] for s in src)
        if best is None or form < best:
            best = form
    return best


@dataclass(frozen=True, eq=False)
class Pattern:
    """A partition of the edges of ``K_k``.

    ``class_of`` is the flattened class table (lexicographic pair order) with
    classes numbered by first appearance; it keeps the vertex labelling the
    pattern was built with.  Equality and hashing go through ``code``.
    """

    k: int
    class_of: tuple[int, ...]
    num_classes: int
    code: bytes = field(repr=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.code == other.code

    def __hash__(self) -> int:
        return hash(self.code)

    @property
    def code_hex(self) -> str:
        return self.code.hex()

    def pairs(self) -> list[tuple[int, int]]:
        return pair_list(self.k)

    def classes(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.num_classes)]
        for pair, c in zip(pair_list(self.k), self.class_of):
            out[c].append(pair)
        return out

    def class_sizes(self) -> list[int]:
        return sorted((len(c) for c in self.classes()), reverse=True)

    def class_of_pair(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.class_of[_pair_index(self.k)[(i, j)]]

    @property
    def is_monochromatic(self) -> bool:
        return self.num_classes == 1

    def to_json(self) -> dict:
        return {"k": self.k, "classes": [[list(p) for p in c] for c in self.classes()]}


def canonicalize(class_table: Mapping[tuple[int, int], Hashable] | Sequence[Hashable], k: int) -> Pattern:
    """Build a :class:`Pattern` from a raw edge-to-class table.

    ``class_table`` is either a mapping from pairs ``(i, j)`` to arbitrary
    hashable labels, or a sequence of labels in lexicographic pair order.
    """
    if not isinstance(k, int) or k < 3 or k > MAX_K:
        raise ValueError(f"k must be an integer in [3, {MAX_K}], got {k!r}")
    pairs = pair_list(k)
    if isinstance(class_table, Mapping):
        norm: dict[tuple[int, int], Hashable] = {}
        for (i, j), lab in class_table.items():
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ValueError(f"invalid pair {(i, j)} for k={k}")
            key = (i, j) if i < j else (j, i)
            if key in norm:
                raise ValueError(f"pair {key} assigned twice")
            norm[key] = lab
        missing = [p for p in pairs if p not in norm]
        if missing:
            raise ValueError(f"class table is not total; missing pairs {missing}")
        labels = [norm[p] for p in pairs]
    else:
        labels = list(class_table)
        if len(labels) != len(pairs):
            raise ValueError(f"expected {len(pairs)} labels for k={k}, got {len(labels)}")
    for lab in labels:
        if lab is None:
            raise ValueError("class table contains an unassigned pair")
    table = relabel_first_appearance(labels)
    num = max(table) + 1
    canon = _canonical_table(k, table)
    return Pattern(k=k, class_of=table, num_classes=num, code=bytes([k]) + bytes(canon))


def from_classes(k: int, classes: Sequence[Iterable[Sequence[int]]]) -> Pattern:
    """Pattern from an explicit list of edge classes (the JSON layout)."""
    table: dict[tuple[int, int], int] = {}
    for c, members in enumerate(classes):
        members = list(members)
        if not members:
            raise ValueError(f"class {c} is empty")
        for pair in members:
            if len(pair) != 2:
                raise ValueError(f"bad pair {pair!r}")
            i, j = int(pair[0]), int(pair[1])
            key = (min(i, j), max(i, j))
            if key in table:
                raise ValueError(f"pair {key} belongs to two classes")
            table[key] = c
    return canonicalize(table, k)


def matches(colored_clique: Sequence[Hashable], pattern: Pattern) -> bool:
    """Does a coloured ``K_k`` (colours in lexicographic pair order) carry ``pattern``?"""
    expected = len(pair_list(pattern.k))
    if len(colored_clique) != expected:
        raise ValueError(f"expected {expected} colours, got {len(colored_clique)}")
    return canonicalize(list(colored_clique), pattern.k).code == pattern.code


def is_almost_monochromatic(pattern: Pattern) -> tuple[bool, int | None]:
    """Return ``(True, x)`` for the lowest special vertex ``x``, else ``(False, None)``.

    ``x`` is special when every edge avoiding ``x`` lies in one class and at
    least one edge at ``x`` lies in that class too.
    """
    if pattern.is_monochromatic:
        return False, None
    k = pattern.k
    for x in range(k):
        away = {pattern.class_of_pair(i, j) for i, j in pair_list(k) if x not in (i, j)}
        if len(away) != 1:
            continue
        (cls,) = away
        if any(pattern.class_of_pair(x, y) == cls for y in range(k) if y != x):
            return True, x
    return False, None


@lru_cache(maxsize=256)
def forbidden_forms(pattern: Pattern) -> frozenset[tuple[int, ...]]:
    """All first-appearance-normalised colourings of ``K_k`` that carry the pattern."""
    return frozenset(_all_forms(pattern.k, pattern.class_of))


@lru_cache(maxsize=256)
def forbidden_colorings(pattern: Pattern, r: int) -> frozenset[tuple[int, ...]]:
    """Every raw colouring of ``K_k`` with colours in ``range(r)`` carrying the pattern.

    Empty when the pattern needs more than ``r`` classes.
    """
    if pattern.num_classes > r:
        return frozenset()
    out = set()
    for form in forbidden_forms(pattern):
        for colors in permutations(range(r), pattern.num_classes):
            out.add(tuple(colors[c] for c in form))
    return frozenset(out)


# -- catalogue ---------------------------------------------------------------

# vertex names a, b, c, d -> 0, 1, 2, 3
_FIGURE_TABLES: dict[str, tuple[int, dict[tuple[int, int], int]]] = {
    "T0": (3, {(0, 1): 0, (1, 2): 0, (0, 2): 1}),
    "R0": (3, {(0, 1): 0, (1, 2): 1, (0, 2): 2}),
    "P1": (4, {(1, 2): 0, (2, 3): 0, (1, 3): 0, (0, 1): 0, (0, 2): 0, (0, 3): 1}),
    "P2": (4, {(0, 2): 0, (1, 2): 0, (2, 3): 0, (1, 3): 0, (0, 1): 1, (0, 3): 1}),
    "P3": (4, {(1, 2): 0, (2, 3): 0, (1, 3): 0, (0, 2): 0, (0, 1): 1, (0, 3): 2}),
}

CATALOG_NAMES = ("T0", "R0", "P1", "P2", "P3", "MONO<k>", "RAINBOW<k>")

_FAMILY = re.compile(r"^(MONO|RAINBOW)\(?(\d+)\)?$")


def monochromatic(k: int) -> Pattern:
    return canonicalize([0] * len(pair_list(k)), k)


def rainbow(k: int) -> Pattern:
    return canonicalize(list(range(len(pair_list(k)))), k)


def catalog(name: str) -> Pattern:
    """Look up a named pattern: T0, R0, P1, P2, P3, MONO3 / MONO(3), RAINBOW4, ..."""
    key = name.strip().upper()
    if key in _FIGURE_TABLES:
        k, table = _FIGURE_TABLES[key]
        return canonicalize(table, k)
    m = _FAMILY.match(key)
    if m:
        k = int(m.group(2))
        return monochromatic(k) if m.group(1) == "MONO" else rainbow(k)
    raise KeyError(f"unknown pattern name {name!r}; known: {', '.join(CATALOG_NAMES)}")


def catalog_name(pattern: Pattern) -> str | None:
    """Catalogue name of a pattern, if it has one."""
    for name in _FIGURE_TABLES:
        if catalog(name) == pattern:
            return name
    if pattern.is_monochromatic:
        return f"MONO{pattern.k}"
    if pattern.num_classes == len(pair_list(pattern.k)):
        return f"RAINBOW{pattern.k}"
    return None


def pattern_from_json(data: dict) -> Pattern:
    try:
        k = int(data["k"])
        classes = data["classes"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"pattern JSON needs 'k' and 'classes': {exc}") from None
    return from_classes(k, classes)


def load_pattern(source: str) -> Pattern:
    """Catalogue name or path to a pattern JSON file."""
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ValueError(f"cannot read pattern file {source!r}: {exc}") from None
        return pattern_from_json(data)
    try:
        return catalog(source)
    except KeyError as exc:
        raise ValueError(str(exc)) from None
