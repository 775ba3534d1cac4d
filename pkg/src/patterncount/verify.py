"""Named self-check suites, each a list of pass / fail / info results."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb, prod

from .counting import count, count_multipartite, weighted_profiles
from .errors import LemmaInapplicable
from .extremal import search_multipartite, verify_multipartite_theorems
from .graphs import (
    SimpleGraph,
    complete_graph,
    complete_multipartite,
    integer_partitions,
    part_size_bound_check,
    turan_graph,
    turan_number,
    turan_parts,
)
from .patterns import catalog, monochromatic
from .rainbow import max_extension_count, rainbow_count_kn
from .ramsey import ramsey_le
from .symmetrization import holder_check, replace_independent_set, symmetrize
from .weight import max_w, stability_components, vertex_weight_identity_check, weigh

PASS, FAIL, INFO = "pass", "fail", "info"
SEED = 20240101


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))

    def note(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, INFO, detail))

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok, "checks": [c.to_json() for c in self.checks]}


# -- random instances -------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_independent_set(rng: random.Random, graph: SimpleGraph) -> list[int]:
    """A nonempty independent set grown greedily from a random vertex order."""
    order = list(range(graph.n))
    rng.shuffle(order)
    target = rng.randint(1, graph.n)
    out: list[int] = []
    for v in order:
        if len(out) == target:
            break
        if all(not graph.has_edge(v, u) for u in out):
            out.append(v)
    return out


def random_instance(rng: random.Random, max_n: int = 6):
    """Graph with a random independent set, pattern and colour count, kept small."""
    n = rng.randint(3, max_n)
    g = random_graph(rng, n, rng.choice([0.4, 0.6, 0.8]))
    name = rng.choice(["R0", "T0", "MONO3", "P2"])
    r = 2 if n == max_n else rng.choice([2, 3])
    return g, random_independent_set(rng, g), catalog(name), r


def random_vector_family(rng: random.Random):
    s = rng.randint(1, 4)
    width = rng.randint(1, 6)
    return [[rng.randint(0, 9) for _ in range(width)] for _ in range(s)]


# -- suites ------------------------------------------------------------------------


def suite_holder(trials: int = 1000, seed: int = SEED) -> SuiteResult:
    res = SuiteResult("holder")
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        fam = random_vector_family(rng)
        if not holder_check(fam).inequality_holds:
            bad += 1
    res.add("inequality on random families", bad == 0, f"{trials} families, {bad} violations")
    missed = 0
    for _ in range(100):
        base = [rng.randint(0, 5) for _ in range(rng.randint(1, 5))]
        scales = [rng.randint(1, 4) for _ in range(rng.randint(2, 4))]
        fam = [[c * x for x in base] for c in scales]
        h = holder_check(fam)
        if not (h.equality and h.lhs == h.rhs):
            missed += 1
    res.add("equality detected on proportional families", missed == 0, f"{missed} missed")
    h = holder_check([[1, 2], [2, 1]])
    res.add("strict inequality on a non-proportional family", not h.equality and h.lhs < h.rhs)
    return res


def suite_product_identity(trials: int = 200, seed: int = SEED) -> SuiteResult:
    res = SuiteResult("product-identity")
    rng = random.Random(seed)
    bad = []
    for i in range(trials):
        g, S, pat, r = random_instance(rng)
        _, rows = weighted_profiles(g, S, pat, r)
        lhs = sum(w * prod(row) for w, row in rows)
        if lhs != count(g, pat, r):
            bad.append(i)
    res.add("sum of products of extension counts equals the count", not bad, f"{trials} instances, failures {bad}")
    return res


def suite_symmetrization(trials: int = 200, seed: int = SEED) -> SuiteResult:
    res = SuiteResult("symmetrization")
    rng = random.Random(seed)
    bad = []
    for i in range(trials):
        g, S, pat, r = random_instance(rng)
        rep = replace_independent_set(g, S, pat, r)
        if rep.count_after < rep.count_before:
            bad.append(i)
    res.add("independent-set replacement never lowers the count", not bad, f"{trials} instances")
    bad = []
    for i in range(30):
        g, _, pat, r = random_instance(rng, max_n=5)
        tr = symmetrize(g, pat, r)
        if tr.final_parts is None or tr.final_count < tr.initial_count:
            bad.append(i)
    res.add("symmetrization ends multipartite with no smaller count", not bad, "30 instances")
    return res


def suite_multipartite_theorems(ns=(4, 5), names=("R0", "T0", "MONO3"), rs=(2, 3)) -> SuiteResult:
    res = SuiteResult("multipartite-theorems")
    for n in ns:
        for name in names:
            for r in rs:
                v = verify_multipartite_theorems(n, catalog(name), r)
                tag = f"n={n} {name} r={r}"
                res.add(f"{tag}: some maximizer multipartite", v.existence_ok,
                        f"best {v.best_count}, multipartite best {v.multipartite_best}")
                if v.all_expected:
                    res.add(f"{tag}: every maximizer multipartite", v.all_maximizers_multipartite,
                            f"non-multipartite maximizers {v.non_multipartite_maximizers}")
                else:
                    res.note(f"{tag}: every maximizer multipartite", str(v.all_maximizers_multipartite))
    return res


def suite_weight(trials: int = 500, seed: int = SEED) -> SuiteResult:
    res = SuiteResult("weight")
    for t in range(3, 7):
        m = max_w(t)
        if t >= 5:
            res.add(f"t={t}: max weight is 2^C(t,2), attained by K_t", m.complete_graph_attains,
                    f"max {m.max_w}, argmax {m.argmax}")
        else:
            res.note(f"t={t}: max weight", f"max {m.max_w} vs 2^C(t,2) = {m.bound}, argmax {m.argmax}")
    res.add("w(path on 3 vertices) = 9", weigh(complete_multipartite([2, 1])).w == 9)
    res.add("w(K_{2,2}) = 81", weigh(complete_multipartite([2, 2])).w == 81)
    rng = random.Random(seed)
    bad = sum(1 for _ in range(trials) if not vertex_weight_identity_check(random_graph(rng, rng.randint(1, 8))))
    res.add("w(G)^2 equals the product of vertex weights", bad == 0, f"{trials} graphs")
    sc = stability_components(complete_graph(5).remove_edge(0, 1))
    res.note("stability components on K5 minus an edge", f"e3 bound {sc.e3_bound_holds}, decay bound {sc.decay_bound_holds}")
    return res


def suite_rainbow(max_n: int = 5) -> SuiteResult:
    res = SuiteResult("rainbow")
    for t in (2, 3, 4):
        m = max_extension_count(t)
        res.add(f"t={t}: largest extension <= t 2^t", m <= t * 2**t, f"{m} <= {t * 2**t}")
    res.add("extension base value 7", max_extension_count(2) == 7)
    for n in range(3, max_n + 1):
        rep = rainbow_count_kn(n)
        res.add(f"n={n}: two-colour bound <= count <= product bound", rep.sandwich_holds,
                f"{rep.lower_bound} <= {rep.exact_count} <= {rep.upper_bound}")
        res.note(f"n={n}: closed-form bound", f"{rep.closed_form} (holds: {rep.closed_form_holds})")
    return res


def suite_ramsey() -> SuiteResult:
    res = SuiteResult("ramsey")
    res.add("R(K3,K3) > 5", not ramsey_le(complete_graph(3), 5))
    res.add("R(K3,K3) <= 6", ramsey_le(complete_graph(3), 6))
    res.add("R(K2,K2) <= 2", ramsey_le(complete_graph(2), 2))
    return res


def suite_bounds(max_n: int = 7) -> SuiteResult:
    res = SuiteResult("bounds")
    mono = monochromatic(3)
    for n in range(2, 9):
        res.add(f"n={n}: T_2(n) has exactly 2^floor(n^2/4) good 2-colourings",
                count(turan_graph(n, 3), mono, 2) == 2 ** (n * n // 4))
    for n in range(3, max_n + 1):
        rep = search_multipartite(n, mono, 2)
        ex = turan_number(n, 3)
        turan = count_multipartite(turan_parts(n, 3), mono, 2).count
        res.add(f"n={n}: multipartite optimum >= 2^ex(n,K3)", rep.best_count >= 2**ex and turan == 2**ex,
                f"best {rep.best_count}, 2^ex {2**ex}")
    checked = 0
    bad = []
    for k in (3, 4):
        for n in range(2, 11):
            for parts in integer_partitions(n, k - 1):
                e = complete_multipartite(parts).num_edges
                m = turan_number(n, k) - e
                try:
                    if not part_size_bound_check(parts, k, max(m, (k - 1) ** 2)):
                        bad.append((k, parts))
                    checked += 1
                except LemmaInapplicable:
                    pass
    res.add("part sizes within the edge-deficit bound", not bad, f"{checked} cases, failures {bad}")
    return res


SUITES = {
    "holder": suite_holder,
    "product-identity": suite_product_identity,
    "symmetrization": suite_symmetrization,
    "multipartite-theorems": suite_multipartite_theorems,
    "weight": suite_weight,
    "rainbow": suite_rainbow,
    "ramsey": suite_ramsey,
    "bounds": suite_bounds,
}


def run_suite(name: str) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn()
