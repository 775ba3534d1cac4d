"""Colourings of complete graphs with three colours and no rainbow triangle."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .counting import ColoringSearch, ExtensionCounter, count
from .errors import BudgetExceeded, InvariantViolation
from .graphs import complete_graph
from .patterns import catalog

MAX_RAINBOW_N = 6
MAX_EXTENSION_T = 5
R = 3


def two_color_lower_bound(n: int) -> int:
    """Colourings of K_n using at most two of the three colours."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 3 * 2 ** comb(n, 2) - 3


def product_upper_bound(n: int) -> int:
    """``3 * prod_{t=2}^{n-1} t 2^t``: one new vertex at a time, each adding at most ``t 2^t``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = 3
    for t in range(2, n):
        out *= t * 2**t
    return out


def closed_form_upper_bound(n: int) -> Fraction:
    """``(3/2) (n-1)! 2^C(n-1,2)``, reported but not relied on (see ``RainbowKnReport``)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Fraction(3, 2) * factorial(n - 1) * 2 ** comb(n - 1, 2)


def max_extension_count(t: int) -> int:
    """Largest number of ways to colour the edges from a new vertex into a good K_t.

    The maximum runs over every rainbow-free 3-colouring of K_t; colourings
    equal up to renaming colours give the same value, so one per class is tried.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if t > MAX_EXTENSION_T:
        raise BudgetExceeded(f"extension sweep capped at t <= {MAX_EXTENSION_T}, got t={t}")
    pattern = catalog("R0")
    host = complete_graph(t)
    ext = ExtensionCounter(host, range(t), pattern, R)
    search = ColoringSearch(host, pattern, R)
    best = 0
    for cols, _, _ in search.iter_weighted():
        best = max(best, ext(search.to_lex(cols)))
    if best > t * 2**t and t >= 2:
        raise InvariantViolation(f"extension count {best} exceeds t*2^t = {t * 2**t}")
    return best


@dataclass
class RainbowKnReport:
    n: int
    exact_count: int
    lower_bound: int
    upper_bound: int
    closed_form: Fraction
    max_extension: int | None

    @property
    def sandwich_holds(self) -> bool:
        return self.lower_bound <= self.exact_count <= self.upper_bound

    @property
    def closed_form_holds(self) -> bool:
        return self.exact_count <= self.closed_form

    @property
    def extension_bound_holds(self) -> bool:
        if self.max_extension is None or self.n < 3:
            return True
        t = self.n - 1
        return self.max_extension <= t * 2**t

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "exact_count": str(self.exact_count),
            "lower_bound": str(self.lower_bound),
            "upper_bound": str(self.upper_bound),
            "closed_form": str(self.closed_form),
            "closed_form_holds": self.closed_form_holds,
            "max_extension": None if self.max_extension is None else str(self.max_extension),
        }


def rainbow_count_kn(n: int, *, workers: int = 1) -> RainbowKnReport:
    """Exact count for K_n together with both bounds and the largest one-vertex extension."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > MAX_RAINBOW_N:
        raise BudgetExceeded(f"rainbow count capped at n <= {MAX_RAINBOW_N}, got n={n}")
    exact = count(complete_graph(n), catalog("R0"), R, workers=workers)
    report = RainbowKnReport(
        n=n,
        exact_count=exact,
        lower_bound=two_color_lower_bound(n),
        upper_bound=product_upper_bound(n),
        closed_form=closed_form_upper_bound(n),
        max_extension=max_extension_count(n - 1),
    )
    if not report.sandwich_holds:
        raise InvariantViolation(f"rainbow sandwich fails at n={n}: {report.to_json()}")
    return report
