"""Census of the states that smooth a diagram into a single circle.

These states carry the spanning-tree-style generators of the Khovanov
complex, so their B-smoothing counts locate its diagonals.  For a
diagram whose all-A state has x circles and all-B state has y circles,
every single-circle state s satisfies

    x - 1 <= b_count(s) <= n + 1 - y

(switching one smoothing changes the circle count by at most one), and
the window width n + 2 - x - y equals 2 - chi.  When the atom is
orientable all b_counts also share one parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .diagram import Diagram
from .errors import LimitError
from .khovanov import resolve_limit
from .statesum import StateSummary, all_a_b_circles, circles_of_state

__all__ = ["SingleCircleCensus", "single_circle_census", "single_circle_window"]

DEFAULT_MAX_CENSUS = 24


@dataclass(frozen=True)
class SingleCircleCensus:
    """All states with exactly one circle, plus the window they must hit."""

    n: int
    states: tuple[StateSummary, ...]
    window: tuple[int, int]
    chi: int

    @property
    def is_empty(self) -> bool:
        return not self.states

    @cached_property
    def b_values(self) -> tuple[int, ...]:
        return tuple(sorted({s.b_count for s in self.states}))

    @property
    def b_min(self) -> int:
        return self.b_values[0]

    @property
    def b_max(self) -> int:
        return self.b_values[-1]

    @property
    def amplitude(self) -> int:
        return self.b_max - self.b_min

    @property
    def parity_consistent(self) -> bool:
        return len({b % 2 for b in self.b_values}) <= 1

    @property
    def within_window(self) -> bool:
        lo, hi = self.window
        return all(lo <= b <= hi for b in self.b_values)

    def b_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for s in self.states:
            hist[s.b_count] = hist.get(s.b_count, 0) + 1
        return dict(sorted(hist.items()))


def single_circle_window(d: Diagram) -> tuple[int, int]:
    """(x - 1, n + 1 - y) with x, y the all-A and all-B circle counts."""
    x, y = all_a_b_circles(d)
    return x - 1, d.n + 1 - y


def single_circle_census(
    d: Diagram, *, max_crossings: int | None = None
) -> SingleCircleCensus:
    """Exhaustive census over all 2^n states, filtered to one circle."""
    limit = resolve_limit(max_crossings, DEFAULT_MAX_CENSUS)
    if d.n > limit:
        raise LimitError(f"diagram has {d.n} crossings; census limit is {limit}")
    found = []
    for state in range(1 << d.n):
        circles = circles_of_state(d, state)
        if circles == 1:
            found.append(StateSummary(state, 1, state.bit_count()))
    x, y = all_a_b_circles(d)
    return SingleCircleCensus(
        n=d.n,
        states=tuple(found),
        window=(x - 1, d.n + 1 - y),
        chi=x + y - d.n,
    )
