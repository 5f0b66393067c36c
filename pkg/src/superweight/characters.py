"""Dimension formulas for super symmetric/exterior powers and hook-tableau weight multiplicities."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from math import comb

from .errors import BadPartition, BudgetExceeded
from .weights import Weight

DEFAULT_BUDGET = 12


def budget_limit() -> int:
    """Largest |mu| we enumerate; SUPERWEIGHT_BUDGET can only lower the default."""
    env = os.environ.get("SUPERWEIGHT_BUDGET")
    if env and env.strip().isdigit():
        return min(DEFAULT_BUDGET, int(env))
    return DEFAULT_BUDGET


def multichoose(k: int, i: int) -> int:
    """Monomials of degree i in k variables."""
    return comb(k + i - 1, i) if k else int(i == 0)


def super_sym_dim(a: int, n: int, m: int) -> int:
    return sum(multichoose(n, i) * comb(m, a - i) for i in range(a + 1))


def super_ext_dim(a: int, n: int, m: int) -> int:
    return sum(comb(n, i) * multichoose(m, a - i) for i in range(a + 1))


@dataclass(frozen=True)
class MultiplicityTable:
    entries: dict  # Weight -> multiplicity
    total_dim: tuple  # (even, odd)

    @property
    def total(self) -> int:
        return sum(self.total_dim)

    @property
    def max_multiplicity(self) -> int:
        return max(self.entries.values(), default=0)


def _partition(mu) -> tuple:
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu) or any(x < y for x, y in zip(mu, mu[1:])):
        raise BadPartition(f"not a partition: {mu}")
    return mu


def hook_tableaux(mu, n: int, m: int):
    """Yield fillings of shape mu by letters 0..n+m-1 (the first n unprimed).

    Rows and columns weakly increase; unprimed letters strictly increase down
    columns and primed letters strictly increase along rows.
    """
    mu = _partition(mu)
    cells = [(r, c) for r, length in enumerate(mu) for c in range(length)]
    grid = {}

    def fill(k):
        if k == len(cells):
            yield dict(grid)
            return
        r, c = cells[k]
        lo = 0
        if c:
            left = grid[(r, c - 1)]
            lo = max(lo, left + 1 if left >= n else left)
        if r:
            up = grid[(r - 1, c)]
            lo = max(lo, up + 1 if up < n else up)
        for v in range(lo, n + m):
            grid[(r, c)] = v
            yield from fill(k + 1)
        grid.pop((r, c), None)

    yield from fill(0)


def hook_multiplicities(mu, n: int, m: int, budget=None) -> MultiplicityTable:
    mu = _partition(mu)
    limit = budget_limit() if budget is None else budget
    if sum(mu) > limit:
        raise BudgetExceeded(f"|mu| = {sum(mu)} exceeds budget {limit}")
    counts = Counter()
    even = odd = 0
    for t in hook_tableaux(mu, n, m):
        content = Counter(t.values())
        left = [content.get(n - 1 - p, 0) for p in range(n)]  # left[0] is delta_n
        right = [content.get(n + j, 0) for j in range(m)]
        counts[Weight(left, right)] += 1
        if sum(right) % 2:
            odd += 1
        else:
            even += 1
    return MultiplicityTable(dict(counts), (even, odd))


def max_multiplicity_sweep(mu, n_range, m: int, budget=None) -> list:
    return [hook_multiplicities(mu, n, m, budget).max_multiplicity for n in n_range]
