"""Odd reflections between splitting Borels of gl(n|m) and the closed-form b(<) tables."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Optional

from .errors import BadPartition, IndexOutOfRange, NonPositiveRank, NotOddSimple, SlotMismatch
from .rootsys import BorelSeq
from .weights import Parity, Weight, pairing


@dataclass(frozen=True)
class HighestWeightState:
    weight: Weight
    borel: BorelSeq
    parity: Parity = Parity.EVEN

    def __post_init__(self):
        b = self.borel
        if b.n_delta != self.weight.n or b.n_eps != self.weight.m:
            raise SlotMismatch(f"borel {b} does not fit weight shape {self.weight.shape}")
        want = {("d", i) for i in range(1, b.n_delta + 1)} | {("e", j) for j in range(1, b.n_eps + 1)}
        if set(b.slots) != want:
            raise SlotMismatch(f"borel {b} must list each slot once")


def odd_reflect(s: HighestWeightState, pos: int) -> HighestWeightState:
    """Swap the slots at 1-based positions ``pos`` and ``pos + 1``."""
    slots = s.borel.slots
    if not 1 <= pos < len(slots):
        raise IndexOutOfRange(f"position {pos} outside 1..{len(slots) - 1}")
    x, y = slots[pos - 1], slots[pos]
    if x[0] == y[0]:
        raise NotOddSimple(f"{x[0]}{x[1]} and {y[0]}{y[1]} have the same kind")
    alpha = {x: 1, y: -1}
    swapped = slots[:pos - 1] + (y, x) + slots[pos + 1:]
    borel = BorelSeq(swapped, s.borel.sign)
    if pairing(s.weight, alpha) != 0:
        return HighestWeightState(s.weight.add_terms(alpha, -1), borel, s.parity.flip())
    return HighestWeightState(s.weight, borel, s.parity)


def _same_slots(frm: BorelSeq, to: BorelSeq):
    if sorted(frm.slots) != sorted(to.slots) or len(set(frm.slots)) != len(frm.slots):
        raise SlotMismatch(f"{frm} and {to} are not orders of the same slots")


def swap_sequence(frm: BorelSeq, to: BorelSeq, rng: Optional[random.Random] = None) -> list:
    """A shortest list of odd swap positions turning the kind pattern of ``frm`` into that of ``to``.

    Slots of one kind keep their relative order. With ``rng`` a random reduced
    word is drawn, otherwise the leftmost swappable pair is always taken.
    """
    _same_slots(frm, to)
    targets = {"d": [], "e": []}
    for p, slot in enumerate(to.slots):
        targets[slot[0]].append(p)
    seen = {"d": 0, "e": 0}
    goal = []
    for slot in frm.slots:
        goal.append(targets[slot[0]][seen[slot[0]]])
        seen[slot[0]] += 1
    word = []
    while True:
        inv = [i for i in range(len(goal) - 1) if goal[i] > goal[i + 1]]
        if not inv:
            return word
        i = rng.choice(inv) if rng else inv[0]
        goal[i], goal[i + 1] = goal[i + 1], goal[i]
        word.append(i + 1)


def transport(w: Weight, frm: BorelSeq, to: BorelSeq, rng: Optional[random.Random] = None):
    """Highest weight and accumulated parity after moving from one Borel to another.

    Odd reflections first bring the delta/eps pattern in line with ``to``; the
    remaining relabelling inside each kind is an even Weyl group element and
    just permutes coordinates.
    """
    state = HighestWeightState(w, frm)
    _same_slots(frm, to)
    for pos in swap_sequence(frm, to, rng):
        state = odd_reflect(state, pos)
    mid = state.borel.slots
    moved = {to.slots[p]: state.weight.coord(mid[p]) for p in range(len(mid))}
    return state.weight.with_coords(moved), state.parity


def b_lt(n: int, m: int) -> BorelSeq:
    return BorelSeq.standard(n, m)


def b_gt(n: int, m: int) -> BorelSeq:
    return BorelSeq.opposite(n, m)


def check_partition(mu, strict: bool = False) -> tuple:
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise BadPartition(f"partition parts must be positive: {mu}")
    ok = all(x > y for x, y in zip(mu, mu[1:])) if strict else all(x >= y for x, y in zip(mu, mu[1:]))
    if not ok:
        raise BadPartition(f"partition must be {'strictly' if strict else 'weakly'} decreasing: {mu}")
    return mu


def conjugate(mu) -> tuple:
    return tuple(sum(1 for x in mu if x > j) for j in range(mu[0])) if mu else ()


OMEGA_KINDS = {"O2": "O2", "O3": "O3", "O6": "O6", "Ω̃₂": "O2", "Ω̃₃": "O3", "Ω̃₆": "O6"}


def omega_b_gt(kind: str, n: int, x: int, param) -> Weight:
    """The b(>) highest weights that the tables start from."""
    kind = OMEGA_KINDS.get(kind, kind)
    _ranks(n, x)
    if kind == "O2":
        return Weight([-_count(param)] + [0] * (n - 1), [0] * x)
    if kind == "O3":
        return Weight([0] * n, [0] * (x - 1) + [_count(param)])
    if kind == "O6":
        mu = _fits(param, n)
        return Weight([-p for p in mu] + [0] * (n - len(mu)), [0] * x)
    raise ValueError(f"unknown table {kind!r}")


def _ranks(n, x):
    if n < 1 or x < 1:
        raise NonPositiveRank(f"need n >= 1 and x >= 1, got n={n}, x={x}")


def _count(a) -> int:
    a = int(a)
    if a < 0:
        raise BadPartition(f"degree must be nonnegative, got {a}")
    return a


def _fits(mu, n):
    mu = check_partition(mu)
    if len(mu) > n:
        raise BadPartition(f"partition {mu} longer than n={n}")
    return mu


def omega_table(kind: str, n: int, x: int, param) -> Weight:
    """Closed-form b(<) highest weight for the tables O2, O3 (param a) and O6 (param mu)."""
    kind = OMEGA_KINDS.get(kind, kind)
    _ranks(n, x)
    if kind == "O2":
        a = _count(param)
        if a <= x:
            return Weight([0] * n, [0] * (x - a) + [-1] * a)
        return Weight([0] * (n - 1) + [x - a], [-1] * x)
    if kind == "O3":
        a = _count(param)
        if a <= n:
            return Weight([1] * a + [0] * (n - a), [0] * x)
        return Weight([1] * n, [a - n] + [0] * (x - 1))
    if kind == "O6":
        mu = _fits(param, n)
        over = [p - x for p in mu if p > x]
        cols = conjugate(mu) + (0,) * x
        left = [0] * (n - len(over)) + [-v for v in reversed(over)]
        right = [-cols[j] for j in range(x - 1, -1, -1)]
        return Weight(left, right)
    raise ValueError(f"unknown table {kind!r}")
