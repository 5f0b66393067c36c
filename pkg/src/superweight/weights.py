"""Exact weights of gl(n|m)-type algebras, the rho-shift, central shifts and the form.

A weight is stored as ``(left | right)``. ``left`` lists the delta-coordinates
starting from the highest slot of the standard Borel, so ``left[0]`` is the
coefficient of delta_n and ``left[-1]`` that of delta_1. ``right[j-1]`` is the
coefficient of eps_j. Slots are pairs ``("d", i)`` or ``("e", j)``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import IndexOutOfRange, NonIntegralWeight, NotDominant, ParseError, ShapeMismatch


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__

    def flip(self) -> "Parity":
        return Parity(1 - int(self))

    def __str__(self):
        return self.name.lower()


def parity_of(k: int) -> Parity:
    return Parity(int(k) % 2)


def delta(i: int):
    return ("d", i)


def eps(j: int):
    return ("e", j)


def slot_name(slot) -> str:
    return f"{slot[0]}{slot[1]}"


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not allowed")
    return Fraction(x)


@dataclass(frozen=True)
class Weight:
    left: tuple
    right: tuple

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(_frac(x) for x in self.left))
        object.__setattr__(self, "right", tuple(_frac(x) for x in self.right))

    @property
    def shape(self):
        return len(self.left), len(self.right)

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def m(self) -> int:
        return len(self.right)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.left + self.right)

    def coord(self, slot) -> Fraction:
        kind, i = slot
        if kind == "d" and 1 <= i <= self.n:
            return self.left[self.n - i]
        if kind == "e" and 1 <= i <= self.m:
            return self.right[i - 1]
        raise IndexOutOfRange(f"slot {slot_name(slot)} outside shape {self.shape}")

    def with_coords(self, values: Mapping) -> "Weight":
        left = list(self.left)
        right = list(self.right)
        for slot, v in values.items():
            self.coord(slot)
            if slot[0] == "d":
                left[self.n - slot[1]] = v
            else:
                right[slot[1] - 1] = v
        return Weight(left, right)

    def add_terms(self, terms: Mapping, scale=1) -> "Weight":
        """Add ``scale`` times the functional sum(c * slot)."""
        vals = {s: self.coord(s) + scale * c for s, c in terms.items()}
        return self.with_coords(vals)

    def _check(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight([a + b for a, b in zip(self.left, other.left)],
                      [a + b for a, b in zip(self.right, other.right)])

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight([a - b for a, b in zip(self.left, other.left)],
                      [a - b for a, b in zip(self.right, other.right)])

    def __neg__(self):
        return Weight([-a for a in self.left], [-a for a in self.right])

    def __str__(self):
        return format_weight(self)

    @staticmethod
    def zero(n: int, m: int) -> "Weight":
        return Weight([0] * n, [0] * m)


@dataclass(frozen=True)
class ShiftedWeight:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @property
    def dominant(self) -> bool:
        return (all(x > y for x, y in zip(self.a, self.a[1:]))
                and all(x < y for x, y in zip(self.b, self.b[1:])))


def rho(n: int, m: int) -> Weight:
    return Weight(range(n, 0, -1), range(-1, -m - 1, -1))


def shift(w: Weight) -> ShiftedWeight:
    if not w.is_integral():
        raise NonIntegralWeight(str(w))
    n = w.n
    a = [int(x) + n - i for i, x in enumerate(w.left)]
    b = [j + 1 - int(y) for j, y in enumerate(w.right)]
    return ShiftedWeight(a, b)


def unshift(s: ShiftedWeight) -> Weight:
    if not s.dominant:
        raise NotDominant(f"a={s.a} b={s.b}")
    n = len(s.a)
    return Weight([x - (n - i) for i, x in enumerate(s.a)],
                  [j + 1 - y for j, y in enumerate(s.b)])


def central_shift(w: Weight, c) -> Weight:
    c = _frac(c)
    return Weight([x + c for x in w.left], [y - c for y in w.right])


def central_shift_between(v: Weight, w: Weight) -> Optional[Fraction]:
    """The c with ``w == central_shift(v, c)``, or None."""
    v._check(w)
    if v.n:
        c = w.left[0] - v.left[0]
    elif v.m:
        c = v.right[0] - w.right[0]
    else:
        return Fraction(0)
    return c if central_shift(v, c) == w else None


def pairing(w: Weight, root) -> Fraction:
    """Evaluate the form (d_i, d_j) = [i=j], (e_i, e_j) = -[i=j] against a root.

    ``root`` is anything with a ``terms`` mapping slot -> coefficient.
    """
    terms = root.terms if hasattr(root, "terms") else root
    total = Fraction(0)
    for slot, c in dict(terms).items():
        sign = 1 if slot[0] == "d" else -1
        total += sign * c * w.coord(slot)
    return total


def c_of(w: Weight) -> Fraction:
    return sum(w.left, Fraction(0)) + sum(w.right, Fraction(0))


# literal grammar

_ITEM = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*(?:\^\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"-?\d+(?:/\d+)?", text):
        raise ParseError(f"bad rational {text!r}")
    q = Fraction(text)
    return q


def _parse_coords(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    out = []
    for item in text.split(","):
        mt = _ITEM.match(item)
        if not mt:
            raise ParseError(f"bad coordinate {item.strip()!r}")
        if "/" in mt.group(1) and int(mt.group(1).split("/")[1]) == 0:
            raise ParseError("zero denominator")
        out.extend([Fraction(mt.group(1))] * int(mt.group(2) or 1))
    return out


def parse_weight(text: str) -> Weight:
    """Parse ``(0^3,-1|1)``; ``^k`` repeats an entry."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")) or text.count("|") != 1:
        raise ParseError(f"weight must look like (a,b|c): {text!r}")
    left, right = text[1:-1].split("|")
    return Weight(_parse_coords(left), _parse_coords(right))


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_weight(w: Weight) -> str:
    return "(" + ",".join(map(format_rational, w.left)) + "|" + ",".join(map(format_rational, w.right)) + ")"


def rational_json(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def weight_json(w: Weight) -> dict:
    return {"left": [rational_json(x) for x in w.left], "right": [rational_json(x) for x in w.right]}


def weight_from_json(d: Mapping) -> Weight:
    return Weight([Fraction(x) for x in d["left"]], [Fraction(x) for x in d["right"]])


def as_weight(x) -> Weight:
    if isinstance(x, Weight):
        return x
    if isinstance(x, str):
        return parse_weight(x)
    left, right = x
    return Weight(left, right)


def integral(values: Iterable) -> bool:
    return all(Fraction(v).denominator == 1 for v in values)
