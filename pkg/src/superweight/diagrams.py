"""Weight diagrams for gl(n|m): cores, crosses, legal moves of weight zero."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadInterval, NoIntegralAlignment, ShapeMismatch
from .weights import ShiftedWeight, Weight, c_of, central_shift, shift, unshift

CROSS, LEFT, RIGHT, EMPTY = "x", ">", "<", "o"


@dataclass(frozen=True)
class WeightDiagram:
    """Finitely supported map Z -> {x, >, <}; everything else reads as empty."""

    symbols: tuple  # sorted (position, symbol) pairs

    def __post_init__(self):
        items = self.symbols.items() if isinstance(self.symbols, dict) else self.symbols
        clean = {}
        for z, s in items:
            if s not in (CROSS, LEFT, RIGHT, EMPTY):
                raise ValueError(f"bad diagram symbol {s!r}")
            if s != EMPTY:
                clean[int(z)] = s
        object.__setattr__(self, "symbols", tuple(sorted(clean.items())))

    @staticmethod
    def from_sets(crosses=(), core_left=(), core_right=()) -> "WeightDiagram":
        sym = {}
        for pos, s in [(z, CROSS) for z in crosses] + [(z, LEFT) for z in core_left] + [(z, RIGHT) for z in core_right]:
            if pos in sym:
                raise ValueError(f"position {pos} used twice")
            sym[pos] = s
        return WeightDiagram(sym)

    def __call__(self, z: int) -> str:
        return dict(self.symbols).get(z, EMPTY)

    def _where(self, s):
        return frozenset(z for z, t in self.symbols if t == s)

    @property
    def crosses(self) -> frozenset:
        return self._where(CROSS)

    @property
    def core_left(self) -> frozenset:
        return self._where(LEFT)

    @property
    def core_right(self) -> frozenset:
        return self._where(RIGHT)

    @property
    def core(self):
        return self.core_left, self.core_right

    @property
    def support(self) -> list:
        return [z for z, _ in self.symbols]

    def translate(self, left_by: int, right_by: int) -> "WeightDiagram":
        """Move the a-marks by ``left_by`` and the b-marks by ``right_by``."""
        a = sorted(self.core_left | self.crosses)
        b = sorted(self.core_right | self.crosses)
        return _from_marks([x + left_by for x in a], [y + right_by for y in b])

    def to_json(self) -> dict:
        return {"crosses": sorted(self.crosses), "coreL": sorted(self.core_left), "coreR": sorted(self.core_right)}

    def render(self) -> str:
        """Two-line ASCII picture: an index ruler above the symbols."""
        sup = self.support
        lo, hi = (min(sup) - 2, max(sup) + 2) if sup else (-2, 2)
        width = max(len(str(z)) for z in range(lo, hi + 1))
        ruler = " ".join(str(z).rjust(width) for z in range(lo, hi + 1))
        row = " ".join(self(z).rjust(width) for z in range(lo, hi + 1))
        return ruler + "\n" + row


def _from_marks(a, b) -> WeightDiagram:
    sa, sb = set(a), set(b)
    return WeightDiagram.from_sets(sa & sb, sa - sb, sb - sa)


@dataclass(frozen=True)
class LegalMove:
    a: int
    b: int
    result: WeightDiagram

    def to_json(self) -> dict:
        return {"from": self.a, "to": self.b, "result": self.result.to_json()}


def diagram_of(w: Weight) -> WeightDiagram:
    s = shift(w)
    unshift(s)  # raises NotDominant
    return _from_marks(s.a, s.b)


def weight_of(f: WeightDiagram, n: int, m: int) -> Weight:
    a = sorted(f.core_left | f.crosses, reverse=True)
    b = sorted(f.core_right | f.crosses)
    if len(a) != n or len(b) != m:
        raise ShapeMismatch(f"diagram has {len(a)} a-marks and {len(b)} b-marks, expected ({n},{m})")
    return unshift(ShiftedWeight(a, b))


def atypicality(f: WeightDiagram) -> int:
    return len(f.crosses)


def l_count(f: WeightDiagram, b: int, a: int) -> int:
    if not b < a:
        raise BadInterval(f"need b < a, got b={b}, a={a}")
    total = 0
    for z in range(b + 1, a):
        s = f(z)
        total += 1 if s == CROSS else (-1 if s == EMPTY else 0)
    return total


def legal_moves(f: WeightDiagram) -> list:
    """All legal moves of weight zero, by descending source then descending target."""
    sup = f.support
    if not f.crosses:
        return []
    # past the left end of the support every extra step adds an empty slot,
    # so the count can only go down from there
    floor = min(sup) - len(sup) - 2
    moves = []
    for a in sorted(f.crosses, reverse=True):
        for b in range(a - 1, floor - 1, -1):
            if f(b) == EMPTY and l_count(f, b, a) == 0:
                sym = dict(f.symbols)
                del sym[a]
                sym[b] = CROSS
                moves.append(LegalMove(a, b, WeightDiagram(sym)))
    return moves


def alignment_shift(v: Weight, w: Weight) -> Fraction:
    """The central shift c making c_of(central_shift(w, c)) equal c_of(v)."""
    if v.shape != w.shape:
        raise ShapeMismatch(f"{v.shape} vs {w.shape}")
    n, m = v.shape
    gap = c_of(v) - c_of(w)
    if n == m:
        if gap:
            raise NoIntegralAlignment("c_of is shift invariant when n = m and the values differ")
        return Fraction(0)
    c = gap / (n - m)
    if c.denominator != 1:
        raise NoIntegralAlignment(f"aligning shift {c} is not an integer")
    return c


def moves_to(f: WeightDiagram, g: WeightDiagram) -> bool:
    return any(mv.result == g for mv in legal_moves(f))


def ext1_nonzero(v: Weight, w: Weight, align_central: bool = False) -> bool:
    if v.shape != w.shape:
        raise ShapeMismatch(f"{v.shape} vs {w.shape}")
    if align_central:
        w = central_shift(w, alignment_shift(v, w))
    f, g = diagram_of(v), diagram_of(w)
    return moves_to(f, g) or moves_to(g, f)
