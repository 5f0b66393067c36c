"""Root systems of the finite truncations and positive systems from orders.

A truncation is given directly by ``(n_delta, n_eps)``. The delta side carries
the gl / orthogonal part and the eps side the finite gl(m) / symplectic part.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BadBorel, IllegalSignOnMaxDeltaSlot, MissingSignMap, ParseError, RankMismatch
from .weights import Parity, Weight, delta, eps, slot_name

KINDS = ("sl", "ospB", "ospC", "ospD", "p", "q")


@dataclass(frozen=True)
class AlgebraFamily:
    """One of the eleven direct-limit superalgebras.

    ``kind`` is sl/ospB/ospC/ospD/p/q, ``finite_side`` says which side has a
    fixed rank ("d", "e" or None) and ``param`` is the usual parameter
    (m for sl(inf|m) and osp(m|inf), 2k for osp(inf|2k), 2 for ospC(2|inf)).
    """

    kind: str
    finite_side: Optional[str] = None
    param: Optional[int] = None

    def __post_init__(self):
        k, side, p = self.kind, self.finite_side, self.param
        if k not in KINDS:
            raise ParseError(f"unknown algebra kind {k!r}")
        if (side is None) != (p is None):
            raise ParseError("finite side and parameter go together")
        ok = {
            "sl": side in (None, "e") and (p is None or p >= 1),
            "ospB": side is None or (side == "e" and p >= 2 and p % 2 == 0) or (side == "d" and p >= 1 and p % 2 == 1),
            "ospC": side == "d" and p == 2,
            "ospD": side is None or (side == "e" and p >= 2 and p % 2 == 0) or (side == "d" and p >= 4 and p % 2 == 0),
            "p": side is None,
            "q": side is None,
        }[k]
        if not ok:
            raise ParseError(f"invalid algebra {k} side={side} param={p}")

    @property
    def tag(self) -> str:
        if self.kind in ("p", "q"):
            return f"{self.kind}(inf)"
        if self.finite_side is None:
            return f"{self.kind}(inf|inf)"
        if self.finite_side == "e":
            return f"{self.kind}(inf|{self.param})"
        return f"{self.kind}({self.param}|inf)"

    def __str__(self):
        return self.tag

    @property
    def fixed_rank(self):
        """(side, rank) of the finite side, or None."""
        if self.finite_side is None:
            return None
        if self.kind == "sl":
            return ("e", self.param)
        if self.finite_side == "e":
            return ("e", self.param // 2)
        if self.kind == "ospB":
            return ("d", (self.param - 1) // 2)
        return ("d", self.param // 2) if self.kind == "ospD" else ("d", 1)

    @property
    def needs_sign(self) -> bool:
        return self.kind not in ("sl", "q")

    @property
    def has_delta(self) -> bool:
        return self.kind not in ("p", "q")

    def ranks(self, n: int):
        """Map the chain index n to (n_delta, n_eps) of the n-th truncation."""
        if self.kind in ("p", "q"):
            return 0, n
        fixed = self.fixed_rank
        if self.kind == "sl":
            return n, (self.param if fixed else n - 1)
        if fixed is None:
            return n, n
        side, r = fixed
        return (n, r) if side == "e" else (r, n)

    def x_n(self, n: int) -> int:
        return self.ranks(n)[1]


def parse_algebra(text: str) -> AlgebraFamily:
    t = text.strip().replace(" ", "").replace("∞", "inf")
    mt = re.fullmatch(r"(sl|ospB|ospC|ospD|p|q)(?::(\d+))?", t)
    if mt:
        kind, p = mt.group(1), mt.group(2)
        if p is None:
            if kind == "ospC":
                return AlgebraFamily("ospC", "d", 2)
            return AlgebraFamily(kind)
        if kind == "sl":
            return AlgebraFamily("sl", "e", int(p))
        raise ParseError(f"use the (a|b) form for {kind}: {text!r}")
    mt = re.fullmatch(r"(sl|ospB|ospC|ospD)\((inf|\d+)\|(inf|\d+)\)", t) or re.fullmatch(r"(p|q)\(inf\)", t)
    if not mt:
        raise ParseError(f"unknown algebra {text!r}")
    kind = mt.group(1)
    if kind in ("p", "q"):
        return AlgebraFamily(kind)
    left, right = mt.group(2), mt.group(3)
    if left == "inf" and right == "inf":
        return AlgebraFamily(kind)
    if left == "inf":
        return AlgebraFamily(kind, "e", int(right))
    if right == "inf":
        return AlgebraFamily(kind, "d", int(left))
    raise ParseError(f"one side must be infinite: {text!r}")


@dataclass(frozen=True)
class Root:
    terms: tuple
    parity: Parity = Parity.EVEN
    both_parities: bool = False

    def __post_init__(self):
        items = self.terms.items() if isinstance(self.terms, dict) else self.terms
        clean = tuple(sorted((tuple(s), int(c)) for s, c in items if c))
        object.__setattr__(self, "terms", clean)

    @property
    def coeffs(self) -> dict:
        return dict(self.terms)

    def key(self):
        return self.terms

    def __neg__(self):
        return Root(tuple((s, -c) for s, c in self.terms), self.parity, self.both_parities)

    def __str__(self):
        out = ""
        ordered = sorted(self.terms, key=lambda t: (t[1] < 0, t[0][0], -t[0][1] if t[0][0] == "d" else t[0][1]))
        for s, c in ordered:
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f"{sign}{mag}{slot_name(s)}"
        return out or "0"

    def sort_key(self):
        return tuple((s[0], s[1], c) for s, c in self.terms)


def _r(terms, odd=False, both=False):
    return Root(terms, Parity.ODD if odd else Parity.EVEN, both)


def check_ranks(fam: AlgebraFamily, n_delta: int, n_eps: int):
    if n_delta < 0 or n_eps < 0:
        raise RankMismatch("ranks must be nonnegative")
    if not fam.has_delta and n_delta:
        raise RankMismatch(f"{fam} has no delta slots")
    fixed = fam.fixed_rank
    if fixed:
        side, r = fixed
        got = n_delta if side == "d" else n_eps
        if got != r:
            raise RankMismatch(f"{fam} needs {'n_delta' if side == 'd' else 'n_eps'} = {r}, got {got}")


def roots(fam: AlgebraFamily, n_delta: int, n_eps: int) -> frozenset:
    check_ranks(fam, n_delta, n_eps)
    D = [delta(i) for i in range(1, n_delta + 1)]
    E = [eps(i) for i in range(1, n_eps + 1)]
    out = set()
    k = fam.kind
    if k in ("sl", "q"):
        both = k == "q"
        for X in (D, E):
            for x in X:
                for y in X:
                    if x != y:
                        out.add(_r({x: 1, y: -1}, both=both))
        for x in D:
            for y in E:
                out.add(_r({x: 1, y: -1}, odd=True))
                out.add(_r({x: -1, y: 1}, odd=True))
        return frozenset(out)
    if k == "p":
        for i, x in enumerate(E):
            out.add(_r({x: 2}, odd=True))
            for y in E[i + 1:]:
                out.add(_r({x: 1, y: -1}))
                out.add(_r({x: -1, y: 1}))
                out.add(_r({x: 1, y: 1}, odd=True))
                out.add(_r({x: -1, y: -1}, odd=True))
        return frozenset(out)
    # orthosymplectic: delta side orthogonal, eps side symplectic
    signs = ((1, 1), (1, -1), (-1, 1), (-1, -1))
    for X, odd in ((D, False), (E, False)):
        for i, x in enumerate(X):
            for y in X[i + 1:]:
                for a, b in signs:
                    out.add(_r({x: a, y: b}, odd=odd))
    for x in E:
        out.add(_r({x: 2}))
        out.add(_r({x: -2}))
    for x in D:
        for y in E:
            for a, b in signs:
                out.add(_r({x: a, y: b}, odd=True))
    if k == "ospB":
        for x in D:
            out.add(_r({x: 1}))
            out.add(_r({x: -1}))
        for y in E:
            out.add(_r({y: 1}, odd=True))
            out.add(_r({y: -1}, odd=True))
    return frozenset(out)


@dataclass(frozen=True)
class BorelSeq:
    """A total order on the active slots, first = lowest in the order."""

    slots: tuple
    sign: Optional[tuple] = None  # tuple of (slot, +-1), sorted

    def __post_init__(self):
        object.__setattr__(self, "slots", tuple(tuple(s) for s in self.slots))
        if len(set(self.slots)) != len(self.slots):
            raise BadBorel("repeated slot in order")
        if self.sign is not None:
            items = self.sign.items() if isinstance(self.sign, dict) else self.sign
            sg = tuple(sorted((tuple(s), int(v)) for s, v in items))
            if any(v not in (1, -1) for _, v in sg) or {s for s, _ in sg} != set(self.slots):
                raise BadBorel("sign map must give +1/-1 on every slot")
            object.__setattr__(self, "sign", sg)

    @property
    def sign_map(self) -> Optional[dict]:
        return None if self.sign is None else dict(self.sign)

    @property
    def n_delta(self) -> int:
        return sum(1 for s in self.slots if s[0] == "d")

    @property
    def n_eps(self) -> int:
        return sum(1 for s in self.slots if s[0] == "e")

    def kinds(self) -> str:
        return "".join(s[0] for s in self.slots)

    def __str__(self):
        return ",".join(slot_name(s) for s in self.slots)

    @staticmethod
    def standard(n: int, m: int) -> "BorelSeq":
        """b(<): delta_n, ..., delta_1, eps_1, ..., eps_m."""
        return BorelSeq([delta(i) for i in range(n, 0, -1)] + [eps(j) for j in range(1, m + 1)])

    @staticmethod
    def opposite(n: int, m: int) -> "BorelSeq":
        """b(>): the full reverse of b(<)."""
        return BorelSeq(tuple(reversed(BorelSeq.standard(n, m).slots)))


def parse_slot(text: str):
    mt = re.fullmatch(r"\s*([de])(\d+)\s*", text)
    if not mt or int(mt.group(2)) < 1:
        raise ParseError(f"bad slot {text!r}; use dK or eK")
    return (mt.group(1), int(mt.group(2)))


def parse_borel(order: str, sign: Optional[str] = None, nm=None) -> BorelSeq:
    o = order.strip().replace(" ", "")
    if o in ("b<", "b>"):
        if nm is None:
            raise ParseError("b< / b> need --nm")
        return BorelSeq.standard(*nm) if o == "b<" else BorelSeq.opposite(*nm)
    slots = [parse_slot(t) for t in o.split(",")] if o else []
    sg = None
    if sign is not None:
        vals = [t.strip() for t in sign.split(",")] if sign.strip() else []
        if len(vals) != len(slots) or any(v not in ("+", "-", "+1", "-1", "1") for v in vals):
            raise ParseError("sign list must match the order with entries + or -")
        sg = {s: (-1 if v.startswith("-") else 1) for s, v in zip(slots, vals)}
    return BorelSeq(slots, sg)


def _validate_borel(fam: AlgebraFamily, b: BorelSeq):
    nd, ne = b.n_delta, b.n_eps
    want = {delta(i) for i in range(1, nd + 1)} | {eps(j) for j in range(1, ne + 1)}
    if set(b.slots) != want:
        raise BadBorel("order must list d1..dN and e1..eM exactly once")
    check_ranks(fam, nd, ne)
    if fam.needs_sign and b.sign is None:
        raise MissingSignMap(f"{fam} needs a sign map")
    if not fam.needs_sign and b.sign is not None:
        raise BadBorel(f"{fam} takes no sign map")
    if fam.kind == "ospD" and b.slots and b.slots[-1][0] == "d" and b.sign_map[b.slots[-1]] != 1:
        raise IllegalSignOnMaxDeltaSlot(f"maximal slot {slot_name(b.slots[-1])} must have sign +1")
    return nd, ne


def positive_roots(fam: AlgebraFamily, b: BorelSeq) -> frozenset:
    """Roots on which the functional slot -> sign * (len - position) is positive.

    For x before y this gives s(x)x - s(y)y, every s(x)x + s(y)y, the short
    roots s(x)x and 2s(x)x. The p-type roots 2e_i with sign -1 are then the
    ones left over, matching the rule {2e_i | sign(i) = 1}.
    """
    nd, ne = _validate_borel(fam, b)
    L = len(b.slots)
    sg = b.sign_map or {}
    phi = {s: sg.get(s, 1) * (L - i) for i, s in enumerate(b.slots)}
    out = set()
    for r in roots(fam, nd, ne):
        if sum(c * phi[s] for s, c in r.terms) > 0:
            out.add(r)
    return frozenset(out)


def sorted_roots(rs) -> list:
    return sorted(rs, key=Root.sort_key)


def natural_support(fam: AlgebraFamily) -> Callable[[Weight], bool]:
    """Membership predicate for the support of the natural module."""

    def member(w: Weight) -> bool:
        nz = [(("d", w.n - i), x) for i, x in enumerate(w.left) if x] + \
             [(("e", j + 1), x) for j, x in enumerate(w.right) if x]
        if not nz:
            return fam.kind == "ospB"
        if len(nz) != 1:
            return False
        (kind, idx), x = nz[0]
        k = fam.kind
        if k == "sl":
            return x == 1
        if k == "q":
            return kind == "e" and x == 1
        if k == "p":
            return kind == "e" and x in (1, -1)
        if k == "ospC" and kind == "d":
            return idx == 1 and x in (1, -1)
        return x in (1, -1)

    return member


def natural_parity(fam: AlgebraFamily, w: Weight) -> tuple:
    """Parities of the natural module's weight space at ``w`` (empty if not a weight)."""
    if not natural_support(fam)(w):
        return ()
    if fam.kind == "q":
        return (Parity.EVEN, Parity.ODD)
    if fam.kind == "p":
        return (Parity.EVEN,) if sum(w.right) > 0 else (Parity.ODD,)
    if any(w.right):
        return (Parity.ODD,)
    return (Parity.EVEN,)
