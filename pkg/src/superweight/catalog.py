"""Symbolic catalog of integrable bounded simple weight modules.

Infinite data is kept finite: a sequence (a_n, b_n) is a prefix plus an affine
tail a_n = alpha*n + beta with constant b, and a subset of Z>0 is a base set
(evens, odds, all, none) plus a finite symmetric difference.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional

from .errors import (BadParity, BadPartition, InvalidFamily, NotInRootLatticeTranslate, ParseError,
                     RankTooSmall, UnsupportedOrderRule)
from .oddref import check_partition, transport
from .rootsys import AlgebraFamily, BorelSeq, natural_support, parse_algebra
from .weights import Parity, Weight, format_rational, parse_rational, parse_weight

SEQUENCE_KINDS = ("SinfV", "SinfVdual", "LinfV", "LinfVdual")
PARTITION_KINDS = ("SmuV", "SmuVdual")
Q_KINDS = ("Qpart", "QpartDual")
SPINOR_KINDS = ("Spinor_B", "Spinor_D")
KINDS = PARTITION_KINDS + SEQUENCE_KINDS + ("LhalfV",) + SPINOR_KINDS + ("Natural", "Trivial") + Q_KINDS + ("GenericSl1",)

BASES = ("evens", "odds", "all", "none")


def _in_base(base: str, i: int) -> bool:
    return base == "all" or (base == "evens" and i % 2 == 0) or (base == "odds" and i % 2 == 1)


@dataclass(frozen=True)
class SetSpec:
    """A subset of Z>0: ``base`` with the finite set ``xor`` toggled."""

    base: str
    xor: frozenset = frozenset()

    def __post_init__(self):
        if self.base not in BASES:
            raise InvalidFamily(f"unknown base set {self.base!r}")
        xs = frozenset(int(i) for i in self.xor)
        if any(i < 1 for i in xs):
            raise InvalidFamily("set elements must be positive integers")
        object.__setattr__(self, "xor", xs)

    def __contains__(self, i: int) -> bool:
        return _in_base(self.base, i) != (i in self.xor)

    def horizon(self) -> int:
        """Beyond this index membership follows the base pattern."""
        return max(self.xor, default=0)

    def __str__(self):
        s = f"base:{self.base}"
        return s + (";xor:" + ",".join(map(str, sorted(self.xor))) if self.xor else "")


@dataclass(frozen=True)
class SequenceSpec:
    """Pairs (a_n, b_n): explicit prefix for n <= len(prefix), then alpha*n + beta with b = b_tail."""

    prefix: tuple = ()
    alpha: int = 1
    beta: int = 0
    b_prefix: tuple = ()
    b_tail: int = 0

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))
        bp = tuple(int(x) for x in self.b_prefix) or (int(self.b_tail),) * len(self.prefix)
        object.__setattr__(self, "b_prefix", bp)
        if len(bp) != len(self.prefix):
            raise InvalidFamily("b list must have one entry per prefix term plus one for the tail")
        if self.alpha < 1:
            raise InvalidFamily("the tail must grow: alpha >= 1")
        if any(b not in (0, 1) for b in bp + (self.b_tail,)):
            raise InvalidFamily("b values are 0 or 1")
        span = len(self.prefix) + 2
        a = [self.a(n) for n in range(1, span + 1)]
        b = [self.b(n) for n in range(1, span + 1)]
        if a[0] < 0:
            raise InvalidFamily("a_n must be nonnegative")
        for i in range(span - 1):
            if a[i] > a[i + 1]:
                raise InvalidFamily(f"a_n must be weakly increasing (a_{i + 1}={a[i]} > a_{i + 2}={a[i + 1]})")
            if a[i] == a[i + 1] and b[i] != b[i + 1]:
                raise InvalidFamily(f"b must stay constant where a does (n={i + 1})")

    def a(self, n: int) -> int:
        return self.prefix[n - 1] if n <= len(self.prefix) else self.alpha * n + self.beta

    def b(self, n: int) -> int:
        return self.b_prefix[n - 1] if n <= len(self.prefix) else self.b_tail

    def tail_key(self):
        return (self.alpha, self.beta, self.b_tail)

    def __str__(self):
        parts = []
        if self.prefix:
            parts.append("a:" + ",".join(map(str, self.prefix)))
        parts.append("tail:" + _affine_str(self.alpha, self.beta))
        if self.prefix and any(x != self.b_tail for x in self.b_prefix):
            parts.append("b:" + ",".join(map(str, self.b_prefix + (self.b_tail,))))
        else:
            parts.append(f"b:{self.b_tail}")
        return ";".join(parts)


def _affine_str(alpha, beta) -> str:
    s = "n" if alpha == 1 else f"{alpha}n"
    return s + (f"+{beta}" if beta > 0 else (f"{beta}" if beta < 0 else ""))


def _parse_affine(text: str):
    t = text.replace(" ", "")
    mt = re.fullmatch(r"(\d*)n([+-]\d+)?", t)
    if not mt:
        raise ParseError(f"tail must look like 2n+1 or n-1, got {text!r}")
    return int(mt.group(1) or 1), int(mt.group(2) or 0)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    algebra: AlgebraFamily
    partition: tuple = ()
    seq: Optional[SequenceSpec] = None
    subset: Optional[SetSpec] = None
    param: Optional[Fraction] = None
    borel: str = "<"
    twist: Parity = Parity.EVEN

    def __post_init__(self):
        object.__setattr__(self, "twist", Parity(int(self.twist)))
        object.__setattr__(self, "partition", tuple(int(x) for x in self.partition))
        if self.param is not None:
            object.__setattr__(self, "param", Fraction(self.param))
        _validate(self)

    def __str__(self):
        return format_family(self)

    def with_twist(self, twist) -> "FamilySpec":
        return replace(self, twist=Parity(int(twist)))

    def pi(self) -> "FamilySpec":
        return self.with_twist(self.twist.flip())


def _validate(f: FamilySpec):
    k, alg = f.kind, f.algebra
    if k not in KINDS:
        raise InvalidFamily(f"unknown family kind {k!r}")
    sl_only = PARTITION_KINDS + SEQUENCE_KINDS + ("LhalfV",)
    if k in sl_only and alg.kind != "sl":
        raise InvalidFamily(f"{k} lives over sl-type algebras, not {alg}")
    if k == "Spinor_B" and alg.kind != "ospB" or k == "Spinor_D" and alg.kind != "ospD":
        raise InvalidFamily(f"{k} does not fit {alg}")
    if k in Q_KINDS and alg.kind != "q":
        raise InvalidFamily(f"{k} lives over q(inf)")
    if k == "GenericSl1":
        if alg.kind != "sl" or alg.fixed_rank != ("e", 1):
            raise InvalidFamily("GenericSl1 lives over sl(inf|1)")
        if f.param is None or f.param.denominator == 1:
            raise InvalidFamily("GenericSl1 needs a non-integral parameter")
        if f.borel not in ("<", ">"):
            raise InvalidFamily("GenericSl1 borel is < or >")
    if k in PARTITION_KINDS:
        check_partition(f.partition)
    if k in Q_KINDS:
        check_partition(f.partition, strict=True)
    if k in SEQUENCE_KINDS:
        if f.seq is None:
            raise InvalidFamily(f"{k} needs a sequence")
        if k.startswith("Linf") and alg.fixed_rank is not None:
            s = f.seq
            a = [s.a(n) for n in range(1, len(s.prefix) + 3)]
            if s.alpha != 1 or any(y - x not in (0, 1) for x, y in zip(a, a[1:])):
                raise InvalidFamily("over sl(inf|m) with m finite, a_{n+1} - a_n must be 0 or 1")
            if any(b != s.b_tail for b in s.b_prefix):
                raise InvalidFamily("over sl(inf|m) with m finite, (b_n) must be constant")
    if k in ("LhalfV",) + SPINOR_KINDS and f.subset is None:
        raise InvalidFamily(f"{k} needs a set")


# grammar

_NAMES = {"SmuV": "SmuV", "SmuVdual": "SmuVdual", "SinfV": "SinfV", "SinfVdual": "SinfVdual",
          "LinfV": "LinfV", "LinfVdual": "LinfVdual", "LhalfV": "LhalfV", "SpinorB": "Spinor_B",
          "Spinor_B": "Spinor_B", "SpinorD": "Spinor_D", "Spinor_D": "Spinor_D", "Natural": "Natural",
          "Trivial": "Trivial", "Qpart": "Qpart", "QpartDual": "QpartDual", "GenSl1": "GenericSl1",
          "GenericSl1": "GenericSl1"}


def _ints(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise ParseError(f"expected integers, got {text!r}") from None


def _fields(body: str) -> dict:
    out = {}
    for part in body.split(";"):
        if not part.strip():
            continue
        if ":" not in part:
            raise ParseError(f"expected key:value, got {part!r}")
        key, val = part.split(":", 1)
        out[key.strip()] = val.strip()
    return out


def parse_family(text: str, algebra=None) -> FamilySpec:
    """Parse e.g. ``SinfV[a:1,2;tail:n-1;b:0]!Pi``; ``algebra`` defaults to sl(inf|1)."""
    if algebra is None:
        algebra = AlgebraFamily("sl", "e", 1)
    elif isinstance(algebra, str):
        algebra = parse_algebra(algebra)
    t = text.strip()
    twist = Parity.EVEN
    if t.endswith("!Pi"):
        twist, t = Parity.ODD, t[:-3]
    mt = re.fullmatch(r"([A-Za-z_0-9]+)(?:\[(.*)\])?", t)
    if not mt or mt.group(1) not in _NAMES:
        raise ParseError(f"unknown family {text!r}")
    kind, body = _NAMES[mt.group(1)], (mt.group(2) or "")
    kw = dict(kind=kind, algebra=algebra, twist=twist)
    if kind in PARTITION_KINDS + Q_KINDS:
        kw["partition"] = tuple(_ints(body))
    elif kind in SEQUENCE_KINDS:
        fs = _fields(body)
        unknown = set(fs) - {"a", "prefix", "tail", "b"}
        if unknown or "tail" not in fs:
            raise ParseError(f"sequence fields are a/prefix, tail, b; got {sorted(fs)}")
        prefix = _ints(fs.get("a", fs.get("prefix", "")))
        alpha, beta = _parse_affine(fs["tail"])
        bs = _ints(fs.get("b", "0"))
        if len(bs) == 1:
            bp, bt = (), bs[0]
        elif len(bs) == len(prefix) + 1:
            bp, bt = tuple(bs[:-1]), bs[-1]
        else:
            raise ParseError("b is a single value or one per prefix term plus the tail value")
        kw["seq"] = SequenceSpec(tuple(prefix), alpha, beta, bp, bt)
    elif kind in ("LhalfV",) + SPINOR_KINDS:
        fs = _fields(body)
        if set(fs) - {"base", "xor"}:
            raise ParseError("set fields are base and xor")
        kw["subset"] = SetSpec(fs.get("base", "none"), frozenset(_ints(fs.get("xor", ""))))
    elif kind == "GenericSl1":
        parts = [p.strip() for p in body.split(";")]
        kw["param"] = parse_rational(parts[0])
        for p in parts[1:]:
            key, _, val = p.partition(":")
            if key.strip() != "borel":
                raise ParseError(f"unknown GenSl1 field {key!r}")
            kw["borel"] = val.strip()
    elif body:
        raise ParseError(f"{kind} takes no parameters")
    return FamilySpec(**kw)


def format_family(f: FamilySpec) -> str:
    name = {"Spinor_B": "SpinorB", "Spinor_D": "SpinorD", "GenericSl1": "GenSl1"}.get(f.kind, f.kind)
    if f.kind in PARTITION_KINDS + Q_KINDS:
        body = ",".join(map(str, f.partition))
    elif f.kind in SEQUENCE_KINDS:
        body = str(f.seq)
    elif f.kind in ("LhalfV",) + SPINOR_KINDS:
        body = str(f.subset)
    elif f.kind == "GenericSl1":
        body = f"{format_rational(f.param)};borel:{f.borel}"
    else:
        body = None
    s = name if body is None else f"{name}[{body}]"
    return s + ("!Pi" if f.twist else "")


# highest weights

@dataclass(frozen=True)
class FamilyWeight:
    weight: Weight
    borel: BorelSeq
    parity: Parity


def _borel(alg: AlgebraFamily, nd: int, ne: int, which: str) -> BorelSeq:
    b = BorelSeq.standard(nd, ne) if which == "<" else BorelSeq.opposite(nd, ne)
    if alg.needs_sign:
        b = BorelSeq(b.slots, {s: 1 for s in b.slots})
    return b


def family_highest_weight(f: FamilySpec, n: int) -> FamilyWeight:
    """Highest weight at the n-th truncation and the Borel it refers to."""
    if n < 1:
        raise RankTooSmall(f"n must be positive, got {n}")
    alg = f.algebra
    nd, ne = alg.ranks(n)
    k = f.kind
    parity = f.twist
    zero_l, zero_r = [0] * nd, [0] * ne

    def out(left, right, which="<", extra=0):
        return FamilyWeight(Weight(left, right), _borel(alg, nd, ne, which), parity + extra)

    if k in PARTITION_KINDS:
        mu = f.partition
        if nd < len(mu):
            raise RankTooSmall(f"partition {mu} needs n >= {len(mu)}")
        if k == "SmuV":
            return out(list(mu) + [0] * (nd - len(mu)), zero_r, "<")
        return out([-p for p in mu] + [0] * (nd - len(mu)), zero_r, ">")
    if k in SEQUENCE_KINDS:
        a, b = f.seq.a(n), f.seq.b(n)
        if k == "SinfV":
            return out([a] + [0] * (nd - 1), zero_r, "<", b)
        if k == "SinfVdual":
            return out([-a] + [0] * (nd - 1), zero_r, ">", b)
        if ne < 1:
            raise RankTooSmall(f"{k} needs at least one eps slot at n={n}")
        if k == "LinfV":
            return out(zero_l, [0] * (ne - 1) + [a], ">", b)
        return out(zero_l, [0] * (ne - 1) + [-a], "<", b)
    if k == "Trivial":
        return out(zero_l, zero_r)
    if k == "Natural":
        if nd:
            return out([1] + [0] * (nd - 1), zero_r)
        return out(zero_l, [1] + [0] * (ne - 1))
    if k in SPINOR_KINDS:
        half = Fraction(1, 2)
        return out([half if (nd - p) in f.subset else -half for p in range(nd)], zero_r)
    if k == "LhalfV":
        # even part only: eps_A restricted to the first n indices, on the delta side
        return out([1 if (nd - p) in f.subset else 0 for p in range(nd)], zero_r)
    if k in Q_KINDS:
        g = f.partition
        if ne < len(g):
            raise RankTooSmall(f"partition {g} needs n >= {len(g)}")
        sign = 1 if k == "Qpart" else -1
        return out(zero_l, [sign * x for x in g] + [0] * (ne - len(g)), "<" if k == "Qpart" else ">")
    if k == "GenericSl1":
        return out(zero_l, [f.param], f.borel)
    raise InvalidFamily(k)


def b_lt_highest_weight(f: FamilySpec, n: int) -> FamilyWeight:
    """The highest weight moved to b(<) by odd reflections."""
    fw = family_highest_weight(f, n)
    target = _borel(f.algebra, fw.borel.n_delta, fw.borel.n_eps, "<")
    if fw.borel.slots == target.slots:
        return fw
    if f.algebra.kind != "sl":
        raise InvalidFamily("odd reflections are only available for sl-type algebras")
    w, p = transport(fw.weight, fw.borel, target)
    return FamilyWeight(w, target, fw.parity + p)


# supports

SUPPORT_KINDS = ("exterior", "sym", "sym_dual", "schur", "schur_dual", "spinor_B", "spinor_D", "natural", "singleton")


@dataclass(frozen=True)
class SupportSet:
    kind: str
    data: object

    def __post_init__(self):
        if self.kind not in SUPPORT_KINDS:
            raise InvalidFamily(f"unknown support kind {self.kind!r}")


def support_of(f: FamilySpec) -> SupportSet:
    table = {"SmuV": ("schur", f.partition), "SmuVdual": ("schur_dual", f.partition),
             "SinfV": ("sym", f.seq), "SinfVdual": ("sym_dual", f.seq), "LhalfV": ("exterior", f.subset),
             "Spinor_B": ("spinor_B", f.subset), "Spinor_D": ("spinor_D", f.subset),
             "Natural": ("natural", f.algebra)}
    if f.kind not in table:
        raise InvalidFamily(f"no support predicate for {f.kind}")
    return SupportSet(*table[f.kind])


def _head(w) -> list:
    if isinstance(w, Weight):
        return list(w.left) + list(w.right)
    return [Fraction(x) for x in w]


def support_contains(s: SupportSet, w) -> bool:
    """Membership of a finitely described weight.

    For the sequence-space kinds ``w`` lists lambda_1, ..., lambda_L; later
    coordinates are taken to follow the set's own pattern (zero for Schur
    kinds, A for exterior, the increments a_i - a_{i-1} for symmetric kinds).
    """
    k = s.kind
    if k == "natural":
        return natural_support(s.data)(w)
    if k == "singleton":
        return w == s.data
    lam = _head(w)
    if k in ("spinor_B", "spinor_D"):
        half = Fraction(1, 2)
        if any(x not in (half, -half) for x in lam):
            raise BadParity("spinor weights have coordinates +-1/2")
        if k == "spinor_B":
            return True
        diff = sum(1 for i, x in enumerate(lam, 1) if (x == half) != (i in s.data))
        return diff % 2 == 0
    if any(x.denominator != 1 for x in lam):
        return False
    lam = [int(x) for x in lam]
    if k == "schur":
        mu = list(s.data) + [0] * len(lam)
        return all(0 <= x <= mu[i] for i, x in enumerate(lam))
    if k == "schur_dual":
        mu = list(s.data) + [0] * len(lam)
        return all(0 <= -x <= mu[i] for i, x in enumerate(lam))
    if k == "exterior":
        if any(x not in (0, 1) for x in lam):
            return False
        return sum(lam) == sum(1 for i in range(1, len(lam) + 1) if i in s.data)
    if k in ("sym", "sym_dual"):
        seq = s.data
        sign = 1 if k == "sym" else -1
        lam = [sign * x for x in lam]
        if any(x < 0 for x in lam):
            return False
        a = lambda i: 0 if i == 0 else seq.a(i)
        L = len(lam)
        for n in range(L + 1):
            if sum(lam[:n]) == a(n) and all(lam[i - 1] == a(i) - a(i - 1) for i in range(n + 1, L + 1)):
                return True
        return False
    raise InvalidFamily(k)


# isomorphism

def _canonical(f: FamilySpec):
    k, t = f.kind, int(f.twist)
    if k == "Trivial" or (k in PARTITION_KINDS and not f.partition):
        return ("Trivial", t)
    if k == "Natural" and f.algebra.kind == "sl":
        return ("SmuV", (1,), t)
    if k == "Natural" and f.algebra.kind == "q":
        return ("Qpart", (1,), 0)
    if k in PARTITION_KINDS:
        return (k, f.partition, t)
    if k in SEQUENCE_KINDS:
        s = f.seq
        return (k, s.alpha, s.beta, (s.b_tail + t) % 2)
    if k in Q_KINDS:
        return (k, f.partition, 0 if len(f.partition) % 2 else t)
    if k == "LhalfV":
        sub = f.subset
        charge = sum(1 for i in sub.xor if not _in_base(sub.base, i)) - sum(1 for i in sub.xor if _in_base(sub.base, i))
        return (k, sub.base, charge, t)
    if k == "Spinor_B":
        return (k, f.subset.base, t)
    if k == "Spinor_D":
        return (k, f.subset.base, len(f.subset.xor) % 2, t)
    if k == "GenericSl1":
        return (k, f.param, f.borel, t)
    return (k, t)


def isomorphic(f: FamilySpec, g: FamilySpec) -> bool:
    if f.algebra != g.algebra:
        return False
    return _canonical(f) == _canonical(g)


def dual_family(f: FamilySpec) -> FamilySpec:
    swap = {"SmuV": "SmuVdual", "SinfV": "SinfVdual", "LinfV": "LinfVdual", "Qpart": "QpartDual"}
    swap.update({v: k for k, v in swap.items()})
    if f.kind in swap:
        return replace(f, kind=swap[f.kind])
    if f.kind == "GenericSl1":
        return replace(f, param=-f.param, borel=">" if f.borel == "<" else "<")
    return f


# Borel conditions

class _Cut:
    """A subset of Z>0 fixed by its members up to ``horizon`` and a base pattern after it."""

    def __init__(self, head, base, horizon):
        self.head = frozenset(head)
        self.base = base
        self.horizon = horizon

    def members_upto(self, n):
        return [i for i in range(1, n + 1) if (i in self.head if i <= self.horizon else _in_base(self.base, i))]

    @property
    def infinite(self):
        return self.base != "none"

    def empty(self):
        return not self.head and not self.infinite

    def meet(self, other):
        base = _meet(self.base, other.base)
        return _Cut(self.head & other.head, base, self.horizon)

    def minus(self, other):
        base = _minus(self.base, other.base)
        return _Cut(self.head - other.head, base, self.horizon)

    def size(self):
        return None if self.infinite else len(self.head)

    def least(self):
        if self.head:
            return min(self.head)
        return self.members_upto(self.horizon + 3)[0] if self.infinite else None

    def greatest(self):
        return None if self.infinite else max(self.head, default=None)


def _meet(x, y):
    if x == "none" or y == "none":
        return "none"
    if x == "all":
        return y
    if y == "all":
        return x
    return x if x == y else "none"


def _minus(x, y):
    if y == "all" or x == "none":
        return "none"
    if y == "none":
        return x
    if x == "all":
        return "odds" if y == "evens" else "evens"
    return "none" if x == y else x


def _cut_of(spec: SetSpec, horizon) -> _Cut:
    return _Cut([i for i in range(1, horizon + 1) if i in spec], spec.base, horizon)


@dataclass(frozen=True)
class OrderRule:
    """Buckets of Z>0 listed first to last; each is a finite list or a named set."""

    buckets: tuple  # (("list", (1, 2, 3)) | ("named", "evens"), descending: bool)

    def mentioned(self) -> int:
        return max([max(items, default=0) for (tag, items), _ in self.buckets if tag == "list"], default=0)


def parse_order_rule(text: str) -> OrderRule:
    buckets = []
    for raw in text.split("|"):
        part = raw.strip()
        desc = part.endswith(">")
        if desc:
            part = part[:-1].strip()
        if part in ("evens", "odds", "all", "rest"):
            buckets.append((("named", part), desc))
            continue
        try:
            items = tuple(int(t) for t in part.split(","))
        except ValueError:
            raise UnsupportedOrderRule(f"cannot read bucket {raw!r}") from None
        if not items or any(i < 1 for i in items) or len(set(items)) != len(items):
            raise UnsupportedOrderRule(f"bad bucket {raw!r}")
        buckets.append((("list", items), desc))
    if not buckets:
        raise UnsupportedOrderRule("empty order")
    return OrderRule(tuple(buckets))


def _bucket_cuts(rule: OrderRule, horizon: int):
    """Resolve each bucket to the elements it actually holds, plus the in-bucket order."""
    taken = _Cut([], "none", horizon)
    out = []
    for (tag, val), desc in rule.buckets:
        if tag == "list":
            cut = _Cut(val, "none", horizon).minus(taken)
            if len(cut.head) != len(val):
                raise UnsupportedOrderRule(f"element listed twice: {val}")
            seq = list(reversed(val)) if desc else list(val)
            out.append((cut, seq, desc))
        else:
            base = "all" if val == "rest" else val
            cut = _cut_of(SetSpec(base), horizon).minus(taken)
            out.append((cut, None, desc))
        taken = _Cut(taken.head | cut.head, _join(taken.base, cut.base), horizon)
    if taken.base != "all" or len(taken.head) != horizon:
        raise UnsupportedOrderRule("the order must cover every positive integer (add a rest bucket)")
    return out


def _join(x, y):
    if x == y or y == "none":
        return x
    if x == "none":
        return y
    return "all"


def _precedes(rule: OrderRule, X: SetSpec, Y: SetSpec) -> bool:
    """Every element of X comes before every element of Y."""
    horizon = max(rule.mentioned(), X.horizon(), Y.horizon()) + 2
    buckets = _bucket_cuts(rule, horizon)
    cx, cy = _cut_of(X, horizon), _cut_of(Y, horizon)
    for i, (cut, seq, desc) in enumerate(buckets):
        xi = cut.meet(cx)
        if xi.empty():
            continue
        for j, (cut2, seq2, desc2) in enumerate(buckets):
            yj = cut2.meet(cy)
            if yj.empty() or j > i:
                continue
            if j < i:
                return False
            if seq is not None:  # explicit list: compare positions
                pos = {v: p for p, v in enumerate(seq)}
                if max(pos[v] for v in xi.head) > min(pos[v] for v in yj.head):
                    return False
            elif desc:
                if yj.infinite or xi.least() <= yj.greatest():
                    return False
            else:
                if xi.infinite or xi.greatest() >= yj.least():
                    return False
    return True


def _end_count(rule: OrderRule, initial: bool) -> float:
    """How many elements form an initial (or final) segment that has a first (last) element chain."""
    horizon = rule.mentioned() + 2
    buckets = _bucket_cuts(rule, horizon)
    if not initial:
        buckets = list(reversed(buckets))
    total = 0
    for cut, seq, desc in buckets:
        if cut.empty():
            continue
        if not cut.infinite:
            total += len(cut.head)
            continue
        grows_away = (not desc) if initial else desc
        return float("inf") if grows_away else total
    return total


def hw_borel_condition(f: FamilySpec, order) -> bool:
    rule = parse_order_rule(order) if isinstance(order, str) else order
    _bucket_cuts(rule, rule.mentioned() + 2)
    k = f.kind
    if k in ("SinfV", "SinfVdual"):
        return False
    if k in PARTITION_KINDS:
        need = len(f.partition)
        return _end_count(rule, initial=(k == "SmuV")) >= need
    if k == "LhalfV":
        A = f.subset
        return _precedes(rule, A, _complement(A))
    if k in ("LinfV", "LinfVdual"):
        s = f.seq
        if s.alpha >= 2:
            return False
        A = SetSpec("all", frozenset(range(1, max(1 - s.beta, 1))))
        comp = _complement(A)
        return _precedes(rule, A, comp) if k == "LinfV" else _precedes(rule, comp, A)
    if k == "Trivial":
        return True
    raise UnsupportedOrderRule(f"no highest weight criterion recorded for {k}")


def _complement(A: SetSpec) -> SetSpec:
    base = {"evens": "odds", "odds": "evens", "all": "none", "none": "all"}[A.base]
    return SetSpec(base, A.xor)


# remaining catalog operations

def extend_to_gl(beta, c) -> Fraction:
    """Value at E_{1,1} of the extension of lambda + beta, given c at lambda.

    ``beta`` lists the eps_1, eps_2, ... coefficients of a root-lattice element.
    """
    coeffs = [Fraction(x) for x in beta]
    if any(x.denominator != 1 for x in coeffs) or sum(coeffs) != 0:
        raise NotInRootLatticeTranslate(f"{beta} is not an integral combination of roots")
    return Fraction(c) + (coeffs[0] if coeffs else 0)


def q_hw_space_dim(w) -> int:
    marks = list(w.left) + list(w.right) if isinstance(w, Weight) else list(w)
    return 2 ** (sum(1 for x in marks if x) // 2)


@dataclass(frozen=True)
class CatalogEntry:
    kind: str
    twist: Parity
    parameters: str
    note: str = ""


def classify_bounded(alg: AlgebraFamily) -> list:
    """The closed list of bounded integrable simple families, up to parameters."""
    E, O = Parity.EVEN, Parity.ODD
    if alg.kind == "sl":
        seq_note = "constant b" if alg.fixed_rank else ""
        out = [CatalogEntry("SmuV", E, "partition mu"), CatalogEntry("SmuVdual", E, "partition mu"),
               CatalogEntry("SmuV", O, "partition mu"), CatalogEntry("SmuVdual", O, "partition mu")]
        out += [CatalogEntry(k, E, "sequence (a_n, b_n)", seq_note) for k in SEQUENCE_KINDS]
        if alg.fixed_rank == ("e", 1):
            out += [CatalogEntry("GenericSl1", E, "a non-integral", "borel <"),
                    CatalogEntry("GenericSl1", E, "a non-integral", "borel >")]
        return out
    if alg.kind == "q":
        return [CatalogEntry("Qpart", E, "strict partition gamma", "two-sided"),
                CatalogEntry("QpartDual", E, "strict partition gamma", "two-sided")]
    return [CatalogEntry("Trivial", E, ""), CatalogEntry("Trivial", O, ""),
            CatalogEntry("Natural", E, ""), CatalogEntry("Natural", O, "")]


def validate_singular_shape(case: str, w: Weight, n: int, x: int) -> bool:
    """Does w have one of the shapes allowed for the given case (a)-(e)?"""
    if w.shape != (n, x):
        return False
    left, right = list(w.left), list(w.right)
    if not w.is_integral() and not (case in "ab" and x == 1):
        return False
    zero = not any(left) and not any(right)
    if zero:
        return True

    def partition_head(vals):
        k = 0
        while k < len(vals) and vals[k] != 0:
            k += 1
        head, rest = vals[:k], vals[k:]
        return (all(v.denominator == 1 and v > 0 for v in head) and all(a >= b for a, b in zip(head, head[1:]))
                and not any(rest))

    def ones_then(a_sign):
        # (s^n | a, 0^{x-1}) with a >= 0 (any a when x = 1)
        if any(v != a_sign for v in left) or any(right[1:]):
            return False
        a = a_sign * right[0]
        return (x == 1) or (a.denominator == 1 and a >= 0)

    if case == "a":
        return (not any(right) and partition_head(left)) or ones_then(1)
    if case == "b":
        return (not any(right) and partition_head([-v for v in left])) or ones_then(-1)
    if case in "cd":
        sign = 1 if case == "c" else -1
        return not any(right) and not any(left[1:]) and sign * left[0] > 0
    if case == "e":
        if not any(right):
            k = sum(1 for v in left if v == 1)
            return left == [1] * k + [0] * (n - k)
        return all(v == 1 for v in left) and right[0] >= 0 and not any(right[1:])
    raise InvalidFamily(f"unknown case {case!r}")


SHAPE_CASE = {"SmuV": "a", "SmuVdual": "b", "SinfV": "c", "SinfVdual": "d", "LinfV": "e", "LinfVdual": "b"}
