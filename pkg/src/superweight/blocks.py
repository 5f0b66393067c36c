"""Kac modules for sl(n|1), first extensions between catalog modules, and blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .catalog import FamilySpec, b_lt_highest_weight, isomorphic, Q_KINDS
from .diagrams import LegalMove, WeightDiagram, alignment_shift, diagram_of, ext1_nonzero, legal_moves, weight_of
from .errors import (InvalidFamily, MultipleMoves, NoIntegralAlignment, NonIntegralWeight, ParseError,
                     ShapeMismatch, UnstableVerdict, WindowTooSmall)
from .weights import Parity, Weight, central_shift, pairing, parity_of, rho


def unique_legal_move(f: WeightDiagram) -> Optional[LegalMove]:
    moves = legal_moves(f)
    if len(moves) > 1:
        raise MultipleMoves(f"{len(moves)} legal moves where at most one was expected")
    return moves[0] if moves else None


@dataclass(frozen=True)
class KacStructure:
    verdict: str  # "simple" or "length2"
    socle_hw: Optional[Weight] = None
    parity_twist: Optional[Parity] = None


def _typical_by_pairing(lam: Weight) -> bool:
    shifted = lam + rho(lam.n, lam.m)
    return all(pairing(shifted, {("d", i): 1, ("e", j): -1}) != 0
               for i in range(1, lam.n + 1) for j in range(1, lam.m + 1))


def kac_structure(lam: Weight, n: int) -> KacStructure:
    """Composition structure of the Kac module K(lam) over gl(n|1)."""
    if lam.shape != (n, 1):
        raise ShapeMismatch(f"expected shape ({n},1), got {lam.shape}")
    if not lam.is_integral():
        if _typical_by_pairing(lam):
            return KacStructure("simple")
        raise NonIntegralWeight(f"{lam} is atypical but not integral")
    f = diagram_of(lam)
    move = unique_legal_move(f)
    if not f.crosses or move is None:
        return KacStructure("simple")
    socle = weight_of(move.result, n, 1)
    drop = sum(lam.left) - sum(socle.left)
    return KacStructure("length2", socle, parity_of(int(drop)))


@dataclass(frozen=True)
class RankCheck:
    n: int
    related: bool
    direction: Optional[str] = None  # "f->g" (g is the socle of K(f)) or "g->f"
    twist: Optional[Parity] = None


@dataclass(frozen=True)
class Ext1Result:
    dim: int
    twist: Optional[Parity] = None
    per_rank: tuple = ()
    reason: str = ""


def _rank_check(f: FamilySpec, g: FamilySpec, n: int) -> RankCheck:
    fv, gw = b_lt_highest_weight(f, n), b_lt_highest_weight(g, n)
    try:
        w = central_shift(gw.weight, alignment_shift(fv.weight, gw.weight))
    except NoIntegralAlignment:
        return RankCheck(n, False)
    df, dg = diagram_of(fv.weight), diagram_of(w)
    base = fv.parity + gw.parity
    for direction, src, dst, src_w in (("f->g", df, dg, fv.weight), ("g->f", dg, df, w)):
        mv = unique_legal_move(src)
        if mv is not None and mv.result == dst:
            drop = sum(src_w.left) - sum(weight_of(dst, n, 1).left)
            return RankCheck(n, True, direction, base + parity_of(int(drop)))
    return RankCheck(n, False)


def known_semisimple(alg) -> bool:
    """All first extensions vanish: every algebra except sl(inf|1) and q(inf)."""
    return not (alg.kind == "q" or (alg.kind == "sl" and alg.fixed_rank == ("e", 1)))


def ext1_dim(f: FamilySpec, g: FamilySpec, window) -> Ext1Result:
    window = list(window)
    if f.algebra != g.algebra:
        raise InvalidFamily("families over different algebras")
    if len(window) < 3:
        raise WindowTooSmall(f"need at least 3 ranks, got {len(window)}")
    alg = f.algebra
    if known_semisimple(alg):
        return Ext1Result(0, reason="semisimple category")
    if alg.kind == "q":
        k = len(f.partition) if f.kind in Q_KINDS else 1
        if isomorphic(f, g) and k % 2 == 1:
            return Ext1Result(1, reason="self-extension, odd length")
        return Ext1Result(0, reason="q rule")
    for h in (f, g):
        if h.kind in ("LhalfV",):
            raise InvalidFamily(f"{h.kind} is not in the sl(inf|1) catalog")
    if "GenericSl1" in (f.kind, g.kind):
        return Ext1Result(0, reason="typical at every rank")
    checks = tuple(_rank_check(f, g, n) for n in window)
    flags = {c.related for c in checks}
    if flags == {False}:
        return Ext1Result(0, per_rank=checks, reason="no single move at any rank")
    if flags != {True}:
        bad = [c.n for c in checks if not c.related]
        raise UnstableVerdict(f"criterion holds at some ranks but not at {bad}")
    twists = {c.twist for c in checks}
    twist = twists.pop() if len(twists) == 1 else None
    return Ext1Result(1, twist, checks, "single legal move at every rank")


@dataclass(frozen=True)
class BlockGraph:
    nodes: tuple
    edges: tuple  # (i, j, twist or None), i <= j
    components: tuple  # tuples of node indices

    def nontrivial(self) -> list:
        return [c for c in self.components if len(c) > 1]


def block_graph(nodes, window) -> BlockGraph:
    nodes = tuple(nodes)
    if nodes and len({h.algebra for h in nodes}) > 1:
        raise InvalidFamily("all nodes must share one algebra")
    parent = list(range(len(nodes)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = []
    for i in range(len(nodes)):
        for j in range(i, len(nodes)):
            r = ext1_dim(nodes[i], nodes[j], window)
            if r.dim:
                edges.append((i, j, r.twist))
                parent[find(i)] = find(j)
    groups = {}
    for i in range(len(nodes)):
        groups.setdefault(find(i), []).append(i)
    comps = tuple(sorted(tuple(g) for g in groups.values()))
    return BlockGraph(nodes, tuple(edges), comps)


def parse_window(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1) if sep else range(int(lo), int(lo) + 1)
    except ValueError:
        raise ParseError(f"window must look like 3..8, got {text!r}") from None


def ext1_by_moves(f: FamilySpec, g: FamilySpec, window) -> list:
    """Per-rank check with any legal move (no uniqueness assumption), for sl-type algebras.

    Used to confirm the vanishing that ``ext1_dim`` assumes for these algebras.
    """
    out = []
    for n in window:
        v, w = b_lt_highest_weight(f, n).weight, b_lt_highest_weight(g, n).weight
        try:
            out.append(ext1_nonzero(v, w, align_central=True))
        except NoIntegralAlignment:
            out.append(False)
    return out
