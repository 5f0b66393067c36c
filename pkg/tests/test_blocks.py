import itertools

import pytest

from superweight.blocks import (block_graph, ext1_by_moves, ext1_dim, kac_structure, parse_window,
                                unique_legal_move)
from superweight.catalog import dual_family, parse_family
from superweight.diagrams import WeightDiagram, atypicality, diagram_of
from superweight.errors import (InvalidFamily, MultipleMoves, ParseError, ShapeMismatch, UnstableVerdict,
                                WindowTooSmall)
from superweight.rootsys import parse_algebra
from superweight.weights import Parity, ShiftedWeight, parse_weight, unshift

W = parse_weight
TRIV = "Trivial"
LINF = "LinfV[tail:n-1;b:1]"
LINF_DUAL = "LinfVdual[tail:n-1;b:1]"


def fam(text, alg="sl:1"):
    return parse_family(text, alg)


def test_unique_move_examples():
    mv = unique_legal_move(diagram_of(W("(0^3|0)")))
    assert (mv.a, mv.b) == (1, 0)
    assert unique_legal_move(diagram_of(W("(0,0|5)"))) is None
    mv = unique_legal_move(diagram_of(W("(0^4|-3)")))
    assert (mv.a, mv.b) == (4, 0)
    with pytest.raises(MultipleMoves):
        unique_legal_move(WeightDiagram.from_sets([0, 2]))


def test_kac_examples():
    k = kac_structure(W("(0^3|0)"), 3)
    assert (k.verdict, k.socle_hw, k.parity_twist) == ("length2", W("(0,0,-1|1)"), Parity.ODD)
    assert kac_structure(W("(0,0|1/2)"), 2).verdict == "simple"
    k = kac_structure(W("(0^4|-3)"), 4)
    assert (k.verdict, k.socle_hw, k.parity_twist) == ("length2", W("(-1^4|1)"), Parity.EVEN)
    assert kac_structure(W("(0,0|5)"), 2).verdict == "simple"
    with pytest.raises(ShapeMismatch):
        kac_structure(W("(0,0|0,0)"), 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_trivial_kac_chain(n):
    k = kac_structure(W(f"(0^{n}|0)"), n)
    assert k.verdict == "length2"
    assert k.socle_hw == W(f"(0^{n - 1},-1|1)") and k.parity_twist == Parity.ODD


def dominant_n1(n, lo=-3, hi=None):
    hi = n + 3 if hi is None else hi
    for a in itertools.combinations(range(lo, hi), n):
        for b in range(lo, hi):
            yield unshift(ShiftedWeight(tuple(reversed(a)), (b,)))


@pytest.mark.parametrize("n", range(1, 6))
def test_socle_keeps_core_and_counts_odd_roots(n):
    for lam in dominant_n1(n):
        k = kac_structure(lam, n)
        if k.verdict == "simple":
            assert atypicality(diagram_of(lam)) == 0 or not k.socle_hw
            continue
        f, g = diagram_of(lam), diagram_of(k.socle_hw)
        assert g.core == f.core and atypicality(g) == atypicality(f)
        # lam - socle is a sum of roots delta_i - eps_1: left drops, right rises by the same count
        drops = [x - y for x, y in zip(lam.left, k.socle_hw.left)]
        steps = k.socle_hw.right[0] - lam.right[0]
        assert all(d >= 0 for d in drops) and sum(drops) == steps
        assert k.parity_twist == Parity(int(steps) % 2)


def test_ext1_examples():
    r = ext1_dim(fam(TRIV), fam(LINF), range(3, 9))
    assert r.dim == 1
    assert {c.direction for c in r.per_rank} == {"f->g"}
    assert ext1_dim(fam(TRIV), fam("SmuV[1]"), range(3, 9)).dim == 0
    q = parse_algebra("q")
    assert ext1_dim(fam("Qpart[1]", q), fam("Qpart[1]", q), range(3, 9)).dim == 1
    assert ext1_dim(fam("Qpart[2,1]", q), fam("Qpart[2,1]", q), range(3, 9)).dim == 0


def test_ext1_twist_is_recorded_per_rank():
    r = ext1_dim(fam(TRIV), fam(LINF), range(3, 9))
    twists = [c.twist for c in r.per_rank]
    assert all(t is not None for t in twists)
    assert all(a != b for a, b in zip(twists, twists[1:]))  # alternates with n
    assert r.twist is None


def test_ext1_errors():
    with pytest.raises(WindowTooSmall):
        ext1_dim(fam(TRIV), fam(LINF), range(3, 5))
    with pytest.raises(InvalidFamily):
        ext1_dim(fam(TRIV), fam("Trivial", "sl:2"), range(3, 9))
    with pytest.raises(InvalidFamily):
        ext1_dim(fam(TRIV), fam("LhalfV[base:evens]"), range(3, 9))
    with pytest.raises(ParseError):
        parse_window("three")
    assert list(parse_window("3..5")) == [3, 4, 5]


def test_unstable_window_is_reported():
    # a_n = n up to n = 3, then n - 1
    f = fam("LinfV[a:1,2,3,3;tail:n-1;b:1]")
    with pytest.raises(UnstableVerdict):
        ext1_dim(fam(TRIV), f, range(3, 8))
    assert ext1_dim(fam(TRIV), f, range(4, 9)).dim == 1


NODES = [TRIV, LINF, LINF_DUAL, "SmuV[1]", "SinfV[tail:n;b:0]", "GenSl1[1/2;borel:<]", "SmuVdual[2]",
         "Trivial!Pi", "LinfV[tail:n;b:0]"]


@pytest.mark.parametrize("i", range(len(NODES)))
@pytest.mark.parametrize("j", range(len(NODES)))
def test_ext1_symmetric(i, j):
    f, g = fam(NODES[i]), fam(NODES[j])
    assert ext1_dim(f, g, range(3, 9)).dim == ext1_dim(g, f, range(3, 9)).dim


@pytest.mark.parametrize("pair", [(TRIV, LINF), (TRIV, LINF_DUAL), (LINF, LINF_DUAL)])
def test_ext1_compatible_with_duality(pair):
    f, g = map(fam, pair)
    window = range(3, 9)
    assert ext1_dim(f, g, window).dim == ext1_dim(dual_family(g), dual_family(f), window).dim


def test_direction_flips_under_duality():
    r = ext1_dim(fam(TRIV), fam(LINF_DUAL), range(3, 9))
    assert r.dim == 1 and {c.direction for c in r.per_rank} == {"g->f"}


@pytest.mark.parametrize("top", range(5, 11))
def test_block_of_trivial(top):
    nodes = [fam(t) for t in (TRIV, LINF, LINF_DUAL, "SmuV[1]", "SinfV[tail:n;b:0]", "GenSl1[1/2;borel:<]")]
    g = block_graph(nodes, range(3, top + 1))
    assert g.nontrivial() == [(0, 1, 2)]
    assert g.components == ((0, 1, 2), (3,), (4,), (5,))


def test_block_ignores_parity_twist():
    nodes = [fam(t) for t in ("Trivial!Pi", LINF, "LinfVdual[tail:n-1;b:1]!Pi")]
    assert block_graph(nodes, range(3, 9)).nontrivial() == [(0, 1, 2)]


def test_semisimple_algebras():
    for alg, texts in (("ospB", ["Trivial", "Natural", "Natural!Pi"]), ("sl:2", ["Trivial", LINF, "SmuV[1]"]),
                       ("p", ["Trivial", "Natural"])):
        g = block_graph([fam(t, alg) for t in texts], range(3, 9))
        assert g.nontrivial() == [] and not g.edges
    assert block_graph([fam(TRIV)], range(3, 6)).components == ((0,),)


@pytest.mark.parametrize("alg", ["sl:2", "sl:3", "sl"])
def test_moves_agree_with_semisimplicity(alg):
    texts = [TRIV, "SmuV[1]", "SmuV[2,1]", "SmuVdual[1]", "SinfV[tail:n;b:0]", "LinfV[tail:n-1;b:0]"]
    nodes = [fam(t, alg) for t in texts]
    for f in nodes:
        for g in nodes:
            assert not any(ext1_by_moves(f, g, range(5, 9)))
