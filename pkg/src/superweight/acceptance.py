"""Release-gate checks shared by the ``selftest`` command and the test suite.

Each check returns ``(passed, detail)``.
"""

from __future__ import annotations

import itertools
import random

from . import blocks, catalog, characters, diagrams, oddref, rootsys
from .errors import BadPartition
from .weights import Parity, ShiftedWeight, Weight, central_shift_between, unshift


def partitions(total: int, largest=None):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest or total), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def random_dominant(rng: random.Random, n: int, m: int, lo=-10, hi=10) -> Weight:
    a = sorted(rng.sample(range(lo, hi + 1), n), reverse=True)
    b = sorted(rng.sample(range(lo, hi + 1), m))
    return unshift(ShiftedWeight(a, b))


def check_diagram_bijection(samples=1000, seed=7):
    rng = random.Random(seed)
    for _ in range(samples):
        n, m = rng.randint(0, 8), rng.randint(0, 8)
        w = random_dominant(rng, n, m)
        if diagrams.weight_of(diagrams.diagram_of(w), n, m) != w:
            return False, f"round trip failed for {w}"
    return True, f"{samples} random weights"


def example_chain(n: int):
    lam = Weight([0] * n, [1 - n])
    mu = Weight([-1] * n, [1])
    nu = Weight([-1] * (n - 1) + [-2], [2])
    return lam, mu, nu


def check_example_chain():
    for n in range(2, 11):
        lam, mu, nu = example_chain(n)
        fl, fm, fn = map(diagrams.diagram_of, (lam, mu, nu))
        for src, dst in ((fl, fm), (fm, fn)):
            moves = diagrams.legal_moves(src)
            if len(moves) != 1 or moves[0].result != dst:
                return False, f"n={n}: expected a unique move"
        if not (diagrams.ext1_nonzero(lam, mu) and diagrams.ext1_nonzero(mu, nu)):
            return False, f"n={n}: adjacent pair without extension"
        if diagrams.ext1_nonzero(lam, nu):
            return False, f"n={n}: end pair related"
    return True, "n = 2..10"


def check_omega_grid(n_max=6, x_max=4, a_max=8, size_max=6):
    count = 0
    for n in range(1, n_max + 1):
        for x in range(1, x_max + 1):
            lt, gt = oddref.b_lt(n, x), oddref.b_gt(n, x)
            params = [("O2", a) for a in range(a_max + 1)] + [("O3", a) for a in range(a_max + 1)]
            params += [("O6", mu) for t in range(size_max + 1) for mu in partitions(t) if len(mu) <= n]
            for kind, p in params:
                got, _ = oddref.transport(oddref.omega_b_gt(kind, n, x, p), gt, lt)
                if got != oddref.omega_table(kind, n, x, p):
                    return False, f"{kind} n={n} x={x} param={p}: {got} vs {oddref.omega_table(kind, n, x, p)}"
                count += 1
    return True, f"{count} table entries"


def catalog_b_lt_weights(n: int, x: int, a_max=10, size_max=6):
    """b(<) highest weights of the six table types at shape (n, x).

    Partitions are kept at length <= n - 2, the finite stand-in for
    "length much smaller than n".
    """
    out = []
    for a in range(a_max + 1):
        out.append(Weight([a] + [0] * (n - 1), [0] * x))
        out.append(Weight([0] * n, [0] * (x - 1) + [-a]))
        out.append(oddref.omega_table("O2", n, x, a))
        out.append(oddref.omega_table("O3", n, x, a))
    for t in range(1, size_max + 1):
        for mu in partitions(t):
            if len(mu) <= n - 2:
                out.append(Weight(list(mu) + [0] * (n - len(mu)), [0] * x))
                out.append(oddref.omega_table("O6", n, x, mu))
    return list(dict.fromkeys(out))


def _central_key(w: Weight):
    c = w.left[0] if w.n else (-w.right[0] if w.m else 0)
    return tuple(v - c for v in w.left), tuple(v + c for v in w.right)


def check_no_collision(n_min=3, n_max=8):
    images = 0
    for n in range(n_min, n_max + 1):
        for x in sorted({2, 3, 4} | ({n - 1} if n - 1 >= 2 else set())):
            cat = catalog_b_lt_weights(n, x)
            keys = {}
            for v in cat:
                keys.setdefault(_central_key(v), []).append(v)
            for w in cat:
                for mv in diagrams.legal_moves(diagrams.diagram_of(w)):
                    img = diagrams.weight_of(mv.result, n, x)
                    images += 1
                    for v in keys.get(_central_key(img), []):
                        if central_shift_between(img, v) is not None:
                            return False, f"n={n} x={x}: move image {img} of {w} is a shift of {v}"
    # the family-level verdict for m >= 2 agrees with the per-rank brute force
    for tag in ("sl:2", "sl:3", "sl"):
        alg = rootsys.parse_algebra(tag)
        fams = [catalog.parse_family(s, alg) for s in
                ("Trivial", "SmuV[1]", "SmuV[2,1]", "SmuVdual[1]", "SinfV[tail:n;b:0]",
                 "SinfVdual[tail:2n;b:0]", "LinfV[tail:n-1;b:0]", "LinfVdual[tail:n;b:1]")]
        for f, g in itertools.permutations(fams, 2):
            if blocks.ext1_dim(f, g, range(5, 9)).dim != 0:
                return False, f"{alg}: nonzero Ext for {f}, {g}"
            if any(blocks.ext1_by_moves(f, g, range(5, 9))):
                return False, f"{alg}: a legal move relates {f} and {g}"
    return True, f"{images} move images checked"


def representative_nodes():
    alg = rootsys.parse_algebra("sl:1")
    specs = ["Trivial", "LinfV[tail:n-1;b:1]", "LinfVdual[tail:n-1;b:1]", "SmuV[1]", "SinfV[tail:n;b:0]",
             "GenSl1[1/2;borel:<]"]
    return [catalog.parse_family(s, alg) for s in specs]


def check_block(n_max=10):
    nodes = representative_nodes()
    want = {0, 1, 2}
    for N in range(5, n_max + 1):
        g = blocks.block_graph(nodes, range(3, N + 1))
        nontrivial = g.nontrivial()
        if len(nontrivial) != 1 or set(nontrivial[0]) != want:
            return False, f"window [3,{N}]: components {g.components}"
    return True, "windows [3,N], N = 5..10"


def check_kac():
    for n in range(2, 9):
        k = blocks.kac_structure(Weight([0] * n, [0]), n)
        if (k.verdict, k.socle_hw, k.parity_twist) != ("length2", Weight([0] * (n - 1) + [-1], [1]), Parity.ODD):
            return False, f"n={n}: {k}"
        for typical in (Weight([0] * n, [5]), Weight([0] * n, ["1/2"]), Weight([3] + [0] * (n - 1), [-n - 4])):
            if blocks.kac_structure(typical, n).verdict != "simple":
                return False, f"n={n}: {typical} should be simple"
    return True, "n = 2..8"


SWEEP_CONSTANTS = {(2, 1): 2, (2, 2): 2, (3, 1): 3}


def check_characters():
    for n in range(0, 5):
        for m in range(0, 5):
            for a in range(0, 9):
                row = characters.hook_multiplicities((a,) if a else (), n, m)
                if row.total != characters.super_sym_dim(a, n, m) or row.max_multiplicity > 1:
                    return False, f"row a={a} n={n} m={m}"
                col = characters.hook_multiplicities((1,) * a, n, m)
                if col.total != characters.super_ext_dim(a, n, m):
                    return False, f"column a={a} n={n} m={m}"
    for mu, const in SWEEP_CONSTANTS.items():
        sweep = characters.max_multiplicity_sweep(mu, range(2, 9), 1)
        if sweep[-4:] != [const] * 4:
            return False, f"sweep {mu}: {sweep}"
    return True, "rows, columns and sweeps"


def check_q_rules():
    q = rootsys.parse_algebra("q")
    for bad in ((2, 2), (3, 3, 1), (1, 1)):
        try:
            catalog.FamilySpec("Qpart", q, partition=bad)
            return False, f"accepted non-strict {bad}"
        except BadPartition:
            pass
    strict = [p for t in range(1, 9) for p in partitions(t) if all(x > y for x, y in zip(p, p[1:]))]
    for gamma in strict:
        for kind in catalog.Q_KINDS:
            f = catalog.FamilySpec(kind, q, partition=gamma)
            if catalog.isomorphic(f, f.pi()) != (len(gamma) % 2 == 1):
                return False, f"Pi rule for {gamma}"
    rng = random.Random(3)
    for _ in range(20):
        marks = [rng.choice([0, 0, 1, 2, -3]) for _ in range(rng.randint(0, 9))]
        k = sum(1 for v in marks if v)
        if catalog.q_hw_space_dim(Weight([], marks)) != 1 << (k >> 1):
            return False, f"dimension for {marks}"
    return True, f"{len(strict)} strict partitions, 20 dimension cases"


def clause_positive_roots(fam, b):
    """Positive roots written out clause by clause, independently of the functional used in rootsys."""
    pos = {s: i for i, s in enumerate(b.slots)}
    sg = b.sign_map or {s: 1 for s in b.slots}
    all_roots = {r.terms: r for r in rootsys.roots(fam, b.n_delta, b.n_eps)}
    out, hit = set(), set()

    def add(terms, clause):
        key = rootsys.Root(terms).terms
        if key in all_roots:
            out.add(all_roots[key])
            hit.add(clause)

    for x, y in itertools.permutations(b.slots, 2):
        kinds = x[0] + y[0]
        if pos[x] < pos[y]:
            add({x: sg[x], y: -sg[y]}, "minus:" + kinds)
        if fam.needs_sign:
            add({x: sg[x], y: sg[y]}, "plus:" + kinds)
    if fam.needs_sign:
        for x in b.slots:
            add({x: sg[x]}, "short:" + x[0])
            if fam.kind != "p" or sg[x] == 1:
                add({x: 2 * sg[x]}, "long:" + x[0])
    return frozenset(out), hit


def _orders(fam, nd, ne):
    slots = [("d", i) for i in range(1, nd + 1)] + [("e", j) for j in range(1, ne + 1)]
    for perm in itertools.permutations(slots):
        if not fam.needs_sign:
            yield rootsys.BorelSeq(perm)
            continue
        for signs in itertools.product((1, -1), repeat=len(perm)):
            sg = dict(zip(perm, signs))
            if fam.kind == "ospD" and perm[-1][0] == "d" and sg[perm[-1]] != 1:
                continue
            yield rootsys.BorelSeq(perm, sg)


def check_roots():
    ob = rootsys.parse_algebra("ospB")
    rs = rootsys.roots(ob, 1, 1)
    odd = sum(1 for r in rs if r.parity == Parity.ODD)
    if (len(rs), len(rs) - odd, odd) != (10, 4, 6):
        return False, f"ospB(1,1): {len(rs)} roots, split {len(rs) - odd}|{odd}"
    p = rootsys.parse_algebra("p")
    pr = {r.terms for r in rootsys.roots(p, 0, 3)}
    for i in range(1, 4):
        if ((("e", i), 2),) not in pr or ((("e", i), -2),) in pr:
            return False, "p-type long roots"
    cases = [("sl", 2, 2), ("sl:2", 2, 2), ("q", 0, 3), ("p", 0, 3), ("ospB", 1, 2), ("ospB", 2, 1),
             ("ospC", 1, 2), ("ospD", 2, 1), ("ospD", 1, 2)]
    clauses = set()
    for tag, nd, ne in cases:
        fam = rootsys.parse_algebra(tag)
        for b in _orders(fam, nd, ne):
            want, hit = clause_positive_roots(fam, b)
            got = rootsys.positive_roots(fam, b)
            if got != want:
                return False, f"{tag} order {b} sign {b.sign}: clause mismatch"
            neg = {(-r).terms for r in got}
            if neg & {r.terms for r in got}:
                return False, f"{tag}: a root and its negative are both positive"
            clauses |= {(fam.kind, c) for c in hit}
    expected = {("sl", "minus:dd"), ("sl", "minus:ee"), ("sl", "minus:de"), ("sl", "minus:ed"),
                ("q", "minus:ee"), ("p", "minus:ee"), ("p", "plus:ee"), ("p", "long:e"),
                ("ospB", "short:d"), ("ospB", "short:e"), ("ospB", "long:e"), ("ospB", "plus:de"),
                ("ospB", "minus:de"), ("ospB", "minus:ed"), ("ospB", "plus:dd"), ("ospB", "plus:ee"),
                ("ospC", "long:e"), ("ospC", "plus:de"), ("ospC", "minus:ed"), ("ospC", "plus:ee"),
                ("ospD", "plus:dd"), ("ospD", "minus:dd"), ("ospD", "plus:de"), ("ospD", "long:e")}
    missing = expected - clauses
    if missing:
        return False, f"clauses never exercised: {sorted(missing)}"
    return True, f"{len(clauses)} clause kinds exercised"


CRITERIA = [
    (1, "diagrams", "diagram bijection on random dominant weights", check_diagram_bijection),
    (2, "diagrams", "three-step chain of unique legal moves", check_example_chain),
    (3, "oddref", "closed-form tables agree with odd reflections", check_omega_grid),
    (4, "blocks", "no move image is a central shift of a catalog weight", check_no_collision),
    (5, "blocks", "single nontrivial block for sl(inf|1)", check_block),
    (6, "blocks", "Kac module structure over gl(n|1)", check_kac),
    (7, "characters", "tableau totals and multiplicity sweeps", check_characters),
    (8, "catalog", "q-type rules", check_q_rules),
    (9, "rootsys", "root system sanity", check_roots),
]


def run(only=None, out=print) -> bool:
    ok = True
    for num, module, title, fn in CRITERIA:
        if only and module not in only and str(num) not in only:
            continue
        try:
            passed, detail = fn()
        except Exception as exc:  # report and keep going
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        ok &= passed
        out(f"[{'PASS' if passed else 'FAIL'}] {num}. {title} ({module}): {detail}")
    return ok
