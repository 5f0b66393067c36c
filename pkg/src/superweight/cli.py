"""Command line entry point: ``superweight <command> ...``.

Exit status 0 on success, 2 on usage errors, 1 on domain errors (the error
class name and message go to standard error).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from . import acceptance, blocks, catalog, characters, diagrams, oddref, rootsys
from .errors import ParseError, ShapeMismatch, SuperweightError, UsageError
from .weights import (ShiftedWeight, Weight, c_of, central_shift, central_shift_between, format_rational,
                      format_weight, pairing, parse_rational, parse_weight, rational_json, rho, shift,
                      unshift, weight_json)

SCHEMA = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, text: str, payload: dict):
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    elif text:
        print(text)


def _nm(text: str):
    try:
        n, m = (int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"--nm wants n,m, got {text!r}") from None
    if n < 0 or m < 0:
        raise ParseError("ranks must be nonnegative")
    return n, m


def _ints(text: str) -> list:
    try:
        return [int(t) for t in text.split(",")] if text.strip() else []
    except ValueError:
        raise ParseError(f"expected a comma list of integers, got {text!r}") from None


def _weight(text: str, nm=None) -> Weight:
    w = parse_weight(text)
    if nm is not None and w.shape != nm:
        raise ShapeMismatch(f"weight {text} has shape {w.shape}, --nm says {nm}")
    return w


def _root(text: str) -> rootsys.Root:
    t = text.replace(" ", "")
    terms = re.findall(r"([+-]?)(\d*)([de])(\d+)", t)
    if not terms or "".join("".join(x) for x in terms) != t:
        raise ParseError(f"bad root {text!r}; use e.g. d2-e1 or 2e1")
    coeffs = {}
    for sign, mag, kind, idx in terms:
        c = int(mag or 1) * (-1 if sign == "-" else 1)
        coeffs[(kind, int(idx))] = coeffs.get((kind, int(idx)), 0) + c
    return rootsys.Root(coeffs)


def _algebra(args):
    return rootsys.parse_algebra(getattr(args, "algebra", None) or "sl:1")


def _family(text, args):
    return catalog.parse_family(text, _algebra(args))


def _root_json(r):
    return {"root": str(r), "parity": str(r.parity), "both_parities": r.both_parities}


def _root_line(r):
    return f"{r} {'even+odd' if r.both_parities else r.parity}"


# commands

def cmd_roots(args):
    fam = rootsys.parse_algebra(args.family)
    fixed = fam.fixed_rank or (None, None)
    nd = args.nd if args.nd is not None else (fixed[1] if fixed[0] == "d" else 0)
    ne = args.ne if args.ne is not None else (fixed[1] if fixed[0] == "e" else 0)
    rs = rootsys.sorted_roots(rootsys.roots(fam, nd, ne))
    _emit(args, "\n".join(map(_root_line, rs)) or "(none)",
          {"algebra": fam.tag, "n_delta": nd, "n_eps": ne, "roots": [_root_json(r) for r in rs]})


def cmd_positive_roots(args):
    fam = rootsys.parse_algebra(args.family)
    b = rootsys.parse_borel(args.order, args.sign)
    rs = rootsys.sorted_roots(rootsys.positive_roots(fam, b))
    _emit(args, "\n".join(map(_root_line, rs)) or "(none)",
          {"algebra": fam.tag, "order": str(b), "roots": [_root_json(r) for r in rs]})


def cmd_diagram(args):
    f = diagrams.diagram_of(_weight(args.weight, _nm(args.nm)))
    _emit(args, f.render(), {"diagram": f.to_json()})


def cmd_legal_moves(args):
    n, m = _nm(args.nm)
    f = diagrams.diagram_of(_weight(args.weight, (n, m)))
    moves = diagrams.legal_moves(f)
    lines = [f"x {mv.a} -> {mv.b}: {format_weight(diagrams.weight_of(mv.result, n, m))}" for mv in moves]
    _emit(args, "\n".join(lines) or "(none)",
          {"moves": [{**mv.to_json(), "weight": weight_json(diagrams.weight_of(mv.result, n, m))} for mv in moves]})


def cmd_unique_move(args):
    n, m = _nm(args.nm)
    mv = blocks.unique_legal_move(diagrams.diagram_of(_weight(args.weight, (n, m))))
    if mv is None:
        _emit(args, "(none)", {"move": None})
        return
    w = diagrams.weight_of(mv.result, n, m)
    _emit(args, f"x {mv.a} -> {mv.b}: {format_weight(w)}", {"move": {**mv.to_json(), "weight": weight_json(w)}})


def cmd_ext1(args):
    nm = _nm(args.nm)
    v, w = _weight(args.v, nm), _weight(args.w, nm)
    res = diagrams.ext1_nonzero(v, w, align_central=args.align_central)
    _emit(args, "true" if res else "false", {"ext1_nonzero": res})


def cmd_atypicality(args):
    k = diagrams.atypicality(diagrams.diagram_of(_weight(args.weight, _nm(args.nm))))
    _emit(args, str(k), {"atypicality": k})


def cmd_odd_reflect(args):
    w = parse_weight(args.weight)
    b = rootsys.parse_borel(args.borel, nm=w.shape)
    s = oddref.odd_reflect(oddref.HighestWeightState(w, b), args.pos)
    _emit(args, f"{format_weight(s.weight)} borel {s.borel} parity {s.parity}",
          {"weight": weight_json(s.weight), "borel": str(s.borel), "parity": str(s.parity)})


def cmd_transport(args):
    nm = _nm(args.nm)
    w = _weight(args.weight, nm)
    frm = rootsys.parse_borel(getattr(args, "from"), nm=nm)
    to = rootsys.parse_borel(args.to, nm=nm)
    rng = random.Random(args.seed) if args.seed is not None else None
    out, parity = oddref.transport(w, frm, to, rng)
    _emit(args, f"{format_weight(out)} parity {parity}", {"weight": weight_json(out), "parity": str(parity)})


def cmd_omega(args):
    if oddref.OMEGA_KINDS.get(args.kind, args.kind) == "O6":
        if args.mu is None:
            raise ParseError("O6 needs --mu")
        param = tuple(_ints(args.mu))
    else:
        if args.a is None:
            raise ParseError(f"{args.kind} needs --a")
        param = args.a
    w = oddref.omega_table(args.kind, args.n, args.x, param)
    _emit(args, format_weight(w), {"weight": weight_json(w)})


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise ParseError(f"--op {args.op} needs --{name}")


WEIGHT_OP_ARGS = {"rho": ("nm",), "shift": ("weight",), "unshift": ("a", "b"), "central-shift": ("weight", "c"),
                  "between": ("weight", "other"), "pairing": ("weight", "root"), "c-of": ("weight",)}


def cmd_weight(args):
    op = args.op
    _need(args, *WEIGHT_OP_ARGS[op])
    if op == "rho":
        n, m = _nm(args.nm)
        w = rho(n, m)
        _emit(args, format_weight(w), {"weight": weight_json(w)})
    elif op == "shift":
        s = shift(parse_weight(args.weight))
        _emit(args, f"a=({','.join(map(str, s.a))}) b=({','.join(map(str, s.b))}) "
                    f"{'dominant' if s.dominant else 'not dominant'}",
              {"a": list(s.a), "b": list(s.b), "dominant": s.dominant})
    elif op == "unshift":
        w = unshift(ShiftedWeight(_ints(args.a), _ints(args.b)))
        _emit(args, format_weight(w), {"weight": weight_json(w)})
    elif op == "central-shift":
        w = central_shift(parse_weight(args.weight), parse_rational(args.c))
        _emit(args, format_weight(w), {"weight": weight_json(w)})
    elif op == "between":
        c = central_shift_between(parse_weight(args.weight), parse_weight(args.other))
        _emit(args, "none" if c is None else format_rational(c), {"c": None if c is None else rational_json(c)})
    elif op == "pairing":
        v = pairing(parse_weight(args.weight), _root(args.root))
        _emit(args, format_rational(v), {"pairing": rational_json(v)})
    elif op == "c-of":
        v = c_of(parse_weight(args.weight))
        _emit(args, format_rational(v), {"c": rational_json(v)})


def cmd_natural(args):
    fam = rootsys.parse_algebra(args.family)
    w = parse_weight(args.weight)
    member = rootsys.natural_support(fam)(w)
    par = rootsys.natural_parity(fam, w)
    _emit(args, ("member" if member else "not member") + (" " + "+".join(map(str, par)) if par else ""),
          {"member": member, "parities": [str(p) for p in par]})


def _fw_payload(fw):
    return {"weight": weight_json(fw.weight), "borel": str(fw.borel), "parity": str(fw.parity)}


def cmd_hw(args):
    f = _family(args.family, args)
    fw = catalog.b_lt_highest_weight(f, args.n) if args.b_lt else catalog.family_highest_weight(f, args.n)
    _emit(args, f"{format_weight(fw.weight)} borel {fw.borel} parity {fw.parity}", _fw_payload(fw))


_SUPPORT_ALIASES = {"spinorB": "spinor_B", "spinorD": "spinor_D", "Lambda": "exterior", "S": "sym", "S*": "sym_dual",
                    "Smu": "schur", "Smu*": "schur_dual"}


def _support_set(text: str, args) -> catalog.SupportSet:
    kind, _, body = text.partition(":")
    kind = _SUPPORT_ALIASES.get(kind, kind)
    if kind in ("schur", "schur_dual"):
        return catalog.SupportSet(kind, tuple(catalog.check_partition(_ints(body))))
    if kind in ("exterior", "spinor_B", "spinor_D"):
        fam = catalog.parse_family(f"LhalfV[{body}]", rootsys.parse_algebra("sl"))
        return catalog.SupportSet(kind, fam.subset)
    if kind in ("sym", "sym_dual"):
        fam = catalog.parse_family(f"SinfV[{body}]", rootsys.parse_algebra("sl"))
        return catalog.SupportSet(kind, fam.seq)
    if kind == "natural":
        return catalog.SupportSet(kind, rootsys.parse_algebra(body))
    if kind == "singleton":
        return catalog.SupportSet(kind, parse_weight(body))
    raise ParseError(f"unknown support kind {kind!r}")


def cmd_support(args):
    if (args.set is None) == (args.family is None):
        raise ParseError("give exactly one of --set or --family")
    s = _support_set(args.set, args) if args.set else catalog.support_of(_family(args.family, args))
    w = parse_weight(args.weight) if args.weight.strip().startswith("(") else \
        [parse_rational(t) for t in args.weight.split(",") if t.strip()]
    res = catalog.support_contains(s, w)
    _emit(args, "true" if res else "false", {"contains": res})


def cmd_iso(args):
    res = catalog.isomorphic(_family(args.f, args), _family(args.g, args))
    _emit(args, "true" if res else "false", {"isomorphic": res})


def cmd_dual(args):
    d = catalog.dual_family(_family(args.family, args))
    _emit(args, str(d), {"family": str(d)})


def cmd_classify(args):
    alg = _algebra(args)
    entries = catalog.classify_bounded(alg)
    lines = [("Pi " if e.twist else "") + e.kind + (f" [{e.parameters}]" if e.parameters else "")
             + (f" ({e.note})" if e.note else "") for e in entries]
    _emit(args, "\n".join(lines), {"algebra": alg.tag, "families": [
        {"kind": e.kind, "twist": str(e.twist), "parameters": e.parameters, "note": e.note} for e in entries]})


def cmd_hw_borel(args):
    res = catalog.hw_borel_condition(_family(args.family, args), args.order)
    _emit(args, "true" if res else "false", {"highest_weight": res})


def cmd_shape(args):
    w = parse_weight(args.weight)
    res = catalog.validate_singular_shape(args.case, w, w.n, w.m)
    _emit(args, "true" if res else "false", {"matches": res})


def cmd_qdim(args):
    d = catalog.q_hw_space_dim(parse_weight(args.weight))
    _emit(args, str(d), {"dim": d})


def cmd_extend_gl(args):
    v = catalog.extend_to_gl([parse_rational(t) for t in args.beta.split(",") if t.strip()], parse_rational(args.c))
    _emit(args, format_rational(v), {"value": rational_json(v)})


def cmd_dim(args):
    n, m = _nm(args.nm)
    if (args.sym is None) == (args.ext is None):
        raise ParseError("give exactly one of --sym or --ext")
    d = characters.super_sym_dim(args.sym, n, m) if args.sym is not None else characters.super_ext_dim(args.ext, n, m)
    _emit(args, str(d), {"dim": d})


def cmd_schur_mult(args):
    n, m = _nm(args.nm)
    t = characters.hook_multiplicities(_ints(args.mu), n, m)
    rows = sorted(t.entries.items(), key=lambda kv: (kv[0].left, kv[0].right), reverse=True)
    lines = [f"{format_weight(w)} {k}" for w, k in rows] + [f"total {t.total_dim[0]}|{t.total_dim[1]}"]
    _emit(args, "\n".join(lines), {"entries": [{"weight": weight_json(w), "mult": k} for w, k in rows],
                                   "total_dim": list(t.total_dim)})


def cmd_sweep(args):
    ns = blocks.parse_window(args.n)
    vals = characters.max_multiplicity_sweep(_ints(args.mu), ns, args.m)
    _emit(args, " ".join(f"{n}:{v}" for n, v in zip(ns, vals)), {"n": list(ns), "max": vals})


def cmd_kac(args):
    k = blocks.kac_structure(parse_weight(args.weight), args.n)
    if k.verdict == "simple":
        _emit(args, "simple", {"verdict": "simple"})
    else:
        _emit(args, f"length2 socle {format_weight(k.socle_hw)} parity {k.parity_twist}",
              {"verdict": k.verdict, "socle": weight_json(k.socle_hw), "parity": str(k.parity_twist)})


def cmd_ext1_cat(args):
    r = blocks.ext1_dim(_family(args.f, args), _family(args.g, args), blocks.parse_window(args.window))
    per = [{"n": c.n, "related": c.related, "direction": c.direction,
            "twist": None if c.twist is None else str(c.twist)} for c in r.per_rank]
    twist = "-" if r.twist is None else str(r.twist)
    text = f"{r.dim} twist {twist}"
    if r.dim and r.twist is None:
        text += " per-rank " + " ".join(f"{c.n}:{c.twist}" for c in r.per_rank)
    _emit(args, text, {"dim": r.dim, "twist": None if r.twist is None else str(r.twist), "per_rank": per,
                       "reason": r.reason})


def read_nodes(path: str) -> list:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if line:
                out.append(line)
    return out


def cmd_blocks(args):
    alg = _algebra(args)
    nodes = [catalog.parse_family(s, alg) for s in read_nodes(args.nodes_file)]
    g = blocks.block_graph(nodes, blocks.parse_window(args.window))
    names = [str(f) for f in g.nodes]
    lines = ["{" + ", ".join(names[i] for i in comp) + "}" for comp in g.components]
    lines += [f"edge {names[i]} -- {names[j]} twist {'-' if t is None else t}" for i, j, t in g.edges]
    _emit(args, "\n".join(lines), {"nodes": names, "components": [[names[i] for i in c] for c in g.components],
                                   "edges": [{"a": names[i], "b": names[j], "twist": None if t is None else str(t)}
                                             for i, j, t in g.edges]})


def cmd_selftest(args):
    only = set(args.only.split(",")) if args.only else None
    lines = []
    ok = acceptance.run(only, out=lines.append)
    print("\n".join(lines))
    return 0 if ok else 1


# which subcommand reaches each library operation
OPERATION_COMMANDS = {
    "rho": "weight", "shift": "weight", "unshift": "weight", "central_shift": "weight",
    "central_shift_between": "weight", "pairing": "weight", "c_of": "weight",
    "roots": "roots", "positive_roots": "positive-roots", "natural_support": "natural",
    "diagram_of": "diagram", "weight_of": "legal-moves", "atypicality": "atypicality", "l_count": "legal-moves",
    "legal_moves": "legal-moves", "ext1_nonzero": "ext1",
    "odd_reflect": "odd-reflect", "transport": "transport", "omega_table": "omega",
    "family_highest_weight": "hw", "support_contains": "support", "isomorphic": "iso",
    "hw_borel_condition": "hw-borel", "classify_bounded": "classify", "validate_singular_shape": "shape",
    "extend_to_gl": "extend-gl", "q_hw_space_dim": "qdim", "dual_family": "dual",
    "super_sym_dim": "dim", "super_ext_dim": "dim", "hook_multiplicities": "schur-mult",
    "max_multiplicity_sweep": "sweep",
    "unique_legal_move": "unique-move", "kac_structure": "kac", "ext1_dim": "ext1-cat", "block_graph": "blocks",
    "run": "selftest", "selftest": "selftest",
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superweight", description="Weight combinatorics for Lie superalgebras at infinity.")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)
    sub.required = True

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("roots", cmd_roots, "list the roots of a finite truncation")
    sp.add_argument("--family", required=True)
    sp.add_argument("--nd", type=int)
    sp.add_argument("--ne", type=int)

    sp = add("positive-roots", cmd_positive_roots, "positive roots of the Borel given by an order")
    sp.add_argument("--family", required=True)
    sp.add_argument("--order", required=True, help='slots first to last, e.g. "d2,d1,e1"')
    sp.add_argument("--sign", help='signs per slot, e.g. "+,-,+"')

    sp = add("natural", cmd_natural, "natural-module support membership and parity")
    sp.add_argument("--family", required=True)
    sp.add_argument("--weight", required=True)

    sp = add("weight", cmd_weight, "weight arithmetic: rho, shift, unshift, central shifts, pairing, c")
    sp.add_argument("--op", required=True,
                    choices=["rho", "shift", "unshift", "central-shift", "between", "pairing", "c-of"])
    sp.add_argument("--weight")
    sp.add_argument("--other")
    sp.add_argument("--nm")
    sp.add_argument("--a")
    sp.add_argument("--b")
    sp.add_argument("--c")
    sp.add_argument("--root")

    for name, fn, text in (("diagram", cmd_diagram, "draw the weight diagram"),
                           ("legal-moves", cmd_legal_moves, "legal moves of weight zero"),
                           ("unique-move", cmd_unique_move, "the unique legal move, if any"),
                           ("atypicality", cmd_atypicality, "number of crosses")):
        sp = add(name, fn, text)
        sp.add_argument("weight")
        sp.add_argument("--nm", required=True)

    sp = add("ext1", cmd_ext1, "does a single legal move relate the two diagrams")
    sp.add_argument("v")
    sp.add_argument("w")
    sp.add_argument("--nm", required=True)
    sp.add_argument("--align-central", action="store_true")

    sp = add("odd-reflect", cmd_odd_reflect, "apply one odd reflection")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--borel", required=True)
    sp.add_argument("--pos", type=int, required=True)

    sp = add("transport", cmd_transport, "move a highest weight between Borels")
    sp.add_argument("--from", required=True)
    sp.add_argument("--to", required=True)
    sp.add_argument("--nm", required=True)
    sp.add_argument("--weight", required=True)
    sp.add_argument("--seed", type=int, help="draw a random shortest swap sequence")

    sp = add("omega", cmd_omega, "closed-form b(<) highest weights (O2, O3, O6)")
    sp.add_argument("--kind", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--a", type=int)
    sp.add_argument("--mu")

    def fam_cmd(name, fn, text):
        sp = add(name, fn, text)
        sp.add_argument("--algebra", default="sl:1")
        return sp

    sp = fam_cmd("hw", cmd_hw, "highest weight of a catalog family at rank n")
    sp.add_argument("--family", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--b-lt", action="store_true", help="move the result to the standard Borel")

    sp = fam_cmd("support", cmd_support, "support membership")
    sp.add_argument("--set")
    sp.add_argument("--family")
    sp.add_argument("--weight", required=True)

    sp = fam_cmd("iso", cmd_iso, "isomorphism test")
    sp.add_argument("f")
    sp.add_argument("g")

    sp = fam_cmd("dual", cmd_dual, "restricted dual of a family")
    sp.add_argument("family")

    fam_cmd("classify", cmd_classify, "bounded integrable simple families")

    sp = fam_cmd("hw-borel", cmd_hw_borel, "is the family highest weight for the order")
    sp.add_argument("--family", required=True)
    sp.add_argument("--order", required=True, help='buckets like "1,2,3|rest" or "evens|odds"')

    sp = add("shape", cmd_shape, "check a singular weight against cases a-e")
    sp.add_argument("--case", required=True, choices=list("abcde"))
    sp.add_argument("--weight", required=True)

    sp = add("qdim", cmd_qdim, "dimension of the q-type highest weight space")
    sp.add_argument("--weight", required=True)

    sp = add("extend-gl", cmd_extend_gl, "E11 value of lambda + beta")
    sp.add_argument("--beta", required=True)
    sp.add_argument("--c", required=True)

    sp = add("dim", cmd_dim, "dimension of super symmetric or exterior powers")
    sp.add_argument("--sym", type=int)
    sp.add_argument("--ext", type=int)
    sp.add_argument("--nm", required=True)

    sp = add("schur-mult", cmd_schur_mult, "hook tableau weight multiplicities")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--nm", required=True)

    sp = add("sweep", cmd_sweep, "maximal multiplicity per rank")
    sp.add_argument("--mu", required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", required=True, help="range like 2..8")

    sp = add("kac", cmd_kac, "structure of the Kac module over gl(n|1)")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = fam_cmd("ext1-cat", cmd_ext1_cat, "Ext1 dimension between catalog families")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--window", required=True)

    sp = fam_cmd("blocks", cmd_blocks, "block graph of a node list")
    sp.add_argument("--nodes-file", required=True)
    sp.add_argument("--window", required=True)

    sp = add("selftest", cmd_selftest, "run the acceptance checks")
    sp.add_argument("--only", help="comma list of modules or criterion numbers")
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args) or 0
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SuperweightError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
