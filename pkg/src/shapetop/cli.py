"""Command-line front end.

Exit codes: 0 success or a true verdict, 1 a false verdict, 2 usage or
parse errors, 3 semantic errors (kind mismatch, budget exceeded, ...).
"""
from __future__ import annotations

import argparse
import os
import sys

from . import formats as fmt
from .connectedness import find_separation, is_totally_disconnected, report
from .errors import ParseError, ShapeTopError
from .mappings import is_continuous, image, preimage
from .oracles import brute_preimage
from .shape import part_of
from .space import check_isomorphism, star_topology
from .topology import (DEFAULT_MAX_OPENS, classify_part, compare,
                       generate_topology, is_topology, reduce_basis, refine,
                       subshape_topology)

OK, FALSE, USAGE, SEMANTIC = 0, 1, 2, 3


class _Usage(Exception):
    pass


def _max_opens():
    raw = os.environ.get("SHAPETOP_MAX_OPENS")
    if raw is None:
        return DEFAULT_MAX_OPENS
    try:
        value = int(raw)
    except ValueError:
        raise _Usage(f"SHAPETOP_MAX_OPENS must be an integer, got {raw!r}") from None
    if value < 2:
        raise _Usage("SHAPETOP_MAX_OPENS must be at least 2")
    return value


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _ref(target, out):
    # path of `target` as seen from the directory the output will live in
    base = os.path.dirname(os.path.abspath(out)) if out else os.getcwd()
    return os.path.relpath(os.path.abspath(target), base)


def _read_topology_raw(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return fmt.parse_topology(text, path, os.path.dirname(path) or ".")


# -- verbs -----------------------------------------------------------------

def cmd_normalize(a):
    return fmt.format_shape(fmt.read_shape(a.file)), OK


def cmd_alg(a):
    x, y = fmt.read_shape(a.a), fmt.read_shape(a.b)
    if a.op == "partof":
        verdict = part_of(x, y)
        return _flag(verdict) + "\n", OK if verdict else FALSE
    result = {"sum": lambda: x + y, "product": lambda: x * y, "diff": lambda: x - y}[a.op]()
    return fmt.format_shape(result), OK


def cmd_topo_gen(a):
    parts = fmt.read_parts(a.parts)
    carrier = fmt.read_shape(a.carrier)
    t = generate_topology(parts.values(), carrier, add_carrier=a.add_carrier,
                          max_opens=_max_opens())
    return fmt.format_topology(t, _ref(a.carrier, a.output)), OK


def cmd_topo_refine(a):
    t = fmt.read_topology(a.topology)
    parts = fmt.read_parts(a.parts)
    r = refine(t, parts.values(), max_opens=_max_opens())
    return fmt.format_topology(r), OK


def cmd_topo_check(a):
    carrier, opens = _read_topology_raw(a.topology)
    verdict = is_topology(opens, carrier)
    if verdict:
        return f"topology: true\nopens: {len(set(opens))}\n", OK
    return f"topology: false\nviolation: {verdict.reason}\n", FALSE


def cmd_topo_reduce(a):
    b = reduce_basis(fmt.read_topology(a.topology))
    return fmt.format_parts(fmt.basis_parts(b)), OK


def cmd_topo_compare(a):
    verdict = compare(fmt.read_topology(a.first), fmt.read_topology(a.second))
    return verdict.value + "\n", OK


def cmd_topo_sub(a):
    t = fmt.read_topology(a.topology)
    x = fmt.read_shape(a.part)
    return fmt.format_topology(subshape_topology(t, x), _ref(a.part, a.output)), OK


def cmd_topo_classify(a):
    t = fmt.read_topology(a.topology)
    c = classify_part(fmt.read_shape(a.part), t)
    lines = [f"open: {_flag(c.open)}", f"closed: {_flag(c.closed)}",
             f"clopen: {_flag(c.clopen)}", f"dense: {_flag(c.dense)}",
             f"interior: {fmt.inline_text(c.interior)}",
             f"closure: {fmt.inline_text(c.closure)}"]
    return "\n".join(lines) + "\n", OK


def cmd_topo_dot(a):
    return fmt.topology_dot(fmt.read_topology(a.topology)), OK


def cmd_space_build(a):
    t = fmt.read_topology(a.topology)
    st = star_topology(t)
    if a.dot:
        return fmt.space_dot(st), OK
    return fmt.format_space(st, t.carrier.kind), OK


def cmd_space_check(a):
    t = fmt.read_topology(a.topology)
    verdict = check_isomorphism(t, star_topology(t))
    text = f"isomorphic: {_flag(verdict.ok)}\n"
    if not verdict:
        text += f"witness: {verdict.reason}\n"
    return text, OK if verdict else FALSE


def cmd_map_image(a):
    f = fmt.read_mapping(a.mapping)
    return fmt.format_shape(image(f, fmt.read_shape(a.part))), OK


def _preimage_output(r):
    if not r.defined:
        return "undefined\n", FALSE
    return fmt.format_shape(r.shape), OK


def cmd_map_preimage(a):
    f = fmt.read_mapping(a.mapping)
    return _preimage_output(preimage(f, fmt.read_shape(a.part), fmt.read_shape(a.domain)))


def cmd_oracle_preimage(a):
    f = fmt.read_mapping(a.mapping)
    return _preimage_output(brute_preimage(f, fmt.read_shape(a.part), fmt.read_shape(a.domain)))


def cmd_map_continuous(a):
    f = fmt.read_mapping(a.mapping)
    source = fmt.read_topology(a.source)
    target = fmt.read_topology(a.target)
    rep = is_continuous(f, source, target)
    lines = [f"continuous: {_flag(rep.continuous)}"]
    if rep.witness:
        lines.append(f"witness: {rep.witness}")
    lines.append(f"injective: {_flag(rep.injective)}")
    for i, (d, r) in enumerate(rep.table):
        shown = fmt.inline_text(r.shape) if r.defined else "undefined"
        lines.append(f"f* o{i} {fmt.inline_text(d)} -> {shown}")
    return "\n".join(lines) + "\n", OK if rep else FALSE


def cmd_conn_report(a):
    s = fmt.read_shape(a.shape)
    t = fmt.read_topology(a.topology)
    rep = report(s, t)
    if a.dot:
        marked = rep.witness if rep.witness else ()
        return fmt.topology_dot(t, highlight=marked), OK
    lines = [f"structurally_connected: {_flag(rep.structurally_connected)}",
             f"visually_connected: {_flag(rep.visually_connected)}",
             f"locally_connected: {_flag(rep.locally_connected)}",
             f"totally_disconnected: {_flag(rep.totally_disconnected)}"]
    if rep.witness:
        lines.append(f"separation: {fmt.inline_text(rep.witness.c)} | "
                     f"{fmt.inline_text(rep.witness.d)}")
    return "\n".join(lines) + "\n", OK


def cmd_conn_totally(a):
    t = fmt.read_topology(a.topology)
    rep = is_totally_disconnected(t)
    lines = [f"disconnected_with_only_basis_connected: {_flag(rep.definition)}",
             f"reduced_basis_disjoint: {_flag(rep.disjoint_basis)}",
             f"all_clopen: {_flag(rep.all_clopen)}",
             f"boolean_algebra: {_flag(rep.boolean)}",
             f"conditions_agree: {_flag(rep.agree)}"]
    sep = find_separation(t)
    if sep:
        lines.append(f"separation: {fmt.inline_text(sep.c)} | {fmt.inline_text(sep.d)}")
    return "\n".join(lines) + "\n", OK if rep.definition else FALSE


# -- argument parsing ------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shapetop",
                                description="Finite topologies on shapes without points.")
    verbs = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    def leaf(group, name, func, help, output=True):
        sp = group.add_parser(name, help=help)
        sp.set_defaults(func=func)
        if output:
            sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        return sp

    sp = leaf(verbs, "normalize", cmd_normalize, "print a shape in canonical maximal form")
    sp.add_argument("file")

    sp = leaf(verbs, "alg", cmd_alg, "sum, product, difference or part test of two shapes")
    sp.add_argument("op", choices=["sum", "product", "diff", "partof"])
    sp.add_argument("a")
    sp.add_argument("b")

    topo = verbs.add_parser("topo", help="topologies on a shape").add_subparsers(
        dest="sub", required=True, metavar="SUBVERB")
    sp = leaf(topo, "gen", cmd_topo_gen, "generate a topology from named parts")
    sp.add_argument("parts")
    sp.add_argument("--carrier", required=True)
    sp.add_argument("--add-carrier", action="store_true",
                    help="add the carrier as a generator when the parts do not exhaust it")
    sp = leaf(topo, "refine", cmd_topo_refine, "refine a topology by new parts")
    sp.add_argument("topology")
    sp.add_argument("parts")
    sp = leaf(topo, "check", cmd_topo_check, "check the topology conditions")
    sp.add_argument("topology")
    sp = leaf(topo, "reduce", cmd_topo_reduce, "print the reduced basis")
    sp.add_argument("topology")
    sp = leaf(topo, "compare", cmd_topo_compare, "finer / coarser / equal / incomparable")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = leaf(topo, "sub", cmd_topo_sub, "subshape topology on a part")
    sp.add_argument("topology")
    sp.add_argument("part")
    sp = leaf(topo, "classify", cmd_topo_classify, "open/closed/clopen/dense, interior, closure")
    sp.add_argument("topology")
    sp.add_argument("part")
    sp = leaf(topo, "dot", cmd_topo_dot, "Hasse diagram of the open parts")
    sp.add_argument("topology")

    space = verbs.add_parser("space", help="the space of a shape").add_subparsers(
        dest="sub", required=True, metavar="SUBVERB")
    sp = leaf(space, "build", cmd_space_build, "points and open sets of the space")
    sp.add_argument("topology")
    sp.add_argument("--dot", action="store_true")
    sp = leaf(space, "check", cmd_space_check, "check the isomorphism with the topology")
    sp.add_argument("topology")

    mp = verbs.add_parser("map", help="mappings between shapes").add_subparsers(
        dest="sub", required=True, metavar="SUBVERB")
    sp = leaf(mp, "image", cmd_map_image, "image of a part")
    sp.add_argument("mapping")
    sp.add_argument("part")
    sp = leaf(mp, "preimage", cmd_map_preimage, "largest part whose image embeds in a part")
    sp.add_argument("mapping")
    sp.add_argument("part")
    sp.add_argument("--domain", required=True)
    sp = leaf(mp, "continuous", cmd_map_continuous, "continuity verdict and pullback table")
    sp.add_argument("mapping")
    sp.add_argument("source")
    sp.add_argument("target")

    conn = verbs.add_parser("conn", help="connectedness").add_subparsers(
        dest="sub", required=True, metavar="SUBVERB")
    sp = leaf(conn, "report", cmd_conn_report, "visual and structural connectedness")
    sp.add_argument("shape")
    sp.add_argument("topology")
    sp.add_argument("--dot", action="store_true", help="Hasse diagram with the separation marked")
    sp = leaf(conn, "totally", cmd_conn_totally, "the totally-disconnected conditions")
    sp.add_argument("topology")

    oracle = verbs.add_parser("oracle").add_subparsers(dest="sub", required=True)
    sp = leaf(oracle, "preimage", cmd_oracle_preimage, "brute-force preimage")
    sp.add_argument("mapping")
    sp.add_argument("part")
    sp.add_argument("--domain", required=True)
    # keep the debugging verb out of the help listing
    verbs._choices_actions = [c for c in verbs._choices_actions if c.dest != "oracle"]
    return p


_INPUTS = ("file", "a", "b", "parts", "carrier", "topology", "first", "second",
           "part", "mapping", "domain", "source", "target", "shape")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in _INPUTS:
        path = getattr(args, name, None)
        if path is not None and not os.path.isfile(path):
            print(f"shapetop: {path}: no such file", file=sys.stderr)
            return USAGE
    try:
        text, code = args.func(args)
    except (ParseError, _Usage) as exc:
        print(f"shapetop: {exc}", file=sys.stderr)
        return USAGE
    except ShapeTopError as exc:
        print(f"shapetop: {type(exc).__name__}: {exc}", file=sys.stderr)
        return SEMANTIC
    out = getattr(args, "output", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
