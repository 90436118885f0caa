"""Text formats (.shape, parts lists, .topo, .map, .space) and DOT export.

All writers emit canonical order, so equal values always serialize to the
same bytes, and every writer's output parses back to an equal value.

Shape elements are written one per line as ``pt x y`` or
``seg x1 y1 x2 y2``; coordinates are integers or ``p/q`` rationals and
``#`` starts a comment. Inside ``{ ... }`` blocks elements may also share a
line, separated by ``;``.
"""
from __future__ import annotations

import os
from fractions import Fraction

from .errors import DegenerateElement, ParseError
from .mappings import Add, Affine, Mapping, Subtract
from .shape import KINDS, U0, U1, Point, Segment, Shape, normalize
from .space import SetTopology, SpacePoint
from .topology import Basis, Topology, ordered


# -- tokenizing ------------------------------------------------------------

class _Lines:
    def __init__(self, text, source):
        self.source = source
        self.rows = []
        for n, raw in enumerate(text.splitlines(), 1):
            tokens = raw.split("#", 1)[0].replace("{", " { ").replace("}", " } ") \
                .replace(";", " ; ").split()
            if tokens:
                self.rows.append((n, tokens))
        self.i = 0

    def more(self):
        return self.i < len(self.rows)

    def next(self):
        row = self.rows[self.i]
        self.i += 1
        return row

    def error(self, line, token, message):
        return ParseError(self.source, line, token, message)


def _number(lines, line, token):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise lines.error(line, token, "expected an integer or p/q rational") from None


def _element(lines, line, tokens):
    head = tokens[0]
    if head == "pt":
        arity, kind = 2, U0
    elif head == "seg":
        arity, kind = 4, U1
    else:
        raise lines.error(line, head, "expected 'pt' or 'seg'")
    if len(tokens) != arity + 1:
        bad = tokens[arity + 1] if len(tokens) > arity + 1 else head
        raise lines.error(line, bad, f"'{head}' takes {arity} coordinates")
    v = [_number(lines, line, t) for t in tokens[1:]]
    if kind == U0:
        return kind, Point(v[0], v[1])
    try:
        return kind, Segment(Point(v[0], v[1]), Point(v[2], v[3]))
    except DegenerateElement:
        raise lines.error(line, head, "segment endpoints coincide") from None


def _collect(lines, line, tokens, kind, elements):
    # tokens: one or more ';'-separated elements on a line
    group = []
    for tok in tokens + [";"]:
        if tok == ";":
            if group:
                k, e = _element(lines, line, group)
                if kind is not None and k != kind:
                    raise lines.error(line, group[0], f"{k} element in a {kind} shape")
                kind = k
                elements.append(e)
                group = []
        else:
            group.append(tok)
    return kind


def _block(lines, line, rest, kind):
    """Parse ``[KIND] { ... }`` starting at ``rest`` (tokens after a keyword)."""
    if rest and rest[0] in KINDS:
        if kind is not None and rest[0] != kind:
            raise lines.error(line, rest[0], f"expected a {kind} shape")
        kind, rest = rest[0], rest[1:]
    if not rest or rest[0] != "{":
        raise lines.error(line, rest[0] if rest else "", "expected '{'")
    rest = rest[1:]
    elements = []
    if "}" in rest:
        close = rest.index("}")
        if close != len(rest) - 1:
            raise lines.error(line, rest[close + 1], "unexpected text after '}'")
        kind = _collect(lines, line, rest[:close], kind, elements)
    else:
        kind = _collect(lines, line, rest, kind, elements)
        while True:
            if not lines.more():
                raise lines.error(line, "{", "unclosed block")
            n, toks = lines.next()
            if toks == ["}"]:
                break
            if "}" in toks:
                raise lines.error(n, "}", "'}' must stand on its own line")
            kind = _collect(lines, n, toks, kind, elements)
    if kind is None:
        raise lines.error(line, "{", "empty block needs a kind, e.g. 'U1 { }'")
    return normalize(kind, elements)


def _elements_text(s: Shape) -> list:
    if s.kind == U0:
        return [f"pt {p.x} {p.y}" for p in s.elements]
    return [f"seg {e.a.x} {e.a.y} {e.b.x} {e.b.y}" for e in s.elements]


def block_text(s: Shape, prefix: str, with_kind: bool = False) -> str:
    head = f"{prefix} {s.kind} {{" if with_kind else f"{prefix} {{"
    if s.is_empty:
        return f"{head} }}\n"
    return head + "\n" + "".join(e + "\n" for e in _elements_text(s)) + "}\n"


def inline_text(s: Shape) -> str:
    return "{ " + " ; ".join(_elements_text(s)) + (" }" if s.elements else "}")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


# -- .shape ----------------------------------------------------------------

def parse_shape(text: str, source: str = "<string>") -> Shape:
    lines = _Lines(text, source)
    if not lines.more():
        raise ParseError(source, 1, "", "missing 'shape U0|U1' header")
    n, toks = lines.next()
    if toks[0] != "shape" or len(toks) != 2 or toks[1] not in KINDS:
        raise lines.error(n, toks[0], "expected header 'shape U0' or 'shape U1'")
    kind = toks[1]
    elements = []
    while lines.more():
        n, toks = lines.next()
        _collect(lines, n, toks, kind, elements)
    return normalize(kind, elements)


def format_shape(s: Shape) -> str:
    return f"shape {s.kind}\n" + "".join(e + "\n" for e in _elements_text(s))


def read_shape(path) -> Shape:
    return parse_shape(_read(path), str(path))


# -- named parts -----------------------------------------------------------

def parse_parts(text: str, source: str = "<string>") -> dict:
    """``part NAME { ... }`` blocks, optionally after a ``parts U0|U1`` header."""
    lines = _Lines(text, source)
    kind = None
    parts = {}
    while lines.more():
        n, toks = lines.next()
        if toks[0] == "parts" and not parts and kind is None:
            if len(toks) != 2 or toks[1] not in KINDS:
                raise lines.error(n, toks[-1], "expected 'parts U0' or 'parts U1'")
            kind = toks[1]
            continue
        if toks[0] != "part" or len(toks) < 3:
            raise lines.error(n, toks[0], "expected 'part NAME { ... }'")
        name = toks[1]
        if name in parts:
            raise lines.error(n, name, "duplicate part name")
        shape = _block(lines, n, toks[2:], kind)
        kind = shape.kind
        parts[name] = shape
    return parts


def format_parts(parts: dict) -> str:
    kinds = {s.kind for s in parts.values()}
    head = f"parts {kinds.pop()}\n" if len(kinds) == 1 else ""
    return head + "".join(block_text(s, f"part {name}") for name, s in parts.items())


def basis_parts(b) -> dict:
    return {f"b{i}": s for i, s in enumerate(ordered(b.elements if isinstance(b, Basis) else b))}


def read_parts(path) -> dict:
    return parse_parts(_read(path), str(path))


# -- .topo -----------------------------------------------------------------

def parse_topology(text: str, source: str = "<string>", base_dir: str = "."):
    """Return ``(carrier, opens)`` without checking the topology conditions."""
    lines = _Lines(text, source)
    if not lines.more():
        raise ParseError(source, 1, "", "missing 'topology over ...' header")
    n, toks = lines.next()
    if toks[:2] != ["topology", "over"] or len(toks) < 3:
        raise lines.error(n, toks[0], "expected 'topology over <shape-file>'")
    if toks[2] == "{" or toks[2] in KINDS:
        carrier = _block(lines, n, toks[2:], None)
    else:
        carrier = _load(lines, n, toks[2], base_dir, read_shape)
    named = {}
    opens = []
    while lines.more():
        n, toks = lines.next()
        if toks[0] == "parts" and len(toks) == 2:
            named.update(_load(lines, n, toks[1], base_dir, read_parts))
            continue
        if toks[0] != "open" or len(toks) < 2:
            raise lines.error(n, toks[0], "expected 'open { ... }' or 'open @name'")
        if toks[1].startswith("@"):
            name = toks[1][1:]
            if name not in named:
                raise lines.error(n, toks[1], "unknown part name")
            if named[name].kind != carrier.kind:
                raise lines.error(n, toks[1], f"part is not {carrier.kind}")
            opens.append(named[name])
        else:
            opens.append(_block(lines, n, toks[1:], carrier.kind))
    return carrier, opens


def _load(lines, n, ref, base_dir, reader):
    path = os.path.join(base_dir, ref)
    if not os.path.isfile(path):
        raise lines.error(n, ref, "no such file")
    return reader(path)


def format_topology(t: Topology, carrier_ref: str = None) -> str:
    """Opens in (element count, lexicographic) order; the carrier is inlined
    unless ``carrier_ref`` names its file."""
    if carrier_ref is None:
        out = block_text(t.carrier, "topology over", with_kind=True)
    else:
        out = f"topology over {carrier_ref}\n"
    return out + "".join(block_text(c, "open") for c in t.members)


def read_topology(path) -> Topology:
    carrier, opens = parse_topology(_read(path), str(path), os.path.dirname(str(path)) or ".")
    return Topology(carrier, opens)


# -- .map ------------------------------------------------------------------

def parse_mapping(text: str, source: str = "<string>", base_dir: str = ".") -> Mapping:
    lines = _Lines(text, source)
    steps = []
    while lines.more():
        n, toks = lines.next()
        head = toks[0]
        if head == "affine":
            if len(toks) != 7:
                raise lines.error(n, head, "'affine' takes a b c d tx ty")
            a, b, c, d, tx, ty = (_number(lines, n, t) for t in toks[1:])
            if a * d - b * c == 0:
                raise lines.error(n, head, "affine matrix is singular")
            steps.append(Affine(((a, b), (c, d)), (tx, ty)))
        elif head in ("add", "sub"):
            if len(toks) < 2:
                raise lines.error(n, head, f"'{head}' needs a shape file or block")
            if toks[1] == "{" or toks[1] in KINDS:
                shape = _block(lines, n, toks[1:], None)
            elif len(toks) == 2:
                shape = _load(lines, n, toks[1], base_dir, read_shape)
            else:
                raise lines.error(n, toks[2], "unexpected token")
            steps.append(Add(shape) if head == "add" else Subtract(shape))
        else:
            raise lines.error(n, head, "expected 'affine', 'add' or 'sub'")
    return Mapping(tuple(steps))


def format_mapping(f: Mapping) -> str:
    out = []
    for step in f.steps:
        if isinstance(step, Affine):
            (a, b), (c, d) = step.matrix
            tx, ty = step.offset
            out.append(f"affine {a} {b} {c} {d} {tx} {ty}\n")
        else:
            word = "add" if isinstance(step, Add) else "sub"
            out.append(block_text(step.shape, word, with_kind=True))
    return "".join(out)


def read_mapping(path) -> Mapping:
    return parse_mapping(_read(path), str(path), os.path.dirname(str(path)) or ".")


# -- .space ----------------------------------------------------------------

def format_space(st: SetTopology, kind: str) -> str:
    out = [f"space {kind} {len(st.points)}\n"]
    for p in st.points:
        out.append(block_text(p.shape, f"point {p.index}"))
    for s in st.open_sets:
        out.append(" ".join(["open"] + [str(i) for i in sorted(s)]) + "\n")
    return "".join(out)


def parse_space(text: str, source: str = "<string>") -> SetTopology:
    lines = _Lines(text, source)
    n, toks = lines.next() if lines.more() else (1, [""])
    if toks[0] != "space" or len(toks) != 3 or toks[1] not in KINDS:
        raise lines.error(n, toks[0], "expected 'space U0|U1 COUNT'")
    kind = toks[1]
    pts, sets = [], []
    while lines.more():
        n, toks = lines.next()
        if toks[0] == "point" and len(toks) >= 3:
            if toks[1] != str(len(pts)):
                raise lines.error(n, toks[1], "points must be numbered 0, 1, ...")
            pts.append(SpacePoint(len(pts), _block(lines, n, toks[2:], kind)))
        elif toks[0] == "open":
            try:
                idx = frozenset(int(t) for t in toks[1:])
            except ValueError:
                raise lines.error(n, toks[1], "expected point indices") from None
            sets.append(idx)
        else:
            raise lines.error(n, toks[0], "expected 'point' or 'open'")
    return SetTopology(tuple(pts), tuple(sets))


# -- DOT -------------------------------------------------------------------

def _covers(items, leq):
    edges = []
    for i, a in enumerate(items):
        for j, b in enumerate(items):
            if i == j or not leq(a, b) or leq(b, a):
                continue
            if not any(k not in (i, j) and leq(a, c) and leq(c, b) and c != a and c != b
                       for k, c in enumerate(items)):
                edges.append((i, j))
    return edges


def topology_dot(t: Topology, highlight=(), name="OS") -> str:
    """Hasse diagram of the open parts: nodes o0..oN plus a legend node."""
    opens = t.members
    marked = set(highlight)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i, c in enumerate(opens):
        style = ", color=red, fontcolor=red" if c in marked else ""
        out.append(f'  o{i} [label="o{i}"{style}];')
    for i, j in _covers(opens, lambda a, b: a <= b):
        out.append(f"  o{i} -> o{j};")
    legend = "".join(f"o{i}: {inline_text(c)}\\l" for i, c in enumerate(opens))
    out.append(f'  legend [shape=note, label="{legend}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def space_dot(st: SetTopology, name="Tstar") -> str:
    sets = sorted(st.family, key=lambda s: (len(s), sorted(s)))
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=ellipse];"]
    for i, s in enumerate(sets):
        label = "{" + ",".join(str(k) for k in sorted(s)) + "}"
        out.append(f'  s{i} [label="{label}"];')
    for i, j in _covers(sets, lambda a, b: a <= b):
        out.append(f"  s{i} -> s{j};")
    legend = "".join(f"{p.index}: {inline_text(p.shape)}\\l" for p in st.points)
    out.append(f'  legend [shape=note, label="{legend}"];')
    out.append("}")
    return "\n".join(out) + "\n"
