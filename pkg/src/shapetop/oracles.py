"""Brute-force oracles that check the main modules by independent routes.

Nothing here is used by the library itself; the test suite and the hidden
``oracle`` CLI verb call into it.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import KindMismatch, TooLarge, TooManyFragments
from .mappings import UNDEFINED, Affine, Mapping, PreimageResult, image
from .shape import (U0, U1, Segment, Shape, _merge, crossing_point,
                    product_all, segments_meet, sum_all)
from .space import SetTopology

# -- U0 as plain sets ------------------------------------------------------

def u0_oracle(op: str, a: Shape, b: Shape):
    """Evaluate ``op`` with Python set operations on the points."""
    if a.kind != U0 or b.kind != U0:
        raise KindMismatch("the set oracle works on point shapes only")
    x, y = set(a.elements), set(b.elements)
    if op == "part_of":
        return x <= y
    result = {"sum": x | y, "product": x & y, "difference": x - y}[op]
    return Shape(U0, tuple(sorted(result)))


# -- finite set topologies -------------------------------------------------

def enumerate_set_topologies(n: int) -> list:
    """Every topology on the points 0..n-1, by filtering all subset families."""
    if n > 4:
        raise TooLarge("enumeration is limited to 4 points")
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    found = []
    for choice in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in range(len(middle)) if choice >> i & 1}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            sets = sorted((frozenset(i for i in range(n) if m >> i & 1) for m in fam),
                          key=lambda s: (len(s), sorted(s)))
            found.append(SetTopology(tuple(range(n)), tuple(sets)))
    if n == 0:
        return found[:1]
    return found


# -- fragments -------------------------------------------------------------

@dataclass(frozen=True)
class FragmentDecomposition:
    sources: tuple
    fragments: tuple

    def parts_of(self, s: Shape) -> list:
        return [f for f in self.fragments if f <= s]


def fragment_decomposition(shapes) -> FragmentDecomposition:
    """Cut every segment at every endpoint and crossing among ``shapes``.

    The pieces are pairwise disjoint and every source is a sum of pieces.
    """
    shapes = tuple(shapes)
    kind = shapes[0].kind if shapes else U1
    if kind == U0:
        pts = sorted({p for s in shapes for p in s.elements})
        return FragmentDecomposition(shapes, tuple(Shape(U0, (p,)) for p in pts))
    segs = sorted({e for s in shapes for e in s.elements})
    cuts, spans = {}, {}
    for s in segs:
        cuts.setdefault(s.line, set()).update((s.a, s.b))
        spans.setdefault(s.line, []).append((s.a, s.b))
    for s, t in combinations(segs, 2):
        if s.line != t.line and segments_meet(s, t):
            p = crossing_point(s, t)
            cuts[s.line].add(p)
            cuts[t.line].add(p)
    frags = []
    for key, pts in cuts.items():
        union = _merge(spans[key])
        pts = sorted(pts)
        for p, q in zip(pts, pts[1:]):
            if any(lo <= p and q <= hi for lo, hi in union):
                frags.append(Shape(U1, (Segment(p, q),)))
    frags.sort(key=lambda f: f.sort_key)
    return FragmentDecomposition(shapes, tuple(frags))


def _domain_frame(f: Mapping, y: Shape, domain: Shape) -> list:
    # every shape the mapping touches, carried back to the domain's frame
    inverses = []
    frame = [domain]

    def back(s):
        for a in reversed(inverses):
            s = a.apply(s)
        return s

    for step in f.steps:
        if isinstance(step, Affine):
            inverses.append(step.inverse())
        else:
            frame.append(back(step.shape))
    frame.append(back(y))
    return [s for s in frame if not s.is_empty]


def brute_preimage(f: Mapping, y: Shape, domain: Shape,
                   max_fragments: int = 20) -> PreimageResult:
    """Search every fragment sum x <= domain for f(x) <= y; return the largest."""
    frame = _domain_frame(f, y, domain)
    frags = fragment_decomposition(frame).parts_of(domain) if frame else []
    if len(frags) > max_fragments:
        raise TooManyFragments(f"{len(frags)} fragments (limit {max_fragments})")
    sums = [Shape.empty(domain.kind)]
    for fr in frags:
        sums += [s + fr for s in sums]
    members = [x for x in sums if image(f, x) <= y]
    if not members:
        return UNDEFINED
    top = sum_all(members, domain.kind)
    if top not in members:
        raise AssertionError("the supremum of the candidate set is not a member")
    return PreimageResult(True, top)


# -- topology oracles ------------------------------------------------------

def expression_closure(generators, kind: str) -> set:
    """Values of all sums of products of the generators (plus the empty shape).

    In a distributive lattice every +/· expression has this normal form, so
    this is the generated family computed without any fixpoint iteration.
    """
    gens = list(generators)
    meets = set()
    for r in range(1, len(gens) + 1):
        for combo in combinations(gens, r):
            meets.add(product_all(combo))
    values = {Shape.empty(kind)}
    for m in sorted(meets, key=lambda s: s.sort_key):
        values |= {v + m for v in values}
    return values


def brute_separation(t) -> tuple:
    """Every ordered pair of opens forming a separation."""
    return tuple((c, d) for c in t.members for d in t.members
                 if not c.is_empty and not d.is_empty
                 and (c * d).is_empty and c + d == t.carrier)


def brute_closure(x: Shape, t) -> Shape:
    return product_all(c for c in t.opens if x <= c)


def brute_interior(x: Shape, t) -> Shape:
    return sum_all((c for c in t.opens if c <= x), x.kind)


def bases_of(t) -> list:
    """Every subset of the nonempty opens that is a basis generating ``t``.

    Works on an index table of pairwise sums and products so that all
    2^n subsets can be tried.
    """
    opens = [c for c in t.members if not c.is_empty]
    n = len(opens)
    if n > 16:
        raise TooLarge("too many opens to enumerate their subsets")
    index = {c: i for i, c in enumerate(opens)}
    empty = -1
    top = index[t.carrier]
    meet = [[index.get(a * b, empty) for b in opens] for a in opens]
    below = [[b <= a for b in opens] for a in opens]

    def is_sum(target, chosen):
        parts = [j for j in chosen if below[target][j]]
        return bool(parts) and sum_all((opens[j] for j in parts), t.carrier.kind) == opens[target]

    found = []
    for mask in range(1, 1 << n):
        chosen = [i for i in range(n) if mask >> i & 1]
        if not is_sum(top, chosen):
            continue
        ok = True
        for i, j in combinations(chosen, 2):
            m = meet[i][j]
            if m != empty and m not in chosen and not is_sum(m, chosen):
                ok = False
                break
        if ok and all(is_sum(k, chosen) for k in range(n)):
            found.append(frozenset(opens[i] for i in chosen))
    return found
