"""Seeded random shapes, parts and topologies for tests and demos."""
from __future__ import annotations

import random
from fractions import Fraction

from .shape import U0, Point, Segment, Shape, normalize, point, sum_all
from .topology import generate_from_basis, generate_topology

_LINES = [((1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, 1), Fraction(1, 2)),
          ((1, 1), 0), ((1, 1), 2), ((1, -1), -1), ((2, 1), 0)]


def rational(rng: random.Random, lo=-8, hi=8, max_den=4) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def _on_line(rng, lo, hi, max_den):
    (dx, dy), c = rng.choice(_LINES)
    # points (u*dx, u*dy) shifted perpendicular-ish by c
    span = max(abs(dx), abs(dy))
    u1 = u2 = 0
    while u1 == u2:
        u1 = rational(rng, lo // (2 * span), hi // (2 * span), max_den)
        u2 = rational(rng, lo // (2 * span), hi // (2 * span), max_den)
    base = Point(Fraction(0), Fraction(c)) if dx else Point(Fraction(c), Fraction(0))
    return Segment(Point(base.x + u1 * dx, base.y + u1 * dy),
                   Point(base.x + u2 * dx, base.y + u2 * dy))


def random_segment(rng, lo=-8, hi=8, max_den=4, collinear_bias=0.6) -> Segment:
    if rng.random() < collinear_bias:
        return _on_line(rng, lo, hi, max_den)
    while True:
        p = Point(rational(rng, lo, hi, max_den), rational(rng, lo, hi, max_den))
        q = Point(rational(rng, lo, hi, max_den), rational(rng, lo, hi, max_den))
        if p != q:
            return Segment(p, q)


def random_u1_shape(rng, max_segments=6, min_segments=0, **kw) -> Shape:
    n = rng.randint(min_segments, max_segments)
    return normalize("U1", [random_segment(rng, **kw) for _ in range(n)])


def random_u0_shape(rng, max_points=6, span=3) -> Shape:
    n = rng.randint(0, max_points)
    return normalize(U0, [point(rng.randint(-span, span), rng.randint(-span, span))
                          for _ in range(n)])


_CUTS = [Fraction(k, 6) for k in range(7)]


def random_piece(rng, carrier: Shape) -> Shape:
    """A nonempty sub-segment of one maximal element of a U1 carrier."""
    seg = rng.choice(carrier.elements)
    t1, t2 = sorted(rng.sample(_CUTS, 2))
    d = Point(seg.b.x - seg.a.x, seg.b.y - seg.a.y)
    return normalize("U1", [Segment(Point(seg.a.x + t1 * d.x, seg.a.y + t1 * d.y),
                                    Point(seg.a.x + t2 * d.x, seg.a.y + t2 * d.y))])


def random_part(rng, carrier: Shape, max_pieces=2) -> Shape:
    """A nonempty part of ``carrier`` (U0: a nonempty subset)."""
    if carrier.kind == U0:
        k = rng.randint(1, len(carrier.elements))
        return Shape(U0, tuple(sorted(rng.sample(carrier.elements, k))))
    pieces = [random_piece(rng, carrier) for _ in range(rng.randint(1, max_pieces))]
    return sum_all(pieces, "U1")


def random_carrier(rng, max_segments=3) -> Shape:
    while True:
        s = random_u1_shape(rng, max_segments=max_segments, min_segments=1,
                            lo=-4, hi=4, max_den=2)
        if not s.is_empty:
            return s


def random_topology(rng, carrier: Shape = None, max_generators=3):
    carrier = carrier or random_carrier(rng)
    parts = [random_part(rng, carrier) for _ in range(rng.randint(1, max_generators))]
    return generate_topology(parts, carrier, add_carrier=True)


def random_small_topology(rng, max_opens=10, max_generators=3):
    while True:
        t = random_topology(rng, max_generators=max_generators)
        if len(t) <= max_opens:
            return t


def random_decomposition(rng, carrier: Shape, max_blocks=4) -> list:
    """Split a U1 carrier into at least two disjoint nonempty parts."""
    pieces = []
    for seg in carrier.elements:
        least = 1 if len(carrier.elements) == 1 else 0
        cuts = sorted(set(rng.sample(_CUTS[1:-1], rng.randint(least, 2))) | {_CUTS[0], _CUTS[-1]})
        d = Point(seg.b.x - seg.a.x, seg.b.y - seg.a.y)
        for t1, t2 in zip(cuts, cuts[1:]):
            pieces.append(normalize("U1", [Segment(
                Point(seg.a.x + t1 * d.x, seg.a.y + t1 * d.y),
                Point(seg.a.x + t2 * d.x, seg.a.y + t2 * d.y))]))
    rng.shuffle(pieces)
    k = rng.randint(min(2, len(pieces)), min(max_blocks, len(pieces)))
    blocks = [[] for _ in range(k)]
    for i, p in enumerate(pieces):
        blocks[i % k if i < k else rng.randrange(k)].append(p)
    return [sum_all(b, "U1") for b in blocks]


def random_disjoint_topology(rng, carrier: Shape = None):
    carrier = carrier or random_carrier(rng)
    return generate_from_basis(random_decomposition(rng, carrier), carrier)
