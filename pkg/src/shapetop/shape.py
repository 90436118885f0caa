"""Exact-rational shapes made of points (U0) or line segments (U1).

Shapes are kept in maximal-element form. Collinear segments that overlap or
meet end to end are merged into one, and elements are stored in
lexicographic order, so two shapes are equal exactly when their element
tuples are equal.

Segments are treated as closed pieces of their carrier line. Products and
differences discard anything of zero length, which makes the parts of a
U1 shape a Boolean algebra (the regular closed sets of the segments).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Iterable, NamedTuple, Union

from .errors import DegenerateElement, KindMismatch

U0 = "U0"
U1 = "U1"
KINDS = (U0, U1)


def scalar(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every coordinate must be exact.
    """
    if isinstance(value, float):
        raise TypeError(f"float coordinate {value!r} is not exact")
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self):
        return f"{self.x} {self.y}"


def point(x, y) -> Point:
    return Point(scalar(x), scalar(y))


class LineKey(NamedTuple):
    """Integer coefficients of the carrier line ``a*x + b*y = c``.

    Normalized so gcd(|a|, |b|, |c|) = 1 and the first nonzero of (a, b)
    is positive; two segments are collinear iff their keys are equal.
    """

    a: int
    b: int
    c: int


def line_through(p: Point, q: Point) -> LineKey:
    a = q.y - p.y
    b = p.x - q.x
    c = a * p.x + b * p.y
    den = lcm(a.denominator, b.denominator, c.denominator)
    ai, bi, ci = int(a * den), int(b * den), int(c * den)
    g = gcd(ai, bi, ci)
    ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return LineKey(ai, bi, ci)


@dataclass(frozen=True, order=True)
class Segment:
    """A closed line segment; endpoints are stored with ``a < b``."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateElement(f"zero-length segment at ({self.a})")
        if self.b < self.a:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @cached_property
    def line(self) -> LineKey:
        return line_through(self.a, self.b)

    def __str__(self):
        return f"{self.a} {self.b}"


def segment(x1, y1, x2, y2) -> Segment:
    return Segment(point(x1, y1), point(x2, y2))


Element = Union[Point, Segment]


# -- per-line interval arithmetic ------------------------------------------
#
# On a fixed line the lexicographic order of points is a linear order that
# agrees with position along the line, so a segment is just an interval
# (lo, hi) of Points and interval algebra works on Points directly.

def _merge(intervals):
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _intersect(xs, ys):
    out = []
    i = j = 0
    while i < len(xs) and j < len(ys):
        lo = max(xs[i][0], ys[j][0])
        hi = min(xs[i][1], ys[j][1])
        if lo < hi:
            out.append((lo, hi))
        if xs[i][1] < ys[j][1]:
            i += 1
        else:
            j += 1
    return out


def _subtract(xs, ys):
    out = []
    for lo, hi in xs:
        cur = lo
        for ylo, yhi in ys:
            if yhi <= cur:
                continue
            if ylo >= hi:
                break
            if ylo > cur:
                out.append((cur, ylo))
            cur = max(cur, yhi)
            if cur >= hi:
                break
        if cur < hi:
            out.append((cur, hi))
    return out


def _contained(xs, ys):
    j = 0
    for lo, hi in xs:
        while j < len(ys) and ys[j][1] < hi:
            j += 1
        if j == len(ys) or ys[j][0] > lo:
            return False
    return True


@dataclass(frozen=True, eq=True, repr=False)
class Shape:
    """A U0 or U1 shape in canonical maximal form.

    Build shapes with :func:`normalize`, :func:`points`, :func:`segments`
    or :meth:`Shape.empty`; the constructor trusts its input.

    Operators: ``a + b`` (sum), ``a * b`` (product), ``a - b``
    (difference), ``a <= b`` (part relation).
    """

    kind: str
    elements: tuple

    @classmethod
    def empty(cls, kind: str) -> "Shape":
        if kind not in KINDS:
            raise KindMismatch(f"unknown kind {kind!r}")
        return cls(kind, ())

    @property
    def is_empty(self) -> bool:
        return not self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def _hash(self):
        return hash((self.kind, self.elements))

    def __hash__(self):
        return self._hash

    @cached_property
    def lines(self) -> dict:
        """Segments grouped by carrier line as sorted (lo, hi) intervals."""
        groups = {}
        for s in self.elements:
            groups.setdefault(s.line, []).append((s.a, s.b))
        return groups

    @cached_property
    def sort_key(self) -> tuple:
        if self.kind == U0:
            return (len(self.elements), self.elements)
        return (len(self.elements), tuple((s.a, s.b) for s in self.elements))

    def __add__(self, other):
        return shape_sum(self, other)

    def __mul__(self, other):
        return product(self, other)

    def __sub__(self, other):
        return difference(self, other)

    def __le__(self, other):
        return part_of(self, other)

    def __ge__(self, other):
        return part_of(other, self)

    def __str__(self):
        body = "; ".join(str(e) for e in self.elements)
        return f"{self.kind}{{{body}}}"

    def __repr__(self):
        return f"<Shape {self}>"


def _from_lines(lines: dict) -> Shape:
    segs = []
    for intervals in lines.values():
        segs.extend(Segment(lo, hi) for lo, hi in intervals)
    segs.sort()
    return Shape(U1, tuple(segs))


def normalize(kind: str, elements: Iterable[Element]) -> Shape:
    """Reduce raw points or segments to canonical maximal form."""
    if kind == U0:
        pts = set()
        for e in elements:
            if not isinstance(e, Point):
                raise KindMismatch(f"U0 shape cannot hold {e!r}")
            pts.add(Point(scalar(e.x), scalar(e.y)))
        return Shape(U0, tuple(sorted(pts)))
    if kind == U1:
        groups = {}
        for e in elements:
            if not isinstance(e, Segment):
                raise KindMismatch(f"U1 shape cannot hold {e!r}")
            groups.setdefault(e.line, []).append((e.a, e.b))
        return _from_lines({k: _merge(v) for k, v in groups.items()})
    raise KindMismatch(f"unknown kind {kind!r}")


def points(*coords) -> Shape:
    """``points((0, 0), (1, 2))`` -> a U0 shape."""
    return normalize(U0, [point(x, y) for x, y in coords])


def segments(*coords) -> Shape:
    """``segments((0, 0, 2, 0), (1, 0, 4, 0))`` -> a U1 shape."""
    return normalize(U1, [segment(*c) for c in coords])


def _check(a: Shape, b: Shape):
    if a.kind != b.kind:
        raise KindMismatch(f"cannot combine {a.kind} with {b.kind}")


def part_of(x: Shape, s: Shape) -> bool:
    """True iff every maximal element of ``x`` is embedded in one of ``s``."""
    _check(x, s)
    if x.kind == U0:
        return set(x.elements) <= set(s.elements)
    if len(x.elements) > 0 and len(s.elements) == 0:
        return False
    s_lines = s.lines
    for key, xs in x.lines.items():
        ys = s_lines.get(key)
        if ys is None or not _contained(xs, ys):
            return False
    return True


def shape_sum(a: Shape, b: Shape) -> Shape:
    _check(a, b)
    if a.kind == U0:
        return Shape(U0, tuple(sorted(set(a.elements) | set(b.elements))))
    if not b.elements:
        return a
    if not a.elements:
        return b
    lines = dict(a.lines)
    for key, ys in b.lines.items():
        lines[key] = _merge(lines[key] + ys) if key in lines else ys
    return _from_lines(lines)


def product(a: Shape, b: Shape) -> Shape:
    _check(a, b)
    if a.kind == U0:
        return Shape(U0, tuple(sorted(set(a.elements) & set(b.elements))))
    lines = {}
    b_lines = b.lines
    for key, xs in a.lines.items():
        ys = b_lines.get(key)
        if ys:
            common = _intersect(xs, ys)
            if common:
                lines[key] = common
    return _from_lines(lines)


def difference(a: Shape, b: Shape) -> Shape:
    _check(a, b)
    if a.kind == U0:
        return Shape(U0, tuple(sorted(set(a.elements) - set(b.elements))))
    if not b.elements:
        return a
    lines = {}
    b_lines = b.lines
    for key, xs in a.lines.items():
        ys = b_lines.get(key)
        rest = _subtract(xs, ys) if ys else xs
        if rest:
            lines[key] = rest
    return _from_lines(lines)


def sum_all(shapes: Iterable[Shape], kind: str) -> Shape:
    """Sum of any number of shapes; the empty shape of ``kind`` when none."""
    return reduce(shape_sum, shapes, Shape.empty(kind))


def product_all(shapes: Iterable[Shape]) -> Shape:
    shapes = list(shapes)
    if not shapes:
        raise ValueError("product of no shapes is undefined")
    return reduce(product, shapes)


def boundary(s: Shape) -> Shape:
    """Endpoints of every maximal segment, as a U0 shape.

    T-junction endpoints that lie inside another segment are kept.
    """
    if s.kind != U1:
        raise KindMismatch("points have no boundary")
    if s.is_empty:
        raise KindMismatch("the empty shape has no boundary")
    return normalize(U0, [p for seg in s.elements for p in (seg.a, seg.b)])


# -- touching --------------------------------------------------------------

def _orient(p: Point, q: Point, r: Point) -> int:
    d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (d > 0) - (d < 0)


def _within(p: Point, q: Point, r: Point) -> bool:
    # r is collinear with p, q; is it inside their bounding box?
    return (min(p.x, q.x) <= r.x <= max(p.x, q.x)
            and min(p.y, q.y) <= r.y <= max(p.y, q.y))


def segments_meet(s: Segment, t: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    o1 = _orient(s.a, s.b, t.a)
    o2 = _orient(s.a, s.b, t.b)
    o3 = _orient(t.a, t.b, s.a)
    o4 = _orient(t.a, t.b, s.b)
    if o1 != o2 and o3 != o4:
        return True
    return ((o1 == 0 and _within(s.a, s.b, t.a))
            or (o2 == 0 and _within(s.a, s.b, t.b))
            or (o3 == 0 and _within(t.a, t.b, s.a))
            or (o4 == 0 and _within(t.a, t.b, s.b)))


def crossing_point(s: Segment, t: Segment):
    """The single point where two non-parallel segments' lines cross."""
    l1, l2 = s.line, t.line
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    x = Fraction(l1.c * l2.b - l2.c * l1.b, det)
    y = Fraction(l1.a * l2.c - l2.a * l1.c, det)
    return Point(x, y)


def touches(a: Shape, b: Shape) -> bool:
    """Do some maximal elements of ``a`` and ``b`` touch?

    For U1 this means two segments share a point; for U0 two shapes touch
    only by sharing a point.
    """
    _check(a, b)
    if a.kind == U0:
        return bool(set(a.elements) & set(b.elements))
    return any(segments_meet(s, t) for s in a.elements for t in b.elements)


def visually_connected(s: Shape) -> bool:
    """Is the touching graph over the maximal elements connected?

    A U0 shape looks connected only when it has at most one point.
    """
    n = len(s.elements)
    if s.kind == U0:
        return n <= 1
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    groups = n
    for i in range(n):
        for j in range(i + 1, n):
            if segments_meet(s.elements[i], s.elements[j]):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
                    groups -= 1
    return groups <= 1
