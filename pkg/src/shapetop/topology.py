"""Finite topologies on a carrier shape.

A topology is a finite family of parts of its carrier that contains the
empty shape and the carrier and is closed under sum and product. Ordered by
the part relation it is a finite distributive lattice, the lattice of open
parts, and every function here works on that lattice directly.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (AlreadyOpen, CarrierMismatch, DoesNotExhaust,
                     EmptyGenerator, GeneratorBudgetExceeded, KindMismatch,
                     MemberNotPart, NotABasis, NotATopology)
from .shape import Shape, sum_all

DEFAULT_MAX_OPENS = 4096


@dataclass(frozen=True)
class Check:
    """A boolean verdict with a reason and the offending values, if any."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def ordered(shapes: Iterable[Shape]) -> list:
    """Shapes sorted by (element count, lexicographic elements)."""
    return sorted(shapes, key=lambda s: s.sort_key)


def _require_parts(shapes, carrier):
    for s in shapes:
        if s.kind != carrier.kind:
            raise KindMismatch(f"{s} is {s.kind}, carrier is {carrier.kind}")
        if not s <= carrier:
            raise MemberNotPart(f"{s} is not a part of {carrier}")


@dataclass(frozen=True)
class Topology:
    """Open parts of ``carrier``. The constructor validates the family."""

    carrier: Shape
    opens: frozenset

    def __post_init__(self):
        object.__setattr__(self, "opens", frozenset(self.opens))
        verdict = is_topology(self.opens, self.carrier)
        if not verdict:
            raise NotATopology(verdict.reason)

    @classmethod
    def _trusted(cls, carrier, opens):
        t = object.__new__(cls)
        object.__setattr__(t, "carrier", carrier)
        object.__setattr__(t, "opens", frozenset(opens))
        return t

    @classmethod
    def trivial(cls, carrier: Shape) -> "Topology":
        return cls._trusted(carrier, {Shape.empty(carrier.kind), carrier})

    @property
    def empty(self) -> Shape:
        return Shape.empty(self.carrier.kind)

    @property
    def members(self) -> list:
        return ordered(self.opens)

    def __contains__(self, x):
        return x in self.opens

    def __len__(self):
        return len(self.opens)

    def __iter__(self):
        return iter(self.members)


@dataclass(frozen=True)
class Basis:
    carrier: Shape
    elements: frozenset
    reduced: bool = False

    @property
    def members(self) -> list:
        return ordered(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.members)


def is_topology(family: Iterable[Shape], carrier: Shape) -> Check:
    family = set(family)
    _require_parts(family, carrier)
    empty = Shape.empty(carrier.kind)
    if empty not in family:
        return Check(False, "the empty shape is not a member", (empty,))
    if carrier not in family:
        return Check(False, "the carrier is not a member", (carrier,))
    members = ordered(family)
    for a, b in combinations(members, 2):
        if a + b not in family:
            return Check(False, f"sum of {a} and {b} is missing", (a, b))
        if a * b not in family:
            return Check(False, f"product of {a} and {b} is missing", (a, b))
    return Check(True)


def _close(seeds, max_opens):
    """Least family containing ``seeds`` closed under pairwise + and ·.

    Each round combines the members known at its start: all pairwise sums,
    then all pairwise products. Pairs already combined in an earlier round
    are skipped, which does not change the fixpoint.
    """
    known = set(seeds)
    if len(known) > max_opens:
        raise GeneratorBudgetExceeded(f"more than {max_opens} open parts")
    fresh = set(known)
    while fresh:
        members = ordered(known)
        found = set()
        for op in (Shape.__add__, Shape.__mul__):
            for a, b in combinations(members, 2):
                if a not in fresh and b not in fresh:
                    continue
                c = op(a, b)
                if c not in known and c not in found:
                    found.add(c)
                    if len(known) + len(found) > max_opens:
                        raise GeneratorBudgetExceeded(
                            f"more than {max_opens} open parts")
        known |= found
        fresh = found
    return known


def generate_topology(parts: Iterable[Shape], carrier: Shape,
                      add_carrier: bool = False,
                      max_opens: int = DEFAULT_MAX_OPENS) -> Topology:
    """The topology generated by the recognized ``parts`` of ``carrier``.

    When the parts do not sum to the carrier, the carrier itself must join
    the generators; pass ``add_carrier=True`` to allow that.
    """
    parts = set(parts)
    if not parts or any(p.is_empty for p in parts):
        raise EmptyGenerator("generators must be a nonempty set of nonempty shapes")
    _require_parts(parts, carrier)
    seeds = parts | {Shape.empty(carrier.kind)}
    if sum_all(parts, carrier.kind) != carrier:
        if not add_carrier:
            raise DoesNotExhaust("generators do not sum to the carrier")
        seeds.add(carrier)
    return Topology._trusted(carrier, _close(seeds, max_opens))


def refine(t: Topology, parts: Iterable[Shape],
           max_opens: int = DEFAULT_MAX_OPENS) -> Topology:
    """Refine ``t`` by newly recognized parts; the result is finer than ``t``."""
    parts = set(parts)
    _require_parts(parts, t.carrier)
    for p in ordered(parts):
        if p in t.opens:
            warnings.warn(AlreadyOpen(f"{p} is already open"), stacklevel=2)
    if parts <= t.opens:
        return t
    return Topology._trusted(t.carrier, _close(t.opens | parts, max_opens))


def _is_sum_of(x: Shape, elements) -> bool:
    # x is a sum of members of `elements` iff it is the sum of those below it
    below = [e for e in elements if e <= x]
    return sum_all(below, x.kind) == x


def is_basis(elements: Iterable[Shape], carrier: Shape) -> Check:
    """Sum of the elements is the carrier, and each pairwise product is an
    element or a sum of elements. The empty shape is ignored."""
    elements = {e for e in elements if not e.is_empty}
    _require_parts(elements, carrier)
    if sum_all(elements, carrier.kind) != carrier:
        return Check(False, "elements do not sum to the carrier")
    members = ordered(elements)
    for a, b in combinations(members, 2):
        c = a * b
        if c.is_empty or c in elements:
            continue
        if not _is_sum_of(c, members):
            return Check(False, f"product of {a} and {b} is not a sum of elements", (a, b))
    return Check(True)


def _as_elements(b, carrier):
    if isinstance(b, Topology):
        return b.carrier, {o for o in b.opens if not o.is_empty}
    if isinstance(b, Basis):
        return b.carrier, set(b.elements)
    b = {e for e in b if not e.is_empty}
    if carrier is None:
        if not b:
            raise NotABasis("cannot infer the carrier of an empty basis")
        carrier = sum_all(b, next(iter(b)).kind)
    return carrier, b


def generate_from_basis(b, carrier: Shape = None,
                        max_opens: int = DEFAULT_MAX_OPENS) -> Topology:
    """All sums of subsets of a basis, the empty sum included."""
    carrier, elements = _as_elements(b, carrier)
    verdict = is_basis(elements, carrier)
    if not verdict:
        raise NotABasis(verdict.reason, verdict.witness)
    opens = {Shape.empty(carrier.kind)}
    for e in ordered(elements):
        opens |= {o + e for o in opens}
        if len(opens) > max_opens:
            raise GeneratorBudgetExceeded(f"more than {max_opens} open parts")
    return Topology._trusted(carrier, opens)


def reduce_basis(b, carrier: Shape = None) -> Basis:
    """The unique minimal basis: drop every element that is a sum of the
    elements strictly below it. Accepts a Topology, a Basis or an iterable
    of shapes."""
    carrier, elements = _as_elements(b, carrier)
    if not isinstance(b, Topology):
        verdict = is_basis(elements, carrier)
        if not verdict:
            raise NotABasis(verdict.reason, verdict.witness)
    kept = set()
    for x in elements:
        below = [e for e in elements if e != x and e <= x]
        if sum_all(below, carrier.kind) != x:
            kept.add(x)
    return Basis(carrier, frozenset(kept), reduced=True)


def is_reduced(b: Basis) -> bool:
    """No element is the sum of two distinct other elements."""
    for x in b.elements:
        others = [e for e in b.elements if e != x]
        for p, q in combinations(others, 2):
            if p + q == x:
                return False
    return True


def subshape_topology(t: Topology, x: Shape) -> Topology:
    """The relativization {x · C : C open} of ``t`` to the part ``x``."""
    _require_parts([x], t.carrier)
    if x.is_empty:
        raise MemberNotPart("subshape topologies need a nonempty part")
    return Topology._trusted(x, {x * c for c in t.opens})


def subshape_basis(b: Basis, x: Shape) -> Basis:
    _require_parts([x], b.carrier)
    if x.is_empty:
        raise MemberNotPart("subshape bases need a nonempty part")
    elements = {x * e for e in b.elements}
    return Basis(x, frozenset(e for e in elements if not e.is_empty))


def covers(family: Iterable[Shape], x: Shape) -> bool:
    return x <= sum_all(family, x.kind)


def exhausts(t: Topology) -> bool:
    return sum_all(t.opens - {t.carrier}, t.carrier.kind) == t.carrier


class Order(enum.Enum):
    FINER = "finer"
    COARSER = "coarser"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _verdict(first_in_second, second_in_first):
    if first_in_second and second_in_first:
        return Order.EQUAL
    if first_in_second:
        return Order.COARSER
    if second_in_first:
        return Order.FINER
    return Order.INCOMPARABLE


def compare(t1: Topology, t2: Topology) -> Order:
    """How ``t1`` relates to ``t2`` (e.g. COARSER: every open of t1 is open in t2)."""
    if t1.carrier != t2.carrier:
        raise CarrierMismatch("topologies live on different shapes")
    return _verdict(t1.opens <= t2.opens, t2.opens <= t1.opens)


def compare_by_bases(b1: Basis, b2: Basis) -> Order:
    """Same verdict as :func:`compare`, decided from two bases: a topology is
    finer when each element of the other basis is a sum of its elements."""
    if b1.carrier != b2.carrier:
        raise CarrierMismatch("bases live on different shapes")
    return _verdict(all(_is_sum_of(e, b2.elements) for e in b1.elements),
                    all(_is_sum_of(e, b1.elements) for e in b2.elements))


def interior(x: Shape, t: Topology) -> Shape:
    """The largest open part embedded in ``x``."""
    _require_parts([x], t.carrier)
    inside = [c for c in t.opens if c <= x]
    for c in inside:
        if all(d <= c for d in inside):
            return c
    raise NotATopology("open parts inside x have no largest member")


def closure(x: Shape, t: Topology) -> Shape:
    """The smallest open part that has ``x`` as a part."""
    _require_parts([x], t.carrier)
    around = [c for c in t.opens if x <= c]
    for c in around:
        if all(c <= d for d in around):
            return c
    raise NotATopology("open parts around x have no smallest member")


def is_open(x: Shape, t: Topology) -> bool:
    return x in t.opens


def is_closed(x: Shape, t: Topology) -> bool:
    _require_parts([x], t.carrier)
    return (t.carrier - x) in t.opens


def is_dense(x: Shape, t: Topology) -> bool:
    """``x`` meets every nonempty open part."""
    _require_parts([x], t.carrier)
    return all(not (x * c).is_empty for c in t.opens if not c.is_empty)


@dataclass(frozen=True)
class PartClass:
    open: bool
    closed: bool
    clopen: bool
    dense: bool
    interior: Shape
    closure: Shape


def classify_part(x: Shape, t: Topology) -> PartClass:
    o, c = is_open(x, t), is_closed(x, t)
    return PartClass(o, c, o and c, is_dense(x, t), interior(x, t), closure(x, t))
