"""Mappings between shapes, images, preimages and continuity.

A mapping is a composition of three kinds of step, applied left to right:
an invertible affine map, adding a fixed shape, and erasing a fixed shape.
Each step has a closed-form preimage, so the preimage of a whole mapping
is computed exactly by walking the steps backwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import KindMismatch, NotContinuous, NotOnto
from .shape import U0, Point, Segment, Shape, normalize, scalar
from .topology import Topology, closure


@dataclass(frozen=True)
class Affine:
    """``p -> M p + v`` with an invertible rational 2x2 matrix ``M``."""

    matrix: tuple
    offset: tuple = (Fraction(0), Fraction(0))

    def __post_init__(self):
        (a, b), (c, d) = self.matrix
        m = ((scalar(a), scalar(b)), (scalar(c), scalar(d)))
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "offset", tuple(scalar(v) for v in self.offset))
        if self.det == 0:
            raise ValueError("affine step needs an invertible matrix")

    @property
    def det(self) -> Fraction:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def inverse(self) -> "Affine":
        (a, b), (c, d) = self.matrix
        k = self.det
        m = ((d / k, -b / k), (-c / k, a / k))
        tx, ty = self.offset
        return Affine(m, (-(m[0][0] * tx + m[0][1] * ty), -(m[1][0] * tx + m[1][1] * ty)))

    def map_point(self, p: Point) -> Point:
        (a, b), (c, d) = self.matrix
        tx, ty = self.offset
        return Point(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty)

    def apply(self, s: Shape) -> Shape:
        if s.kind == U0:
            return normalize(U0, [self.map_point(p) for p in s.elements])
        return normalize(s.kind, [Segment(self.map_point(e.a), self.map_point(e.b))
                                  for e in s.elements])


def rotation90() -> Affine:
    return Affine(((0, -1), (1, 0)))


def translation(dx, dy) -> Affine:
    return Affine(((1, 0), (0, 1)), (dx, dy))


@dataclass(frozen=True)
class Add:
    shape: Shape

    def apply(self, s: Shape) -> Shape:
        return s + self.shape


@dataclass(frozen=True)
class Subtract:
    shape: Shape

    def apply(self, s: Shape) -> Shape:
        return s - self.shape


@dataclass(frozen=True)
class PreimageResult:
    """An undefined preimage carries no shape; it is not the empty shape."""

    defined: bool
    shape: Optional[Shape] = None

    def __post_init__(self):
        if self.defined != (self.shape is not None):
            raise ValueError("a shape is present exactly when the preimage is defined")

    def __str__(self):
        return str(self.shape) if self.defined else "undefined"


UNDEFINED = PreimageResult(False)


@dataclass(frozen=True)
class Mapping:
    """Steps applied left to right; the empty mapping is the identity."""

    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        kinds = {s.shape.kind for s in self.steps if not isinstance(s, Affine)}
        if len(kinds) > 1:
            raise KindMismatch("step shapes mix U0 and U1")

    @property
    def kind(self) -> Optional[str]:
        for s in self.steps:
            if not isinstance(s, Affine):
                return s.shape.kind
        return None

    def then(self, other: "Mapping") -> "Mapping":
        """``other`` after ``self``."""
        return Mapping(self.steps + other.steps)

    def __call__(self, x: Shape) -> Shape:
        return image(self, x)


def _check_kind(f: Mapping, x: Shape):
    if f.kind is not None and f.kind != x.kind:
        raise KindMismatch(f"mapping works on {f.kind}, got {x.kind}")


def image(f: Mapping, x: Shape) -> Shape:
    _check_kind(f, x)
    for step in f.steps:
        x = step.apply(x)
    return x


def _step_preimage(step, y: Shape, domain: Shape) -> PreimageResult:
    # largest z <= domain with step(z) <= y
    if isinstance(step, Add):
        if not step.shape <= y:
            return UNDEFINED
        return PreimageResult(True, domain * y)
    if isinstance(step, Subtract):
        return PreimageResult(True, domain * (y + step.shape))
    return PreimageResult(True, domain * step.inverse().apply(y))


def preimage(f: Mapping, y: Shape, domain: Shape) -> PreimageResult:
    """The largest part of ``domain`` whose image is embedded in ``y``."""
    _check_kind(f, y)
    _check_kind(f, domain)
    domains = [domain]
    for step in f.steps[:-1]:
        domains.append(step.apply(domains[-1]))
    result = PreimageResult(True, domain * y) if not f.steps else None
    for step, dom in zip(reversed(f.steps), reversed(domains)):
        result = _step_preimage(step, y, dom)
        if not result.defined:
            return UNDEFINED
        y = result.shape
    return result


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    table: tuple          # (open of the target, PreimageResult) in canonical order
    witness: str = ""
    injective: bool = False

    def __bool__(self):
        return self.continuous

    def pullback(self, d: Shape) -> PreimageResult:
        return dict(self.table)[d]


def is_continuous(f: Mapping, source: Topology, target: Topology) -> ContinuityReport:
    """Is D -> f⁻¹(D) a top-preserving lattice homomorphism from the target's
    opens to the source's opens?"""
    if image(f, source.carrier) != target.carrier:
        raise NotOnto("the mapping does not take the source carrier onto the target carrier")
    opens = target.members
    table = tuple((d, preimage(f, d, source.carrier)) for d in opens)
    pulled = dict(table)

    def report(ok, why=""):
        shapes = [r.shape for _, r in table if r.defined]
        injective = len(set(shapes)) == len(table)
        return ContinuityReport(ok, table, why, injective)

    for d, r in table:
        if not r.defined:
            return report(False, f"preimage of open {d} is undefined")
    for d, r in table:
        if r.shape not in source.opens:
            return report(False, f"preimage {r.shape} of open {d} is not open")
    for c, d in combinations(opens, 2):
        pc, pd = pulled[c].shape, pulled[d].shape
        if pulled[c * d].shape != pc * pd:
            return report(False, f"products of {c} and {d} are not preserved")
        if pulled[c + d].shape != pc + pd:
            return report(False, f"sums of {c} and {d} are not preserved")
    if pulled[target.carrier].shape != source.carrier:
        return report(False, "the top element is not preserved")
    return report(True)


def check_closure_image(f: Mapping, x: Shape, source: Topology, target: Topology) -> bool:
    """Does f(closure(x)) embed in closure(f(x))? Always true for continuous f."""
    if not is_continuous(f, source, target):
        raise NotContinuous("closure-image inequality needs a continuous mapping")
    return image(f, closure(x, source)) <= closure(image(f, x), target)
