"""The space of a shape relative to a topology.

Its points are the reduced-basis elements; each open part C becomes the set
of points embedded in C. The resulting set topology is isomorphic to the
lattice of open parts.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .shape import Shape, sum_all
from .topology import Check, Topology, reduce_basis


class SpacePoint(NamedTuple):
    index: int
    shape: Shape


@dataclass(frozen=True)
class SetTopology:
    """A finite set topology on point indices.

    ``open_sets[k]`` corresponds to the k-th open of the source topology in
    canonical order, so the pairing itself can be checked.
    """

    points: tuple
    open_sets: tuple

    @property
    def family(self) -> frozenset:
        return frozenset(self.open_sets)

    def is_topology(self) -> bool:
        fam = self.family
        full = frozenset(range(len(self.points)))
        if frozenset() not in fam or full not in fam:
            return False
        return all(a | b in fam and a & b in fam for a, b in combinations(fam, 2))


def space_of(t: Topology) -> list:
    return [SpacePoint(i, b) for i, b in enumerate(reduce_basis(t).members)]


def star_topology(t: Topology) -> SetTopology:
    pts = tuple(space_of(t))
    sets = tuple(frozenset(p.index for p in pts if p.shape <= c) for c in t.members)
    return SetTopology(pts, sets)


def check_isomorphism(t: Topology, st: SetTopology) -> Check:
    """Is C -> st.open_sets[k] an order isomorphism recovering each C?"""
    opens = t.members
    sets = st.open_sets
    if len(opens) != len(sets):
        return Check(False, f"{len(opens)} opens but {len(sets)} open sets")
    if len(set(sets)) != len(sets):
        dup = next(s for s in sets if sets.count(s) > 1)
        return Check(False, "two opens share one open set", (dup,))
    kind = t.carrier.kind
    shapes = {p.index: p.shape for p in st.points}
    for c, s in zip(opens, sets):
        if c.is_empty != (not s):
            return Check(False, "the empty shape must pair with the empty set", (c, s))
        if sum_all((shapes[i] for i in s), kind) != c:
            return Check(False, f"points of {sorted(s)} do not sum to {c}", (c, s))
    for (c, s), (d, r) in combinations(zip(opens, sets), 2):
        if (c <= d) != (s <= r) or (d <= c) != (r <= s):
            return Check(False, f"order differs between {c} and {d}", (c, d))
    return Check(True)
