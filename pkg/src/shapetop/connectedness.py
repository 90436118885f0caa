"""Structural connectedness of shapes under a topology.

Structural connectedness depends only on the open parts; visual
connectedness (touching elements) depends only on the drawing. The two are
independent, and :func:`report` puts them side by side.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Optional

from .errors import CarrierMismatch
from .shape import Shape, visually_connected
from .topology import Check, Topology, reduce_basis, subshape_topology


class Separation(NamedTuple):
    c: Shape
    d: Shape


def find_separation(t: Topology) -> Optional[Separation]:
    """Two disjoint nonempty opens summing to the carrier, if any.

    A separation is always (C, S - C), so it is enough to look for a proper
    open whose relative complement is open as well.
    """
    for c in t.members:
        if c.is_empty or c == t.carrier:
            continue
        rest = t.carrier - c
        if rest in t.opens:
            return Separation(c, rest)
    return None


def is_connected(t: Topology) -> bool:
    return find_separation(t) is None


def is_connected_part(x: Shape, t: Topology) -> bool:
    """Is ``x`` connected in its subshape topology?"""
    return find_separation(subshape_topology(t, x)) is None


def is_locally_connected(t: Topology) -> Check:
    for c in t.members:
        if c.is_empty:
            continue
        sep = find_separation(subshape_topology(t, c))
        if sep is not None:
            return Check(False, f"not locally connected at {c}", (c, sep))
    return Check(True)


def _complemented(c: Shape, t: Topology) -> bool:
    # search for a lattice complement rather than computing S - c
    return any((c * d).is_empty and c + d == t.carrier for d in t.opens)


def boolean_algebra(t: Topology) -> bool:
    """Is the lattice of opens a Boolean algebra with bottom 0 and top S?"""
    if t.empty not in t.opens or t.carrier not in t.opens:
        return False
    members = t.members
    if not all(_complemented(c, t) for c in members):
        return False
    # distributivity over index tables, so each shape operation runs once
    index = {c: i for i, c in enumerate(members)}
    meet = [[index[a * b] for b in members] for a in members]
    join = [[index[a + b] for b in members] for a in members]
    n = len(members)
    return all(meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
               for a, b, c in product(range(n), repeat=3))


@dataclass(frozen=True)
class EquivalenceReport:
    """The four characterizations of a totally disconnected topology.

    On the trivial topology {0, S} the three structural conditions hold
    vacuously while the shape is connected, so conditions (2)-(4) also
    require ``T`` to be nontrivial; ``trivial`` records that case.
    """

    definition: bool        # (1) S disconnected; only reduced-basis opens connected
    disjoint_basis: bool    # (2) reduced basis is pairwise disjoint
    all_clopen: bool        # (3) every open is closed-open
    boolean: bool           # (4) opens form a finite Boolean algebra
    trivial: bool

    @property
    def conditions(self) -> tuple:
        return (self.definition, self.disjoint_basis, self.all_clopen, self.boolean)

    @property
    def agree(self) -> bool:
        return len(set(self.conditions)) == 1

    @property
    def totally_disconnected(self) -> bool:
        return self.definition

    def __bool__(self):
        return self.definition


def is_totally_disconnected(t: Topology) -> EquivalenceReport:
    basis = reduce_basis(t).elements
    trivial = len(t.opens) <= 2

    connected_opens = {c for c in t.opens
                       if not c.is_empty and is_connected_part(c, t)}
    definition = find_separation(t) is not None and connected_opens == set(basis)

    disjoint = all((a * b).is_empty for a, b in combinations(basis, 2))
    clopen = all((t.carrier - c) in t.opens for c in t.opens)
    boolean = boolean_algebra(t)
    return EquivalenceReport(definition, disjoint and not trivial,
                             clopen and not trivial, boolean and not trivial,
                             trivial)


@dataclass(frozen=True)
class ConnectivityReport:
    structurally_connected: bool
    witness: Optional[Separation]
    visually_connected: bool
    locally_connected: bool
    totally_disconnected: bool


def report(s: Shape, t: Topology) -> ConnectivityReport:
    if t.carrier != s:
        raise CarrierMismatch("the topology is not on this shape")
    sep = find_separation(t)
    return ConnectivityReport(
        structurally_connected=sep is None,
        witness=sep,
        visually_connected=visually_connected(s),
        locally_connected=bool(is_locally_connected(t)),
        totally_disconnected=is_totally_disconnected(t).definition,
    )
