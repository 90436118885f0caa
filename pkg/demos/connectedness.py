"""
Seeing versus structure
=======================

Whether a drawing hangs together and whether its topology splits are
separate questions. Each of the four combinations happens.
"""

from shapetop import Topology, generate_topology, report, segments

plus = segments((-1, 0, 1, 0), (0, -1, 0, 1))
gap = segments((0, 0, 1, 0), (2, 0, 3, 0))

cases = {
    "plus, nothing recognized": Topology.trivial(plus),
    "plus, arms recognized": generate_topology(
        [segments((-1, 0, 1, 0)), segments((0, -1, 0, 1))], plus),
    "gapped line, nothing recognized": Topology.trivial(gap),
    "gapped line, halves recognized": generate_topology(
        [segments((0, 0, 1, 0)), segments((2, 0, 3, 0))], gap),
}

for name, t in cases.items():
    r = report(t.carrier, t)
    print(f"{name:34s} visual={r.visually_connected!s:5s} "
          f"structural={r.structurally_connected!s:5s}")
    if r.witness:
        print(f"{'':34s} split: {r.witness.c} | {r.witness.d}")
