"""
The space of a shape
====================

Members of the reduced basis act as points; each open part becomes the set
of points below it.
"""

from shapetop import generate_topology, segments, star_topology, check_isomorphism
from shapetop.formats import format_space, space_dot

line = segments((0, 0, 3, 0))
t = generate_topology([segments((0, 0, 2, 0)), segments((1, 0, 3, 0))], line)

st = star_topology(t)
print(format_space(st, t.carrier.kind))

# the two lattices have the same shape
print("isomorphic:", bool(check_isomorphism(t, st)))

# Graphviz source for the lattice of open sets
print(space_dot(st))
