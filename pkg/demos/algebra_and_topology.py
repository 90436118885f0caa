"""
Shapes, parts and a small topology
==================================

Two overlapping pieces of one line generate five open parts.
"""

from shapetop import generate_topology, interior, closure, reduce_basis, segments
from shapetop.topology import classify_part

# a line from 0 to 3, and two pieces that overlap in the middle
line = segments((0, 0, 3, 0))
a = segments((0, 0, 2, 0))
b = segments((1, 0, 3, 0))

# collinear segments fuse, so these are single segments again
print("a + b =", a + b)
print("a * b =", a * b)
print("line - a * b =", line - a * b)

# close {a, b} under sum and product
t = generate_topology([a, b], line)
for c in t.members:
    print("open:", c)

# three of the five opens are enough to rebuild the rest
print("reduced basis:", [str(e) for e in reduce_basis(t)])

# a part that is not open sits between its interior and its closure
x = segments(("1/2", 0, "3/2", 0))
print("interior:", interior(x, t), " closure:", closure(x, t))
print(classify_part(x, t))
