"""
Continuous mappings
===================

Erasing a piece of a line maps one topology onto another. Pulling each
open part back through the mapping gives an open part again.
"""

from shapetop import (Mapping, Subtract, Topology, generate_topology, image,
                      is_continuous, segments)

line = segments((0, 0, 3, 0))
middle = segments((1, 0, 2, 0))
erase = Mapping((Subtract(middle),))

source = generate_topology([segments((0, 0, 2, 0)), segments((1, 0, 3, 0)), middle], line)
target = generate_topology([segments((0, 0, 1, 0)), segments((2, 0, 3, 0))], image(erase, line))

rep = is_continuous(erase, source, target)
print("continuous:", rep.continuous)
for d, pulled in rep.table:
    print(f"  {d}  <-  {pulled}")

# the empty part pulls back to the erased middle, not to the empty part
print("pullback of nothing:", rep.pullback(target.empty))

# the identity is continuous only from a finer topology to a coarser one
print("identity, fine -> coarse:", bool(is_continuous(Mapping(), source, Topology.trivial(line))))
print("identity, coarse -> fine:", bool(is_continuous(Mapping(), Topology.trivial(line), source)))
