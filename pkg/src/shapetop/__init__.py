"""Point-free finite topologies on shapes made of points and line segments."""
from .connectedness import (find_separation, is_connected, is_locally_connected,
                            is_totally_disconnected, report)
from .errors import ShapeTopError
from .mappings import Add, Affine, Mapping, Subtract, image, is_continuous, preimage
from .shape import U0, U1, Shape, points, segments
from .space import check_isomorphism, star_topology
from .topology import (Basis, Order, Topology, closure, compare, generate_from_basis,
                       generate_topology, interior, is_basis, is_topology,
                       reduce_basis, subshape_basis, subshape_topology)

__version__ = "0.1.0"
