import random
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from shapetop import sampling
from shapetop.shape import segments

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

# a seed shrinks far better than hypothesis' own Random objects
rngs = st.integers(0, 2**32).map(random.Random)
u1_shapes = rngs.map(sampling.random_u1_shape)
u0_shapes = rngs.map(sampling.random_u0_shape)
topologies = rngs.map(sampling.random_topology)
small_topologies = rngs.map(sampling.random_small_topology)


@pytest.fixture
def fixtures():
    return FIXTURES


@pytest.fixture
def line():
    return segments((0, 0, 3, 0))


@pytest.fixture
def five(line):
    """The topology on [0,3] generated by [0,2] and [1,3]."""
    from shapetop.topology import generate_topology
    return generate_topology([segments((0, 0, 2, 0)), segments((1, 0, 3, 0))], line)
