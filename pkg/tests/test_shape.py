from fractions import Fraction

import pytest
from hypothesis import given

from shapetop.errors import DegenerateElement, KindMismatch
from shapetop.shape import (U0, U1, Shape, boundary, normalize, points, scalar,
                            segment, segments, touches, visually_connected)

from conftest import u0_shapes, u1_shapes


def seg(*c):
    return segments(c)


def test_overlapping_collinear_segments_merge():
    s = normalize(U1, [segment(0, 0, 2, 0), segment(1, 0, 3, 0)])
    assert s == seg(0, 0, 3, 0)
    assert len(s.elements) == 1


def test_touching_collinear_segments_merge():
    assert seg(0, 0, 1, 0) + seg(1, 0, 2, 0) == seg(0, 0, 2, 0)


def test_contained_segment_is_absorbed():
    s = normalize(U1, [segment(0, 0, 4, 4), segment(1, 1, 2, 2)])
    assert s == seg(0, 0, 4, 4)


def test_crossing_segments_stay_separate():
    s = seg(0, 0, 2, 0) + seg(1, -1, 1, 1)
    assert len(s.elements) == 2


def test_endpoint_order_does_not_matter():
    assert seg(3, 0, 0, 0) == seg(0, 0, 3, 0)


def test_degenerate_segment_rejected():
    with pytest.raises(DegenerateElement):
        segment(1, 1, 1, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        scalar(0.5)
    assert scalar("3/4") == Fraction(3, 4)


def test_worked_algebra():
    a, b = seg(0, 0, 2, 0), seg(1, 0, 3, 0)
    assert a + b == seg(0, 0, 3, 0)
    assert a * b == seg(1, 0, 2, 0)
    assert a - b == seg(0, 0, 1, 0)
    assert seg(0, 0, 3, 0) - seg(1, 0, 2, 0) == seg(0, 0, 1, 0) + seg(2, 0, 3, 0)


def test_product_of_crossing_segments_is_empty():
    # the crossing point has no length, so it is not a U1 part
    assert (seg(0, 0, 2, 0) * seg(1, -1, 1, 1)).is_empty


def test_kinds_do_not_mix():
    with pytest.raises(KindMismatch):
        points((0, 0)) + seg(0, 0, 1, 0)


def test_part_of():
    assert seg(1, 0, 2, 0) <= seg(0, 0, 3, 0)
    assert not seg(1, 0, 4, 0) <= seg(0, 0, 3, 0)
    assert Shape.empty(U1) <= seg(0, 0, 1, 0)


def test_boundary_of_plus_sign():
    plus = seg(-1, 0, 1, 0) + seg(0, -1, 0, 1)
    assert boundary(plus) == points((-1, 0), (1, 0), (0, -1), (0, 1))
    with pytest.raises(KindMismatch):
        boundary(points((0, 0)))


def test_visual_connectedness():
    plus = seg(-1, 0, 1, 0) + seg(0, -1, 0, 1)
    assert visually_connected(plus)
    assert not visually_connected(seg(0, 0, 1, 0) + seg(2, 0, 3, 0))
    assert visually_connected(Shape.empty(U1))
    assert visually_connected(points((1, 1)))
    assert not visually_connected(points((1, 1), (2, 2)))


def test_touches():
    assert touches(seg(0, 0, 1, 0), seg(1, 0, 1, 1))
    assert not touches(seg(0, 0, 1, 0), seg(2, 0, 3, 0))


def test_text_forms():
    s = seg(0, 0, 2, 0)
    assert str(s) == "U1{0 0 2 0}"
    assert "Shape" in repr(s)


@given(u1_shapes, u1_shapes)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(u1_shapes, u1_shapes, u1_shapes)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a + b * c == (a + b) * (a + c)


@given(u1_shapes, u1_shapes)
def test_difference_laws(a, b):
    assert a - (a - b) == a * b
    assert ((a - b) * b).is_empty
    assert (a - b) + a * b == a


@given(u1_shapes)
def test_normal_form_is_stable(a):
    assert normalize(a.kind, a.elements) == a
    assert hash(normalize(a.kind, reversed(a.elements))) == hash(a)


@given(u0_shapes, u0_shapes)
def test_points_behave_like_sets(a, b):
    assert set((a + b).elements) == set(a.elements) | set(b.elements)
    assert set((a * b).elements) == set(a.elements) & set(b.elements)
    assert (a <= b) == (set(a.elements) <= set(b.elements))
