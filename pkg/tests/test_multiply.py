import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import interior_g, unit_vectors
from surfchar import rotations as rot
from surfchar.multiply import (
    IdentityWithFreeVertex,
    Unique,
    rotations_from_triangle,
    third_angle,
    third_rotation,
)
from surfchar.rotations import GroupFlavor, InvalidInputError
from surfchar.triangles import (
    GeneralizedTriangle,
    TriangleKind,
    triangle_from_angles,
    triangle_from_coordinates,
    vertex_angle,
)

PI = math.pi
E1, E2, E3 = np.eye(3)
SO3, SU2 = GroupFlavor.SO3, GroupFlavor.SU2


def target(fl):
    return rot.identity(fl) if fl is SO3 else rot.minus_identity()


def oracle(v0, a0, v1, a1, fl):
    A = rot.from_axis_angle(v0, a0, fl)
    B = rot.from_axis_angle(v1, a1, fl)
    return rot.product(target(fl), A.inverse(), B.inverse())


# ---------------------------------------------------------------------------
# triangles to rotations

def test_octant_triangle_so3():
    rt = rotations_from_triangle(triangle_from_angles((PI / 2,) * 3), SO3)
    for g in (rt.A, rt.B, rt.C):
        m = g.matrix
        assert np.allclose(np.abs(m), np.abs(np.round(m)), atol=1e-15)
        assert g.trace() == pytest.approx(-1.0)
    assert np.allclose(rt.product().matrix, np.eye(3), atol=1e-15)


def test_octant_triangle_su2_gives_minus_one():
    rt = rotations_from_triangle(triangle_from_angles((PI / 2,) * 3), SU2)
    assert np.allclose(rt.product().q, (-1, 0, 0, 0), atol=1e-15)


def test_pointed_point_shares_axis():
    tri = triangle_from_coordinates((PI / 4, PI / 4, PI / 2, 0, 0, 0))
    assert tri.kind is TriangleKind.POINTED_POINT
    rt = rotations_from_triangle(tri, SO3)
    axes = [g.axis_angle()[0] for g in (rt.A, rt.B, rt.C)]
    for a in axes[1:]:
        assert abs(abs(np.dot(a, axes[0])) - 1.0) < 1e-12
    assert rot.rotation_distance(rt.product(), rot.identity(SO3)) < 1e-12


@given(interior_g(1e-6), unit_vectors(), st.floats(0, 2 * PI))
def test_cba_identity(t, axis, angle):
    tri = triangle_from_angles(t).moved(rot.rot3_from_axis_angle(axis, angle).matrix)
    for fl in GroupFlavor:
        rt = rotations_from_triangle(tri, fl)
        assert rot.rotation_distance(rt.product(), rt.target()) < 1e-9


def test_counter_clockwise_triangle_rejected():
    tri = triangle_from_angles((PI / 2,) * 3)
    flipped = GeneralizedTriangle(tri.kind, tri.vertices[::-1], tri.angles, tri.lengths)
    with pytest.raises(InvalidInputError):
        rotations_from_triangle(flipped, SO3)


# ---------------------------------------------------------------------------
# third factor: examples

def test_same_axis_quarter_turns():
    n = np.array([0.0, 0.6, 0.8])
    for fl in GroupFlavor:
        res = third_rotation(n, PI / 2, n, PI / 2, fl)
        assert isinstance(res, Unique) and res.case == "coincident"
        assert np.allclose(res.v2, n) and res.phi2 == pytest.approx(PI)


def test_two_orthogonal_half_turns():
    for fl in GroupFlavor:
        res = third_rotation(E1, PI, E2, PI, fl)
        assert isinstance(res, Unique)
        assert abs(abs(res.v2[2]) - 1.0) < 1e-12 and res.phi2 == pytest.approx(PI)
        assert rot.rotation_distance(res.element(fl), oracle(E1, PI, E2, PI, fl)) < 1e-12


@given(unit_vectors(), unit_vectors(), st.floats(1e-3, 2 * PI - 1e-3))
def test_trivial_first_factor(v0, m, theta):
    res = third_rotation(v0, 0.0, m, theta, SU2)
    assert res.case == "first-trivial"
    assert np.allclose(res.v2, m) and res.phi2 == pytest.approx(2 * PI - theta)
    so3 = third_rotation(v0, 0.0, m, theta, SO3)
    assert rot.rotation_distance(so3.element(SO3), rot.rot3_from_axis_angle(m, 2 * PI - theta)) < 1e-12


def test_both_trivial_loci():
    res = third_rotation(E1, 0.0, E2, 0.0, SO3)
    assert isinstance(res, IdentityWithFreeVertex)
    assert res.phi2 == 0.0
    assert np.allclose(res.locus[0], E1) and np.allclose(res.locus[1], E2)
    res = third_rotation(E1, 0.0, E1, 0.0, SO3)
    assert res.locus == "anywhere"
    # SU(2): the identity is 4pi, -1 is 2pi; the product must be -1
    res = third_rotation(E1, 0.0, E2, 0.0, SU2)
    assert res.phi2 == 2 * PI and res.element(SU2).q == (-1.0, 0.0, 0.0, 0.0)
    res = third_rotation(E1, 2 * PI, E2, 0.0, SU2)
    assert res.phi2 == 0.0 and res.element(SU2).q == (1.0, 0.0, 0.0, 0.0)


def test_antipodal_fixed_points():
    for fl in GroupFlavor:
        res = third_rotation(E1, 1.0, -E1, 0.4, fl)
        assert res.case == "antipodal"
        assert rot.rotation_distance(res.element(fl), oracle(E1, 1.0, -E1, 0.4, fl)) < 1e-12


def test_coincident_rule_in_rotation_angles():
    # the third rotation angle is 2pi - phi0 - phi1
    res = third_rotation(E3, 0.5, E3, 0.7, SO3)
    assert res.case == "coincident"
    want = rot.rot3_from_axis_angle(E3, 2 * PI - 1.2)
    assert rot.rotation_distance(res.element(SO3), want) < 1e-12


# ---------------------------------------------------------------------------
# third factor: oracle

ANGLE = st.floats(0.0, 4 * PI, exclude_max=True)


@given(unit_vectors(), ANGLE, unit_vectors(), ANGLE)
def test_oracle_random(v0, a0, v1, a1):
    for fl in GroupFlavor:
        x0, x1 = a0 % fl.modulus, a1 % fl.modulus
        res = third_rotation(v0, x0, v1, x1, fl)
        assert rot.rotation_distance(res.element(fl), oracle(v0, x0, v1, x1, fl)) < 1e-9


TRIVIAL = st.sampled_from([0.0, 2 * PI])


@given(unit_vectors(), TRIVIAL, unit_vectors(), ANGLE)
def test_oracle_first_trivial(v0, a0, v1, a1):
    res = third_rotation(v0, a0, v1, a1, SU2)
    assert rot.rotation_distance(res.element(SU2), oracle(v0, a0, v1, a1, SU2)) < 1e-9


@given(unit_vectors(), ANGLE, unit_vectors(), TRIVIAL)
def test_oracle_second_trivial(v0, a0, v1, a1):
    res = third_rotation(v0, a0, v1, a1, SU2)
    assert rot.rotation_distance(res.element(SU2), oracle(v0, a0, v1, a1, SU2)) < 1e-9


@given(unit_vectors(), ANGLE, ANGLE, st.booleans())
def test_oracle_shared_axis(v, a0, a1, flip):
    v1 = -v if flip else v
    for fl in GroupFlavor:
        x0, x1 = a0 % fl.modulus, a1 % fl.modulus
        res = third_rotation(v, x0, v1, x1, fl)
        assert rot.rotation_distance(res.element(fl), oracle(v, x0, v1, x1, fl)) < 1e-9


@given(interior_g(1e-4))
def test_third_factor_is_the_third_vertex(t):
    tri = triangle_from_angles(t)
    v0, v1, v2 = tri.vertices
    for fl in GroupFlavor:
        res = third_rotation(v0, 2 * t[0], v1, 2 * t[1], fl)
        assert res.case == "generic"
        same = np.allclose(res.v2, v2, atol=1e-8) and abs(res.phi2 - 2 * t[2]) < 1e-8
        flipped = (np.allclose(res.v2, -v2, atol=1e-8)
                   and abs(res.phi2 - (fl.modulus - 2 * t[2])) < 1e-8)
        assert same or flipped


def test_non_unit_input_rejected():
    with pytest.raises(InvalidInputError):
        third_rotation([2.0, 0, 0], 1.0, E2, 1.0, SO3)


# ---------------------------------------------------------------------------
# third angle

def test_third_angle_examples():
    assert third_angle(PI / 2, PI / 2, PI / 2) == pytest.approx(PI / 2)
    assert third_angle(2 * PI / 3, 2 * PI / 3, PI / 2) == pytest.approx(math.acos(-0.25))
    assert math.acos(-0.25) == pytest.approx(1.823477, abs=1e-6)
    # two right angles on a point: the angles sum to pi
    assert third_angle(PI / 2, PI / 2, 0.0) == 0.0


def test_third_angle_rejects_nan():
    with pytest.raises(ArithmeticError):
        third_angle(float("nan"), 1.0, 1.0)


@given(interior_g(1e-6))
def test_third_angle_matches_construction(t):
    tri = triangle_from_angles(t)
    v0, v1, v2 = tri.vertices
    assert third_angle(t[0], t[1], tri.lengths[2]) == pytest.approx(t[2], abs=1e-9)
    assert vertex_angle(v2, v0, v1) == pytest.approx(t[2], abs=1e-9)
