import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import interior_g, interior_o, pasting, unit_vectors
from surfchar import rotations as rot
from surfchar.actions import klein_axial_angles
from surfchar.characters import (
    A1,
    B1,
    InconsistencyError,
    PastingAngles,
    WORDS,
    f2_fingerprint,
    f2_rep,
    fingerprint,
    identity_rep,
    other_component_basis,
    pants_rep,
    relation_residual,
    rep_from_generators,
    stiefel_whitney,
    surface_rep_c0,
    surface_rep_c1,
)
from surfchar.rotations import GroupFlavor, InvalidInputError
from surfchar.triangles import DomainError

PI = math.pi
SO3, SU2 = GroupFlavor.SO3, GroupFlavor.SU2
E1 = np.array([1.0, 0.0, 0.0])
H_STAR_FP = (-1, 3, -1, 3, -1, -1, 3, -1, -1, -1, -1, -1)


def dist(g, h):
    return rot.rotation_distance(g, h)


# ---------------------------------------------------------------------------
# pants

def test_octant_pants():
    pr = pants_rep((PI / 2,) * 3, SO3)
    for h in pr.holonomies:
        assert np.allclose(np.abs(h.matrix), np.abs(np.round(h.matrix)), atol=1e-15)
        assert h.trace() == pytest.approx(-1.0)
    assert dist(rot.product(pr.hC, pr.hB, pr.hA), rot.identity(SO3)) < 1e-12


def test_face_a_pants_commute():
    pr = pants_rep((0.0, 0.0, PI), SO3)
    hA, hB, hC = pr.holonomies
    for g, h in ((hA, hB), (hB, hC), (hA, hC)):
        assert dist(rot.product(g, h), rot.product(h, g)) < 1e-12


def test_pants_outside_g_rejected():
    with pytest.raises(DomainError):
        pants_rep((0.1, 0.1, 0.1), SO3)


@given(interior_g(1e-6))
def test_pants_product_and_trace_law(t):
    for fl in GroupFlavor:
        pr = pants_rep(t, fl)
        assert dist(rot.product(pr.hC, pr.hB, pr.hA), rot.identity(fl)) < 1e-9
    so3 = pants_rep(t, SO3)
    for h, th in zip(so3.holonomies, t):
        assert h.trace() == pytest.approx(1 + 2 * math.cos(2 * th), abs=1e-9)


@given(interior_g(1e-3), st.sampled_from("ABC"))
def test_pants_klein_orbit_traces(t, which):
    a = pants_rep(t, SO3).boundary_traces()
    b = pants_rep(klein_axial_angles(which, t), SO3).boundary_traces()
    assert np.allclose(a, b, atol=1e-9)


@given(interior_g(0.05))
def test_pants_four_to_one(t):
    # the planes theta_i = pi/2 hold the fixed points of the axial group
    assume(min(abs(x - PI / 2) for x in t) > 0.05)
    images = [t] + [klein_axial_angles(w, t) for w in "ABC"]
    so3 = [pants_rep(s, SO3).boundary_traces() for s in images]
    su2 = [pants_rep(s, SU2).boundary_traces() for s in images]
    for tr in so3[1:]:
        assert np.allclose(tr, so3[0], atol=1e-9)
    for i in range(4):
        for j in range(i):
            assert max(abs(x - y) for x, y in zip(su2[i], su2[j])) > 1e-6


# ---------------------------------------------------------------------------
# pasting angles

def test_pasting_reduction_and_modulus():
    p = PastingAngles((-1.0, 2 * PI, 7.0))
    assert p.phi == pytest.approx((2 * PI - 1.0, 0.0, 7.0 - 2 * PI))
    q = PastingAngles.for_flavor((5 * PI, 0, 0), SU2)
    assert q.modulus == 4 * PI and q[0] == pytest.approx(PI)
    with pytest.raises(InvalidInputError):
        PastingAngles((0, 0, 0), 3.0)
    with pytest.raises(InvalidInputError):
        PastingAngles((0, 0))


def test_pasting_modulus_must_match_flavor():
    with pytest.raises(InvalidInputError):
        surface_rep_c0((PI / 2,) * 3, PastingAngles((0, 0, 0), 4 * PI), SO3)


# ---------------------------------------------------------------------------
# free group of rank two

@given(st.floats(0, PI), st.floats(0, 2 * PI, exclude_max=True))
def test_f2_trivial_first_angle(l, th1):
    g0, _ = f2_rep(l, 0.0, th1, SO3)
    assert dist(g0, rot.identity(SO3)) == 0.0


def test_f2_orthogonal_half_turns():
    g0, g1 = f2_rep(PI / 2, PI, PI, SO3)
    assert rot.product(g0, g1).trace() == pytest.approx(-1.0, abs=1e-12)
    assert abs(np.dot(g0.axis_angle()[0], g1.axis_angle()[0])) < 1e-12


@given(st.floats(0, 2 * PI), st.floats(0, 2 * PI))
def test_f2_coincident_points_commute(a, b):
    for fl in GroupFlavor:
        got = f2_fingerprint(f2_rep(0.0, a, b, fl))
        want = f2_fingerprint((rot.from_axis_angle(E1, a, fl), rot.from_axis_angle(E1, b, fl)))
        assert got.distance(want) < 1e-12


def test_f2_placement():
    l = 0.7
    _, g1 = f2_rep(l, 0.0, 1.0, SO3)
    axis, ang = g1.axis_angle()
    assert np.allclose(axis, (math.cos(l), math.sin(l), 0.0))
    assert ang == pytest.approx(1.0)


# ---------------------------------------------------------------------------
# the component of the trivial representation

@given(interior_g(1e-6))
def test_c0_zero_pasting(t):
    for fl in GroupFlavor:
        rep = surface_rep_c0(t, (0, 0, 0), fl)
        assert dist(rep.d1, rot.identity(fl)) == 0.0
        assert dist(rep.d2, rot.identity(fl)) == 0.0
        assert relation_residual(rep) < 1e-12
    assert stiefel_whitney(surface_rep_c0(t, (0, 0, 0), SO3)) == 0


def test_c0_octant_half_turn():
    rep = surface_rep_c0((PI / 2,) * 3, (PI, 0, 0), SO3)
    v0 = rep.base_triangles[0].vertices[0]
    assert dist(rep.d1, rot.rot3_from_axis_angle(v0, -PI)) < 1e-12
    assert relation_residual(rep) < 1e-8


@given(interior_g(1e-6), pasting(4 * PI))
def test_c0_relation_and_class(t, p):
    for fl in GroupFlavor:
        rep = surface_rep_c0(t, PastingAngles(p, 4 * PI).phi, fl)
        assert relation_residual(rep) < 1e-8
        assert rep.target_sign == 1
    assert stiefel_whitney(surface_rep_c0(t, p, SO3)) == 0


@given(interior_g(1e-6), pasting(2 * PI))
def test_c0_pasting_structure(t, p):
    rep = surface_rep_c0(t, p, SO3)
    P0, P1, P2 = rep.pasting
    d1, d2 = rep.pasting_differences()
    assert dist(d1, rot.product(P0.inverse(), P1)) == 0.0
    for Pi, x, y in zip(rep.pasting, rep.upper, rep.lower):
        assert dist(rot.product(Pi, x, Pi.inverse()), y) < 1e-9
    # the two pants are literally the same
    assert all(a is b for a, b in zip(rep.upper, rep.lower))


@given(st.floats(-4 * PI, 4 * PI))
def test_c0_face_a_circle(s):
    t = (PI / 3,) * 3
    p = (0.3, 1.1, 2.0)
    for fl in GroupFlavor:
        a = fingerprint(surface_rep_c0(t, p, fl))
        b = fingerprint(surface_rep_c0(t, tuple(x + s for x in p), fl))
        assert a.distance(b) < 1e-9


# ---------------------------------------------------------------------------
# the other component

def test_h_star_is_the_center():
    rep = surface_rep_c1((PI / 2,) * 3, (0, 0, 0), SO3)
    assert np.array_equal(rep.c1.matrix, A1)
    assert np.array_equal(rep.d1.matrix, B1)
    assert np.array_equal(rep.c2.matrix, np.eye(3))
    assert np.array_equal(rep.d2.matrix, np.eye(3))
    assert tuple(fingerprint(rep)) == H_STAR_FP


def test_other_component_basis():
    h = other_component_basis()
    assert h.c1.trace() == -1.0
    assert stiefel_whitney(h) == 1
    assert relation_residual(h) == 0.0
    assert tuple(fingerprint(h)) == H_STAR_FP


def test_c1_outside_o_rejected():
    with pytest.raises(DomainError):
        surface_rep_c1((0.1, 0.1, PI), (0, 0, 0), SO3)


@given(interior_o(1e-6), pasting(4 * PI))
def test_c1_relation_and_class(t, p):
    so3 = surface_rep_c1(t, p, SO3)
    assert relation_residual(so3) < 1e-8
    assert stiefel_whitney(so3) == 1
    su2 = surface_rep_c1(t, p, SU2)
    assert su2.target_sign == -1
    assert dist(su2.relation_word(), rot.minus_identity()) < 1e-8


@given(interior_o(1e-6), pasting(4 * PI))
def test_c1_pasting_consistency(t, p):
    for fl in GroupFlavor:
        rep = surface_rep_c1(t, p, fl)
        for Pi, x, y, sgn in zip(rep.pasting, rep.upper, rep.lower, rep.pasting_signs):
            want = y if sgn > 0 else rot.negate(y)
            assert dist(rot.product(Pi, x, Pi.inverse()), want) < 1e-9
        P0, P1, P2 = rep.pasting
        assert dist(rep.d1, rot.product(P0.inverse(), P1)) < 1e-12


@given(interior_o(1e-3), pasting(2 * PI), st.floats(-2 * PI, 2 * PI))
def test_c1_face_aprime_circle(t, p, s):
    from surfchar.actions import Space, face_circle_action
    from surfchar.harness import sample_face_point
    rng = np.random.default_rng(int(abs(s) * 1e6))
    tf = sample_face_point(rng, "a'", Space.OCTA_C1)
    pa = PastingAngles(p)
    a = fingerprint(surface_rep_c1(tf, pa, SO3))
    b = fingerprint(surface_rep_c1(tf, face_circle_action("a'", pa, s, Space.OCTA_C1), SO3))
    assert a.distance(b) < 1e-8


# ---------------------------------------------------------------------------
# invariants

def test_identity_rep():
    for fl in GroupFlavor:
        assert relation_residual(identity_rep(fl)) == 0.0
    assert stiefel_whitney(identity_rep()) == 0
    assert tuple(fingerprint(identity_rep())) == (3.0,) * 12
    assert len(WORDS) == 12


@given(interior_g(1e-3), pasting(2 * PI))
def test_perturbed_d1_breaks_relation(t, p):
    rep = surface_rep_c0(t, p, SO3)
    kick = rot.rot3_from_axis_angle(E1, 0.1)
    bad = rep_from_generators(rep.c1, rot.product(kick, rep.d1), rep.c2, rep.d2)
    assert relation_residual(bad) > 1e-3


def test_inconsistent_rep_has_no_class():
    kick = rot.rot3_from_axis_angle(E1, 0.5)
    one = rot.identity(SO3)
    rep = rep_from_generators(kick, rot.rot3_from_axis_angle([0, 1, 0], 0.5), one, one)
    with pytest.raises(InconsistencyError):
        stiefel_whitney(rep)


@given(interior_o(1e-6), pasting(4 * PI), unit_vectors(), st.floats(0, 4 * PI))
def test_fingerprint_conjugation_invariance(t, p, axis, ang):
    for fl in GroupFlavor:
        rep = surface_rep_c1(t, p, fl)
        g = rot.from_axis_angle(axis, ang % fl.modulus, fl)
        assert fingerprint(rep).distance(fingerprint(rep.conjugated(g))) < 1e-10


def test_su2_fingerprint_of_so3_rep_rejected():
    with pytest.raises(InvalidInputError):
        fingerprint(identity_rep(SO3), SU2)


@given(interior_g(1e-6), pasting(4 * PI))
def test_su2_projects_to_so3(t, p):
    su2 = surface_rep_c0(t, p, SU2)
    so3 = surface_rep_c0(t, PastingAngles(p, 4 * PI).phi, SO3)
    assert fingerprint(su2, SO3).distance(fingerprint(so3)) < 1e-9
