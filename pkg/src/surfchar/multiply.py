"""Multiplication by geometry.

A clockwise triangle with vertices ``v_i`` and angles ``theta_i`` gives three
rotations ``A = R(v0, 2 theta0)``, ``B = R(v1, 2 theta1)`` and
``C = R(v2, 2 theta2)`` with ``C B A = 1`` in SO(3).  The spin lifts of the
same rotations satisfy ``C B A = -1``.

``third_rotation`` runs this backwards: given the first two factors it
recovers the third one from spherical geometry and a case table.  All angles
taken or returned there are rotation angles (twice the triangle angles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rotations import (
    TWO_PI,
    GroupFlavor,
    InvalidInputError,
    from_axis_angle,
    identity,
    minus_identity,
    product,
    reduce_angle,
)
from .triangles import GeneralizedTriangle, arc_length

COINCIDE_TOL = 1e-12
ZERO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class RotationTriple:
    A: object
    B: object
    C: object
    source: GeneralizedTriangle
    flavor: GroupFlavor

    def product(self):
        return product(self.C, self.B, self.A)

    def target(self):
        return identity(self.flavor) if self.flavor is GroupFlavor.SO3 else minus_identity()


def rotations_from_triangle(tri: GeneralizedTriangle, flavor: GroupFlavor) -> RotationTriple:
    if not isinstance(tri, GeneralizedTriangle):
        raise InvalidInputError("expected a GeneralizedTriangle")
    v = tri.vertices
    if tri.kind.value == "Nondegenerate" and np.linalg.det(v) > 1e-9:
        raise InvalidInputError("triangle vertices are not clockwise")
    A, B, C = (from_axis_angle(v[i], 2.0 * tri.angles[i], flavor) for i in range(3))
    return RotationTriple(A, B, C, tri, flavor)


def third_angle(Aang: float, Bang: float, c: float) -> float:
    """Angle opposite ``c`` in the triangle with angles ``Aang, Bang`` at its ends."""
    x = -math.cos(Aang) * math.cos(Bang) + math.sin(Aang) * math.sin(Bang) * math.cos(c)
    if not abs(x) <= 1.0 + 1e-12:
        raise ArithmeticError(f"cosine {x!r} outside [-1, 1]")
    return math.acos(min(1.0, max(-1.0, x)))


# ----------------------------------------------------------------------------
# third factor
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Unique:
    """The third factor is ``R(v2, phi2)`` in normal form."""

    v2: np.ndarray
    phi2: float
    case: str

    def element(self, flavor):
        return from_axis_angle(self.v2, self.phi2, flavor)


@dataclass(frozen=True, eq=False)
class IdentityWithFreeVertex:
    """The third factor is ``+-1``; its fixed point is not determined.

    ``phi2`` is 0 for the identity and ``2 pi`` for ``-1`` (SU(2) only).
    ``locus`` is either ``"anywhere"`` or a pair of segment endpoints.
    """

    phi2: float
    locus: object
    case: str

    def element(self, flavor):
        if flavor is GroupFlavor.SU2 and self.phi2 != 0.0:
            return minus_identity()
        return identity(flavor)


def _split(phi: float, flavor: GroupFlavor):
    """Return ``(sign, angle)`` with ``R(v, phi) = sign * R(v, angle)`` and angle in [0, 2pi)."""
    phi = reduce_angle(phi, flavor.modulus)
    if phi >= TWO_PI - ZERO_TOL:
        phi -= TWO_PI
        if phi < ZERO_TOL:
            return -1, 0.0
        return -1, phi
    return 1, phi


def _canonical(v, phi, flavor, case):
    """Normal form: angle in ``[0, pi]`` for SO(3), ``[0, 2pi]`` for SU(2)."""
    v = np.asarray(v, dtype=float)
    v = v / np.linalg.norm(v)
    half = flavor.modulus / 2.0
    phi = reduce_angle(phi, flavor.modulus)
    if phi > half:
        v, phi = -v, flavor.modulus - phi
    if phi < ZERO_TOL:
        return IdentityWithFreeVertex(0.0, "anywhere", case)
    if flavor is GroupFlavor.SU2 and abs(phi - TWO_PI) < ZERO_TOL:
        return IdentityWithFreeVertex(TWO_PI, "anywhere", case)
    if abs(phi - half) < 1e-12:
        for c in v:
            if abs(c) > 1e-12:
                if c < 0:
                    v = -v
                break
    return Unique(v, phi, case)


def _free(sign, locus, case):
    return IdentityWithFreeVertex(0.0 if sign > 0 else TWO_PI, locus, case)


def _tangent(p, q):
    t = q - np.dot(p, q) * p
    return t / np.linalg.norm(t)


def triangle_vertex(v0, th0, v1, th1):
    """Third vertex of the clockwise triangle with angles ``th0, th1`` at ``v0, v1``."""
    t01 = _tangent(v0, v1)
    t10 = _tangent(v1, v0)
    u0 = t01 * math.cos(th0) - np.cross(v0, t01) * math.sin(th0)
    u1 = t10 * math.cos(th1) + np.cross(v1, t10) * math.sin(th1)
    w = np.cross(np.cross(v0, u0), np.cross(v1, u1))
    w /= np.linalg.norm(w)
    if np.dot(w, u0) < 0:
        w = -w
    return w


def third_rotation(v0, phi0, v1, phi1, flavor: GroupFlavor):
    """Third factor ``C`` with ``C R(v1, phi1) R(v0, phi0) = 1`` (SO(3)) or ``-1`` (SU(2))."""
    flavor = GroupFlavor.parse(flavor)
    v0 = np.asarray(v0, dtype=float)
    v1 = np.asarray(v1, dtype=float)
    for v in (v0, v1):
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise InvalidInputError("fixed points must be unit vectors")
    v0 = v0 / np.linalg.norm(v0)
    v1 = v1 / np.linalg.norm(v1)
    # A = s0 R(v0, a0), B = s1 R(v1, a1) with a in [0, 2pi); target is -1 in SU(2)
    s0, a0 = _split(phi0, flavor)
    s1, a1 = _split(phi1, flavor)
    sign = -s0 * s1 if flavor is GroupFlavor.SU2 else 1
    zero0, zero1 = a0 == 0.0, a1 == 0.0
    d = arc_length(v0, v1)

    if zero0 and zero1:
        if d < COINCIDE_TOL:
            locus = "anywhere"
        else:
            locus = (v0, v1) if s0 == s1 else ((v0, -v1) if s0 > 0 else (-v0, v1))
        return _free(sign, locus, "both-trivial")
    if zero0:
        # C = sign * R(v1, -a1)
        return _canonical(v1, (TWO_PI if sign < 0 else 0.0) - a1, flavor, "first-trivial")
    if zero1:
        return _canonical(v0, (TWO_PI if sign < 0 else 0.0) - a0, flavor, "second-trivial")
    if d < COINCIDE_TOL:
        return _canonical(v0, (TWO_PI if sign < 0 else 0.0) - a0 - a1, flavor, "coincident")
    if math.pi - d < COINCIDE_TOL:
        # R(v1, a1) = R(v0, -a1)
        return _canonical(v0, (TWO_PI if sign < 0 else 0.0) - a0 + a1, flavor, "antipodal")

    th0, th1 = 0.5 * a0, 0.5 * a1
    v2 = triangle_vertex(v0, th0, v1, th1)
    th2 = third_angle(th0, th1, d)
    # the triangle gives C_geom with C_geom B' A' = 1 (SO3) or -1 (SU2)
    phi2 = 2.0 * th2
    if flavor is GroupFlavor.SU2 and s0 * s1 < 0:
        phi2 += TWO_PI
    return _canonical(v2, phi2, flavor, "generic")

