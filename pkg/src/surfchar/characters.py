"""Representations of surface groups built from triangles and pasting angles.

A genus-2 surface is cut into two pairs of pants along curves ``c0, c1, c2``.
Each pants carries the rotations of a triangle; the pasting maps ``P_i``
conjugate the boundary holonomy of the first pants onto the second.  With
``x_i`` the holonomies of the first pants and ``e_i = P0^-1 P_i`` the group is

    < x0, x1, e1, e2 | (e2 x2 e2^-1)(e1 x1 e1^-1) x0 >,   x2 = (x1 x0)^-1.

The builders rewrite this in a standard symplectic basis,

    c1 = e1^-1 e2 x1,   d1 = e1,   c2 = e2 x1 e1^-1 x0,   d2 = e2^-1,

for which ``[c1, d1][c2, d2]`` is conjugate to the relator above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import rotations as rot
from .multiply import rotations_from_triangle
from .rotations import (
    TWO_PI,
    GroupFlavor,
    InvalidInputError,
    Rotation3,
    Spin,
    commutator,
    from_axis_angle,
    identity,
    product,
    reduce_angle,
)
from .triangles import (
    E1,
    E3,
    PI,
    AngleTriple,
    DomainError,
    GeneralizedTriangle,
    generalized_triangle,
    in_octahedron,
    in_tetrahedron,
    kappa,
    representative_lengths,
)

WORDS = ("c1", "c2", "d1", "d2", "c1c2", "c1d1", "c2d2", "d1d2",
         "c1d2", "c2d1", "c1c2d1", "c1c2d1d2")


class InconsistencyError(ValueError):
    """A representation fails a relation it is supposed to satisfy."""


# ----------------------------------------------------------------------------
# pants and pasting angles
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PantsRep:
    hA: object
    hB: object
    hC: object
    angles: AngleTriple
    flavor: GroupFlavor
    triangle: GeneralizedTriangle

    @property
    def holonomies(self):
        return (self.hA, self.hB, self.hC)

    def boundary_traces(self):
        return tuple(h.trace() for h in self.holonomies)


def pants_rep(base, flavor) -> PantsRep:
    """Holonomies ``hA, hB, hC`` with ``hC hB hA = 1`` in either flavor.

    Angles on an edge or vertex of ``G`` use representative lengths.

    In SU(2) the triangle product is ``-1``, so ``hC`` is the negated third
    rotation.
    """
    flavor = GroupFlavor.parse(flavor)
    if not isinstance(base, GeneralizedTriangle) and len(tuple(base)) == 3:
        t = AngleTriple.of(base)
        base = (*t, *representative_lengths(t))
    tri = generalized_triangle(base)
    if not in_tetrahedron(tri.angles, -1e-9):
        raise DomainError("angles outside the tetrahedron")
    rt = rotations_from_triangle(tri, flavor)
    hC = rt.C if flavor is GroupFlavor.SO3 else rot.negate(rt.C)
    return PantsRep(rt.A, rt.B, hC, tri.angles, flavor, tri)


@dataclass(frozen=True)
class PastingAngles:
    phi: tuple
    modulus: float = TWO_PI

    def __post_init__(self):
        vals = tuple(float(x) for x in self.phi)
        if len(vals) != 3:
            raise InvalidInputError("three pasting angles are needed")
        if not (math.isclose(self.modulus, TWO_PI) or math.isclose(self.modulus, 2 * TWO_PI)):
            raise InvalidInputError("pasting modulus must be 2pi or 4pi")
        object.__setattr__(self, "phi", tuple(reduce_angle(v, self.modulus) for v in vals))

    @classmethod
    def for_flavor(cls, phi, flavor) -> "PastingAngles":
        return cls(tuple(phi), GroupFlavor.parse(flavor).modulus)

    def __iter__(self):
        return iter(self.phi)

    def __getitem__(self, i):
        return self.phi[i]

    def shifted(self, delta) -> "PastingAngles":
        return PastingAngles(tuple(a + b for a, b in zip(self.phi, delta)), self.modulus)


def _as_pasting(p, flavor) -> PastingAngles:
    if isinstance(p, PastingAngles):
        if not math.isclose(p.modulus, flavor.modulus):
            raise InvalidInputError("pasting modulus does not match the flavor")
        return p
    return PastingAngles.for_flavor(p, flavor)


# ----------------------------------------------------------------------------
# surface representations
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SurfaceRep:
    """Holonomies of a symplectic generating set plus how they were built.

    ``target`` is the value of ``[c1, d1][c2, d2]``: the identity, or ``-1``
    for the punctured SU(2) builder.  ``upper`` and ``lower`` are the pants
    holonomies ``x_i`` and ``y_i``; the pasting maps satisfy
    ``P_i x_i P_i^-1 = pasting_signs[i] * y_i``.
    """

    c1: object
    d1: object
    c2: object
    d2: object
    flavor: GroupFlavor
    pasting: tuple = None
    upper: tuple = None
    lower: tuple = None
    base_triangles: tuple = ()
    target_sign: int = 1
    pasting_signs: tuple = (1, 1, 1)
    component: str = ""
    angles: tuple = field(default=None)

    @property
    def generators(self):
        return (self.c1, self.d1, self.c2, self.d2)

    def pasting_differences(self):
        """``(P0^-1 P1, P0^-1 P2)``."""
        P0, P1, P2 = self.pasting
        return (product(P0.inverse(), P1), product(P0.inverse(), P2))

    def relation_word(self):
        return product(commutator(self.c1, self.d1), commutator(self.c2, self.d2))

    def target(self):
        one = identity(self.flavor)
        return one if self.target_sign > 0 else rot.negate(one)

    def conjugated(self, g) -> "SurfaceRep":
        def cj(h):
            return None if h is None else product(g, h, g.inverse())

        def cjs(hs):
            return None if hs is None else tuple(cj(h) for h in hs)

        return SurfaceRep(cj(self.c1), cj(self.d1), cj(self.c2), cj(self.d2), self.flavor,
                          cjs(self.pasting), cjs(self.upper), cjs(self.lower),
                          self.base_triangles, self.target_sign, self.pasting_signs,
                          self.component, self.angles)

    def projected(self) -> "SurfaceRep":
        """The SO(3) image of an SU(2) representation."""
        if self.flavor is GroupFlavor.SO3:
            return self

        def pj(hs):
            return None if hs is None else tuple(rot.project(h) for h in hs)

        return SurfaceRep(*(rot.project(g) for g in self.generators), GroupFlavor.SO3,
                          pj(self.pasting), pj(self.upper), pj(self.lower),
                          self.base_triangles, 1, (1, 1, 1), self.component, self.angles)


def symplectic_generators(x0, x1, e1, e2):
    """The dictionary from pants holonomies and pasting differences."""
    e1i = e1.inverse()
    return (product(e1i, e2, x1), e1, product(e2, x1, e1i, x0), e2.inverse())


def surface_rep_from_pants(x, e1, e2, flavor, **meta) -> SurfaceRep:
    c1, d1, c2, d2 = symplectic_generators(x[0], x[1], e1, e2)
    return SurfaceRep(c1, d1, c2, d2, flavor, **meta)


def surface_rep_c0(base, p, flavor) -> SurfaceRep:
    """Representation in the component of the trivial representation.

    Both pants carry the same triangle and ``P_i`` rotates by ``phi_i`` about
    the fixed point ``v_i`` of ``x_i``.
    """
    flavor = GroupFlavor.parse(flavor)
    p = _as_pasting(p, flavor)
    pants = pants_rep(base, flavor)
    tri = pants.triangle
    x = pants.holonomies
    P = tuple(from_axis_angle(tri.vertices[i], p[i], flavor) for i in range(3))
    P0i = P[0].inverse()
    return surface_rep_from_pants(
        x, product(P0i, P[1]), product(P0i, P[2]), flavor,
        pasting=P, upper=x, lower=x, base_triangles=(tri,), target_sign=1,
        pasting_signs=(1, 1, 1), component="C0", angles=(tuple(tri.angles), tuple(p)))


def _standard_arc(v) -> float:
    """Distance from ``(1,0,0)`` along the half circle through ``(0,-1,0)``."""
    return math.atan2(-v[1], v[0])


def surface_rep_c1(base, p, flavor) -> SurfaceRep:
    """Representation in the other component.

    The upper pants uses the triangle with angles ``t`` and the lower one the
    triangle with angles ``(t0, pi - t1, t2)``, both in standard position.
    ``P1`` carries ``v1`` to the antipode of ``v1'`` before rotating, so in
    SU(2) the relation word evaluates to ``-1``: the holonomy around a
    puncture.
    """
    flavor = GroupFlavor.parse(flavor)
    p = _as_pasting(p, flavor)
    up = pants_rep(base, flavor)
    t = up.angles
    if not in_octahedron(t, -1e-9):
        raise DomainError(f"angles {tuple(t)} outside the octahedron")
    lo = pants_rep(kappa(t), flavor)
    tu, tl = up.triangle, lo.triangle
    _, v1, v2 = tu.vertices
    _, w1, w2 = tl.vertices
    swing1 = from_axis_angle(E3, PI - _standard_arc(w1) + _standard_arc(v1), flavor)
    # v2 and v2' lie on the great circle leaving (1,0,0) at angle t0 from L
    normal = np.array([0.0, -math.sin(t[0]), -math.cos(t[0])])
    swing2 = from_axis_angle(normal, tl.lengths[1] - tu.lengths[1], flavor)
    P0 = from_axis_angle(E1, p[0], flavor)
    P1 = product(from_axis_angle(-w1, p[1], flavor), swing1)
    P2 = product(from_axis_angle(w2, p[2], flavor), swing2)
    P0i = P0.inverse()
    su2 = flavor is GroupFlavor.SU2
    return surface_rep_from_pants(
        up.holonomies, product(P0i, P1), product(P0i, P2), flavor,
        pasting=(P0, P1, P2), upper=up.holonomies, lower=lo.holonomies,
        base_triangles=(tu, tl), target_sign=-1 if su2 else 1,
        pasting_signs=(1, -1, 1) if su2 else (1, 1, 1), component="C1",
        angles=(tuple(t), tuple(p)))


A1 = np.diag([1.0, -1.0, -1.0])
B1 = np.diag([-1.0, -1.0, 1.0])


def other_component_basis() -> SurfaceRep:
    """``c1, d1 -> diag(1,-1,-1), diag(-1,-1,1)`` and ``c2, d2 -> 1``."""
    one = Rotation3(np.eye(3))
    return SurfaceRep(Rotation3(A1), Rotation3(B1), one, one, GroupFlavor.SO3,
                      component="basis")


def identity_rep(flavor=GroupFlavor.SO3) -> SurfaceRep:
    flavor = GroupFlavor.parse(flavor)
    one = identity(flavor)
    return SurfaceRep(one, one, one, one, flavor, component="identity")


def rep_from_generators(c1, d1, c2, d2, target_sign: int = 1) -> SurfaceRep:
    flavor = c1.flavor
    return SurfaceRep(c1, d1, c2, d2, flavor, target_sign=target_sign)


# ----------------------------------------------------------------------------
# invariants
# ----------------------------------------------------------------------------

def relation_residual(rep: SurfaceRep) -> float:
    return rot.rotation_distance(rep.relation_word(), rep.target())


def stiefel_whitney(rep: SurfaceRep, tol: float = 1e-6) -> int:
    """0 if the lifted relation is ``+1``, 1 if it is ``-1``."""
    gens = rep.projected().generators
    c1, d1, c2, d2 = (rot.lift(g) for g in gens)
    r = product(commutator(c1, d1), commutator(c2, d2))
    if rot.rotation_distance(r, identity(GroupFlavor.SU2)) < tol:
        return 0
    if rot.rotation_distance(r, rot.minus_identity()) < tol:
        return 1
    raise InconsistencyError("lifted relation is near neither +1 nor -1")


@dataclass(frozen=True)
class Fingerprint:
    values: tuple
    flavor: GroupFlavor

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def distance(self, other: "Fingerprint") -> float:
        return max(abs(a - b) for a, b in zip(self.values, other.values))


def _word(gens, name):
    parts = [name[i:i + 2] for i in range(0, len(name), 2)]
    return product(*(gens[p] for p in parts))


def fingerprint(rep: SurfaceRep, flavor=None) -> Fingerprint:
    """Traces of the fixed word list (3x3 for SO(3), 2x2 complex for SU(2))."""
    flavor = rep.flavor if flavor is None else GroupFlavor.parse(flavor)
    if flavor is GroupFlavor.SO3:
        rep = rep.projected()
    elif rep.flavor is not GroupFlavor.SU2:
        raise InvalidInputError("an SO(3) representation has no SU(2) fingerprint")
    gens = {"c1": rep.c1, "c2": rep.c2, "d1": rep.d1, "d2": rep.d2}
    return Fingerprint(tuple(_word(gens, w).trace() for w in WORDS), flavor)


# ----------------------------------------------------------------------------
# free group of rank two
# ----------------------------------------------------------------------------

F2_WORDS = ("g0", "g1", "g0g1", "g0G1", "g0g0g1", "g0g1g1")


def f2_rep(l: float, th0: float, th1: float, flavor):
    """Rotations by ``th0`` about ``p = (1,0,0)`` and ``th1`` about ``q``.

    ``q = (cos l, sin l, 0)`` lies at distance ``l`` from ``p``.
    """
    flavor = GroupFlavor.parse(flavor)
    q = np.array([math.cos(l), math.sin(l), 0.0])
    return from_axis_angle(E1, th0, flavor), from_axis_angle(q, th1, flavor)


def f2_fingerprint(pair, flavor=None) -> Fingerprint:
    g0, g1 = pair
    flavor = g0.flavor if flavor is None else GroupFlavor.parse(flavor)
    if flavor is GroupFlavor.SO3 and isinstance(g0, Spin):
        g0, g1 = rot.project(g0), rot.project(g1)
    gens = {"g0": g0, "g1": g1, "G1": g1.inverse()}
    return Fingerprint(tuple(_word(gens, w).trace() for w in F2_WORDS), flavor)
