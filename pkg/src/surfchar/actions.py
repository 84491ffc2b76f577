"""Klein four-group actions on the parameter spaces.

Two commuting Klein groups act on (angles, pasting angles):

* axial ``I_A, I_B, I_C`` replace two fixed points of a triangle by their
  antipodes, so two angles go to ``pi - theta`` and the matching pasting
  angles to ``m - phi`` (``m`` the pasting modulus);
* fiberwise ``i_a, i_b, i_c`` add ``2pi`` to two pasting angles mod ``4pi``,
  which multiplies two pasting maps by ``-1`` in SU(2).

Both actions preserve the SO(3) character; together they give the 16 points
of a generic SU(2) fiber.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

from .characters import PastingAngles, surface_rep_c0, surface_rep_c1
from .rotations import FOUR_PI, TWO_PI, GroupFlavor, InvalidInputError, reduce_angle
from .triangles import PI, AngleTriple, SixTuple

ORBIT_TOL = 1e-10


class Space(enum.Enum):
    TETRA_C0 = "TetraC0"
    OCTA_C1 = "OctaC1"
    F2 = "F2"

    @classmethod
    def parse(cls, value) -> "Space":
        if isinstance(value, cls):
            return value
        aliases = {"g": cls.TETRA_C0, "o": cls.OCTA_C1, "f2": cls.F2}
        key = str(value).lower()
        for s in cls:
            if s.value.lower() == key:
                return s
        if key in aliases:
            return aliases[key]
        raise InvalidInputError(f"unknown space {value!r}")


@dataclass(frozen=True)
class ParamPoint:
    base: tuple
    pasting: PastingAngles
    space: Space

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(float(x) for x in self.base))
        object.__setattr__(self, "space", Space.parse(self.space))

    @property
    def flavor(self) -> GroupFlavor:
        return GroupFlavor.SO3 if math.isclose(self.pasting.modulus, TWO_PI) else GroupFlavor.SU2


def make_point(base, pasting, space, flavor=GroupFlavor.SU2) -> ParamPoint:
    flavor = GroupFlavor.parse(flavor)
    if not isinstance(pasting, PastingAngles):
        pasting = PastingAngles.for_flavor(pasting, flavor)
    return ParamPoint(tuple(base), pasting, space)


def build_rep(pt: ParamPoint, flavor=None):
    """Surface representation for a point of ``TetraC0`` or ``OctaC1``."""
    flavor = pt.flavor if flavor is None else GroupFlavor.parse(flavor)
    if pt.space is Space.TETRA_C0:
        return surface_rep_c0(pt.base, pt.pasting, flavor)
    if pt.space is Space.OCTA_C1:
        return surface_rep_c1(pt.base, pt.pasting, flavor)
    raise InvalidInputError("F2 points do not define surface representations")


# ----------------------------------------------------------------------------
# axial action
# ----------------------------------------------------------------------------

# indices whose fixed points go to their antipodes
_AXIAL = {"A": (1, 2), "B": (0, 2), "C": (0, 1)}


def _which(which, table):
    # accepts "A", "I_A", "IA" for the axial group and "a", "i_a" for the fiber group
    key = str(which).strip()
    if len(key) > 1:
        key = key[-1]
    key = key.upper() if table is _AXIAL else key.lower()
    if key not in table:
        raise InvalidInputError(f"unknown involution {which!r}")
    return table[key]


def klein_axial_angles(which, t) -> AngleTriple:
    idx = _which(which, _AXIAL)
    return AngleTriple(*(PI - v if i in idx else v for i, v in enumerate(t)))


def klein_axial_six(which, s) -> SixTuple:
    """The axial involution on a six-tuple: two vertices go to their antipodes.

    Negating ``v_j`` and ``v_k`` flips the angles at ``v_j, v_k`` and the
    lengths of the edges ``l_j, l_k`` (each touches exactly one moved vertex).
    """
    idx = _which(which, _AXIAL)
    s = tuple(s)
    ang = [PI - s[i] if i in idx else s[i] for i in range(3)]
    lens = [PI - s[3 + i] if i in idx else s[3 + i] for i in range(3)]
    return SixTuple(*ang, *lens)


def klein_axial_pasting(which, p: PastingAngles) -> PastingAngles:
    idx = _which(which, _AXIAL)
    m = p.modulus
    return PastingAngles(tuple(m - v if i in idx else v for i, v in enumerate(p.phi)), m)


def klein_axial(which, pt: ParamPoint) -> ParamPoint:
    if pt.space is Space.F2:
        raise InvalidInputError("the axial action is not defined on F2 points")
    if len(pt.base) == 6:
        base = klein_axial_six(which, pt.base)
    else:
        base = klein_axial_angles(which, pt.base)
    return ParamPoint(tuple(base), klein_axial_pasting(which, pt.pasting), pt.space)


# ----------------------------------------------------------------------------
# fiberwise action
# ----------------------------------------------------------------------------

_FIBER = {"a": (0, 1), "b": (1, 2), "c": (0, 2)}


def klein_fiber(which, p: PastingAngles) -> PastingAngles:
    idx = _which(which, _FIBER)
    if not math.isclose(p.modulus, FOUR_PI):
        raise InvalidInputError("the fiberwise action needs pasting angles mod 4pi")
    return PastingAngles(tuple(v + TWO_PI if i in idx else v for i, v in enumerate(p.phi)),
                         p.modulus)


def klein_fiber_point(which, pt: ParamPoint) -> ParamPoint:
    return ParamPoint(pt.base, klein_fiber(which, pt.pasting), pt.space)


# ----------------------------------------------------------------------------
# double Klein group
# ----------------------------------------------------------------------------

DOUBLE_KLEIN = tuple(itertools.product((None, "A", "B", "C"), (None, "a", "b", "c")))


def apply_double_klein(element, pt: ParamPoint) -> ParamPoint:
    axial, fiber = element
    if fiber is not None:
        pt = klein_fiber_point(fiber, pt)
    if axial is not None:
        pt = klein_axial(axial, pt)
    return pt


def _circ(a, b, m):
    d = abs(a - b) % m
    return min(d, m - d)


def point_distance(p: ParamPoint, q: ParamPoint) -> float:
    m = p.pasting.modulus
    db = max(abs(a - b) for a, b in zip(p.base, q.base))
    dp = max(_circ(a, b, m) for a, b in zip(p.pasting.phi, q.pasting.phi))
    return max(db, dp)


def orbit_double_klein(pt: ParamPoint, tol: float = ORBIT_TOL):
    """Distinct images of ``pt`` under the 16 elements of the double Klein group."""
    out = []
    for g in DOUBLE_KLEIN:
        q = apply_double_klein(g, pt)
        if all(point_distance(q, r) > tol for r in out):
            out.append(q)
    return out


# ----------------------------------------------------------------------------
# circle actions on faces
# ----------------------------------------------------------------------------

FACE_DIRECTIONS_C0 = {
    "a": (1, 1, 1), "b": (1, -1, 1), "c": (-1, 1, 1), "d": (1, 1, -1),
}

FACE_DIRECTIONS_C1 = {
    "a": (1, 1, 1), "b": (1, -1, 1), "c": (-1, 1, 1), "d": (1, 1, -1),
    "aprime": (1, -1, 1), "bprime": (1, 1, 1), "cprime": (-1, -1, 1), "dprime": (1, -1, -1),
}


def _face_key(face) -> str:
    key = str(face).strip().lower().replace("'", "prime").replace("′", "prime")
    return key


def face_direction(face, space=Space.TETRA_C0):
    space = Space.parse(space)
    table = FACE_DIRECTIONS_C0 if space is Space.TETRA_C0 else FACE_DIRECTIONS_C1
    key = _face_key(face)
    if key not in table:
        raise InvalidInputError(f"unknown face {face!r} for {space.value}")
    return table[key]


def face_circle_action(face, p: PastingAngles, t: float, space=Space.TETRA_C0) -> PastingAngles:
    u = face_direction(face, space)
    return PastingAngles(tuple(v + t * s for v, s in zip(p.phi, u)), p.modulus)


def canonical_fiber_rep(face, p: PastingAngles, space=Space.TETRA_C0) -> PastingAngles:
    """Representative modulo the global ``2pi`` shift and, on a face, its circle.

    On a face the circle moves the first angle freely, so the representative
    has ``phi0 = 0``; elsewhere it is the smaller of ``p`` and
    ``p + (2pi, 2pi, 2pi)`` in lexicographic order.
    """
    m = p.modulus
    key = _face_key(face) if face is not None else "interior"
    if key != "interior":
        u = face_direction(key, space)
        s = -p.phi[0] * u[0]
        return PastingAngles(tuple(v + s * k for v, k in zip(p.phi, u)), m)
    cands = [p.phi]
    if math.isclose(m, FOUR_PI):
        cands.append(tuple(reduce_angle(v + TWO_PI, m) for v in p.phi))
    return PastingAngles(min(cands), m)


# ----------------------------------------------------------------------------
# free group of rank two
# ----------------------------------------------------------------------------

def f2_klein(which, triple, modulus: float = TWO_PI):
    """``T0: (pi - l, m - th0, th1)``, ``T1: (pi - l, th0, m - th1)`` and their product."""
    l, th0, th1 = (float(x) for x in triple)
    key = str(which).upper().replace("_", "")
    if key == "T0":
        out = (PI - l, modulus - th0, th1)
    elif key == "T1":
        out = (PI - l, th0, modulus - th1)
    elif key in ("T0T1", "T1T0"):
        out = (l, modulus - th0, modulus - th1)
    else:
        raise InvalidInputError(f"unknown F2 involution {which!r}")
    return (out[0], reduce_angle(out[1], modulus), reduce_angle(out[2], modulus))


# ----------------------------------------------------------------------------
# fixed loci of the fiberwise involutions
# ----------------------------------------------------------------------------

MID_TIE_INVOLUTION = {"A": "a", "B": "b", "C": "c"}


def mid_tie_fixed_point(region, lune_angle: float, free=(0.0, 0.0)) -> ParamPoint:
    """A point of the ``TetraC0`` fiber over an edge region fixed by its involution.

    Over ``A`` (resp. ``B``, ``C``) the involution ``i_a`` (``i_b``, ``i_c``)
    fixes the circle where the pasting difference that it negates is a
    half-turn about an axis at distance ``pi/2`` from the lune axis.  ``free``
    gives the two pasting angles that stay arbitrary.
    """
    th = float(lune_angle)
    h = 0.5 * PI
    f0, f1 = (float(x) for x in free)
    key = str(region).upper()
    if key == "A":
        base = (th, th, PI, h, h, PI)
        phi = (f0, f1, PI)
    elif key == "B":
        base = (PI, th, th, PI, h, h)
        phi = (PI, f0, f1)
    elif key == "C":
        base = (th, PI, th, h, PI, h)
        phi = (f0, PI, f1)
    else:
        raise InvalidInputError(f"no mid-tie family for region {region!r}")
    return ParamPoint(base, PastingAngles(phi, FOUR_PI), Space.TETRA_C0)
