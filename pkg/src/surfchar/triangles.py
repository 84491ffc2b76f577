"""Generalized spherical triangles and their isometry-class coordinates.

A triangle is recorded by its six-tuple ``(v0, v1, v2, l0, l1, l2)`` of vertex
angles and opposite edge lengths.  Vertices run clockwise, which with
right-handed coordinates means ``det(v0, v1, v2) < 0``.

The nondegenerate classes fill the open tetrahedron ``G`` with vertices
``(pi,0,0), (0,pi,0), (0,0,pi), (pi,pi,pi)``.  Its boundary is blown up into
named regions: four faces ``a, b, c, d``, six edge rectangles ``A, A', B, B',
C, C'`` and four vertex triangles ``I, II, III, IV``.

Standard position puts ``v0`` at ``(1,0,0)``, ``v1`` on the half circle ``L``
through ``(0,-1,0)`` and the rest in the upper hemisphere.  Every class,
degenerate or not, is then

    v1 = (cos l2, -sin l2, 0)
    v2 = (cos l1, -sin l1 cos v0, sin l1 sin v0)
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .rotations import InvalidInputError, cos_sin

PI = math.pi

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])
E3 = np.array([0.0, 0.0, 1.0])

ANGLE_TOL = 1e-12
REGION_EPS = 1e-7


class DomainError(InvalidInputError):
    """Input lies outside the domain an operation is defined on."""


class ClassificationError(ValueError):
    """A six-tuple is within tolerance of two regions that do not meet."""

    def __init__(self, tags):
        self.tags = tuple(tags)
        super().__init__("ambiguous region: " + ", ".join(t.value for t in self.tags))


class AngleTriple(NamedTuple):
    t0: float
    t1: float
    t2: float

    @classmethod
    def of(cls, values) -> "AngleTriple":
        vals = [float(v) for v in values]
        if len(vals) != 3:
            raise InvalidInputError("an angle triple has three entries")
        out = []
        for v in vals:
            if v < -ANGLE_TOL or v > PI + ANGLE_TOL or not math.isfinite(v):
                raise InvalidInputError(f"angle {v!r} outside [0, pi]")
            out.append(min(max(v, 0.0), PI))
        return cls(*out)


class SixTuple(NamedTuple):
    v0: float
    v1: float
    v2: float
    l0: float
    l1: float
    l2: float

    @property
    def angles(self) -> AngleTriple:
        return AngleTriple(self.v0, self.v1, self.v2)

    @property
    def lengths(self):
        return (self.l0, self.l1, self.l2)


class TriangleKind(enum.Enum):
    NONDEGENERATE = "Nondegenerate"
    POINTED_LUNE = "PointedLune"
    POINTED_HEMISPHERE = "PointedHemisphere"
    POINTED_SEGMENT = "PointedSegment"
    POINTED_POINT = "PointedPoint"


@dataclass(frozen=True, eq=False)
class GeneralizedTriangle:
    kind: TriangleKind
    vertices: np.ndarray          # rows v0, v1, v2
    angles: AngleTriple
    lengths: tuple
    infinitesimal_dirs: tuple = field(default=(None, None, None))

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float).reshape(3, 3)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def v0(self):
        return self.vertices[0]

    @property
    def v1(self):
        return self.vertices[1]

    @property
    def v2(self):
        return self.vertices[2]

    def moved(self, m) -> "GeneralizedTriangle":
        """Image under the orthogonal matrix ``m`` (orientation preserving)."""
        m = np.asarray(m, dtype=float)
        dirs = tuple(None if d is None else m @ d for d in self.infinitesimal_dirs)
        return GeneralizedTriangle(self.kind, self.vertices @ m.T, self.angles,
                                   self.lengths, dirs)


# ----------------------------------------------------------------------------
# polytopes
# ----------------------------------------------------------------------------

def in_tetrahedron(t, margin: float = 0.0) -> bool:
    a, b, c = t
    return (a + b + c >= PI + margin
            and a >= b + c - PI + margin
            and b >= c + a - PI + margin
            and c >= a + b - PI + margin)


def kappa(t) -> AngleTriple:
    return AngleTriple(t[0], PI - t[1], t[2])


def in_octahedron(t, margin: float = 0.0) -> bool:
    return in_tetrahedron(t, margin) and in_tetrahedron(kappa(t), margin)


def simplex_to_tetra(x) -> AngleTriple:
    """Affine map from ``{x >= 0, sum x <= pi}`` onto ``G``.

    Simplex vertices ``0, pi e0, pi e1, pi e2`` go to ``(pi,pi,pi)``,
    ``(pi,0,0)``, ``(0,pi,0)``, ``(0,0,pi)``.
    """
    x0, x1, x2 = (float(v) for v in x)
    tol = 1e-9
    if min(x0, x1, x2) < -tol or x0 + x1 + x2 > PI + tol:
        raise DomainError("point outside the simplex")
    return AngleTriple(*(min(max(v, 0.0), PI) for v in (PI - x1 - x2, PI - x0 - x2, PI - x0 - x1)))


# ----------------------------------------------------------------------------
# spherical measurements
# ----------------------------------------------------------------------------

def arc_length(a, b) -> float:
    return math.atan2(float(np.linalg.norm(np.cross(a, b))), float(np.dot(a, b)))


def vertex_angle(p, q, r) -> float:
    """Angle at ``p`` between the arcs toward ``q`` and ``r``."""
    tq = q - np.dot(p, q) * p
    tr = r - np.dot(p, r) * p
    return math.atan2(float(np.linalg.norm(np.cross(tq, tr))), float(np.dot(tq, tr)))


def measure_angles(vertices) -> AngleTriple:
    v0, v1, v2 = (np.asarray(v, dtype=float) for v in vertices)
    return AngleTriple(vertex_angle(v0, v1, v2), vertex_angle(v1, v2, v0),
                       vertex_angle(v2, v0, v1))


def measure_lengths(vertices):
    v0, v1, v2 = (np.asarray(v, dtype=float) for v in vertices)
    return (arc_length(v1, v2), arc_length(v2, v0), arc_length(v0, v1))


def _clamped_acos(x: float) -> float:
    return math.acos(min(1.0, max(-1.0, x)))


def lengths_from_angles(t):
    """Edge lengths by the dual law of cosines (nondegenerate angles)."""
    c = [math.cos(v) for v in t]
    s = [math.sin(v) for v in t]
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        out.append(_clamped_acos((c[i] + c[j] * c[k]) / (s[j] * s[k])))
    return tuple(out)


def _standard_vertices(t, lengths):
    _, l1, l2 = lengths
    c0, s0 = cos_sin(t[0])
    c1, s1 = cos_sin(l1)
    c2, s2 = cos_sin(l2)
    v1 = np.array([c2, -s2, 0.0])
    v2 = np.array([c1, -s1 * c0, s1 * s0])
    return np.array([E1, v1, v2])


def triangle_from_angles(t) -> GeneralizedTriangle:
    """Nondegenerate triangle in standard position with the given angles."""
    t = AngleTriple.of(t)
    if not in_tetrahedron(t, 1e-9):
        raise DomainError(f"angles {tuple(t)} are not strictly inside G")
    lengths = lengths_from_angles(t)
    return GeneralizedTriangle(TriangleKind.NONDEGENERATE,
                               _standard_vertices(t, lengths), t, lengths)


def triangle_from_vertices(v0, v1, v2) -> GeneralizedTriangle:
    """Nondegenerate triangle with the given clockwise vertices."""
    vs = np.array([v0, v1, v2], dtype=float)
    for v in vs:
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise InvalidInputError("vertices must be unit vectors")
    if np.linalg.det(vs) > -1e-12:
        raise InvalidInputError("vertices are not in clockwise order")
    return GeneralizedTriangle(TriangleKind.NONDEGENERATE, vs, measure_angles(vs),
                               measure_lengths(vs))


def coordinates(tri: GeneralizedTriangle) -> SixTuple:
    return SixTuple(*tri.angles, *tri.lengths)


# ----------------------------------------------------------------------------
# regions of the blown-up tetrahedron
# ----------------------------------------------------------------------------

class RegionTag(enum.Enum):
    INTERIOR = "Interior"
    a = "a"
    b = "b"
    c = "c"
    d = "d"
    A = "A"
    Aprime = "Aprime"
    B = "B"
    Bprime = "Bprime"
    C = "C"
    Cprime = "Cprime"
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


FACES = (RegionTag.a, RegionTag.b, RegionTag.c, RegionTag.d)
EDGES = (RegionTag.A, RegionTag.Aprime, RegionTag.B, RegionTag.Bprime,
         RegionTag.C, RegionTag.Cprime)
VERTICES = (RegionTag.I, RegionTag.II, RegionTag.III, RegionTag.IV)

# each region is cut out of [0,pi]^6 by linear equations in (v0,v1,v2,l0,l1,l2)
_EQUATIONS = {
    RegionTag.a: lambda v0, v1, v2, l0, l1, l2: (l0, l1, l2, v0 + v1 + v2 - PI),
    RegionTag.b: lambda v0, v1, v2, l0, l1, l2: (l0 - PI, l1, l2 - PI, v1 - v0 - v2 + PI),
    RegionTag.c: lambda v0, v1, v2, l0, l1, l2: (l0, l1 - PI, l2 - PI, v0 - v1 - v2 + PI),
    RegionTag.d: lambda v0, v1, v2, l0, l1, l2: (l0 - PI, l1 - PI, l2, v2 - v0 - v1 + PI),
    RegionTag.A: lambda v0, v1, v2, l0, l1, l2: (v2 - PI, l2 - PI, v0 - v1, l0 + l1 - PI),
    RegionTag.Aprime: lambda v0, v1, v2, l0, l1, l2: (v2, l2, v0 + v1 - PI, l0 - l1),
    RegionTag.B: lambda v0, v1, v2, l0, l1, l2: (v0 - PI, l0 - PI, v1 - v2, l1 + l2 - PI),
    RegionTag.Bprime: lambda v0, v1, v2, l0, l1, l2: (v0, l0, v1 + v2 - PI, l1 - l2),
    RegionTag.C: lambda v0, v1, v2, l0, l1, l2: (v1 - PI, l1 - PI, v0 - v2, l0 + l2 - PI),
    RegionTag.Cprime: lambda v0, v1, v2, l0, l1, l2: (v1, l1, v0 + v2 - PI, l0 - l2),
    RegionTag.I: lambda v0, v1, v2, l0, l1, l2: (v0 - PI, v1 - PI, v2 - PI, l0 + l1 + l2 - 2 * PI),
    RegionTag.II: lambda v0, v1, v2, l0, l1, l2: (v0 - PI, v1, v2, l0 - l1 - l2),
    RegionTag.III: lambda v0, v1, v2, l0, l1, l2: (v1 - PI, v0, v2, l1 - l0 - l2),
    RegionTag.IV: lambda v0, v1, v2, l0, l1, l2: (v2 - PI, v0, v1, l2 - l0 - l1),
}

# pairs of regions that meet; anything else matching together is ambiguous
_INCIDENT = frozenset(frozenset(p) for p in (
    ("a", "Aprime"), ("a", "Bprime"), ("a", "Cprime"), ("a", "II"), ("a", "III"), ("a", "IV"),
    ("b", "A"), ("b", "B"), ("b", "Cprime"), ("b", "I"), ("b", "II"), ("b", "IV"),
    ("c", "A"), ("c", "Bprime"), ("c", "C"), ("c", "I"), ("c", "III"), ("c", "IV"),
    ("d", "Aprime"), ("d", "B"), ("d", "C"), ("d", "I"), ("d", "II"), ("d", "III"),
    ("A", "B"), ("A", "Bprime"), ("A", "C"), ("A", "Cprime"), ("A", "I"), ("A", "IV"),
    ("Aprime", "B"), ("Aprime", "Bprime"), ("Aprime", "C"), ("Aprime", "Cprime"),
    ("Aprime", "II"), ("Aprime", "III"),
    ("B", "C"), ("B", "Cprime"), ("B", "I"), ("B", "II"),
    ("Bprime", "C"), ("Bprime", "Cprime"), ("Bprime", "III"), ("Bprime", "IV"),
    ("C", "I"), ("C", "III"), ("Cprime", "II"), ("Cprime", "IV"),
))


def region_incident(x: RegionTag, y: RegionTag) -> bool:
    return frozenset((x.value, y.value)) in _INCIDENT


def region_equations(tag: RegionTag, s) -> tuple:
    return _EQUATIONS[tag](*s)


@dataclass(frozen=True)
class Region:
    """One region tag, or the regions meeting at an edge or vertex of the diagram."""

    tags: tuple

    @property
    def primary(self) -> RegionTag:
        return self.tags[0]

    @property
    def is_interior(self) -> bool:
        return self.tags == (RegionTag.INTERIOR,)

    @property
    def name(self) -> str:
        if len(self.tags) == 1:
            return self.tags[0].value
        inner = ",".join(t.value for t in self.tags)
        return f"EdgeOf({inner})" if len(self.tags) == 2 else f"VertexOf({inner})"

    def __contains__(self, tag) -> bool:
        return tag in self.tags

    def __str__(self):
        return self.name


_ORDER = {tag: i for i, tag in enumerate(VERTICES + EDGES + FACES)}


def classify_region(s, eps: float = REGION_EPS) -> Region:
    """Region of the blown-up tetrahedron containing the six-tuple ``s``."""
    s = SixTuple(*(float(x) for x in s))
    if any(x < -eps or x > PI + eps for x in s):
        raise DomainError("six-tuple outside [0, pi]^6")
    hits = [tag for tag, eq in _EQUATIONS.items()
            if all(abs(r) <= eps for r in eq(*s))]
    if not hits:
        return Region((RegionTag.INTERIOR,))
    for i, x in enumerate(hits):
        for y in hits[i + 1:]:
            if not region_incident(x, y):
                raise ClassificationError((x, y))
    hits.sort(key=_ORDER.__getitem__)
    return Region(tuple(hits))


def _kind_for(region: Region, s: SixTuple, eps: float) -> TriangleKind:
    if region.is_interior:
        return TriangleKind.NONDEGENERATE
    if max(s.lengths) <= eps:
        return TriangleKind.POINTED_POINT
    tag = region.primary
    if tag is RegionTag.I:
        return TriangleKind.POINTED_HEMISPHERE
    if tag in (RegionTag.II, RegionTag.III, RegionTag.IV,
               RegionTag.Aprime, RegionTag.Bprime, RegionTag.Cprime):
        return TriangleKind.POINTED_SEGMENT
    # lunes: the lune angle decides between segment, lune and hemisphere
    lune_angle = {
        RegionTag.A: s.v0, RegionTag.B: s.v1, RegionTag.C: s.v0,
        RegionTag.b: s.v1, RegionTag.c: s.v0, RegionTag.d: s.v2,
    }[tag]
    if lune_angle <= eps:
        return TriangleKind.POINTED_SEGMENT
    if lune_angle >= PI - eps:
        return TriangleKind.POINTED_HEMISPHERE
    return TriangleKind.POINTED_LUNE


def _rotate_in_plane(v, axis, angle):
    return v * math.cos(angle) + np.cross(axis, v) * math.sin(angle)


def _infinitesimal_dirs(vertices, t, lengths, eps):
    v0, v1, v2 = vertices
    l0, l1, l2 = lengths
    dirs = [None, None, None]
    if l2 <= eps:
        dirs[2] = -E2.copy()
    if l1 <= eps:
        dirs[1] = np.array([0.0, -math.cos(t[0]), math.sin(t[0])])
    if l0 <= eps:
        # direction at v1 making angle t1 with the arc back to v0
        if l2 <= eps:
            back = E2.copy()
        elif l2 >= PI - eps:
            back = -E2.copy()
        else:
            back = E1 - np.dot(v1, E1) * v1
            back /= np.linalg.norm(back)
        d = _rotate_in_plane(back, v1, t[1])
        if d[2] < -1e-12:
            d = _rotate_in_plane(back, v1, -t[1])
        dirs[0] = d
    return tuple(dirs)


def triangle_from_coordinates(s, eps: float = REGION_EPS) -> GeneralizedTriangle:
    """Generalized triangle in standard position for any valid six-tuple."""
    s = SixTuple(*(min(max(float(x), 0.0), PI) for x in s))
    region = classify_region(s, eps)
    if region.is_interior:
        t = s.angles
        if not in_tetrahedron(t, 1e-9):
            raise DomainError("six-tuple is neither degenerate nor a triangle class")
        tri = triangle_from_angles(t)
        if max(abs(a - b) for a, b in zip(tri.lengths, s.lengths)) > 1e-6:
            raise DomainError("lengths disagree with the angles")
        return tri
    verts = _standard_vertices(s.angles, s.lengths)
    return GeneralizedTriangle(_kind_for(region, s, eps), verts, s.angles, s.lengths,
                               _infinitesimal_dirs(verts, s.angles, s.lengths, eps))


_FACE_LENGTHS = ((0.0, 0.0, 0.0), (PI, 0.0, PI), (0.0, PI, PI), (PI, PI, 0.0))


def face_lengths(t, eps: float = 1e-9):
    """Lengths forced by angles on a face of ``G`` (``None`` if not forced).

    Interior angles give the dual-law lengths.  Points on an edge or vertex
    of ``G`` do not determine the lengths and give ``None``.
    """
    t = AngleTriple.of(t)
    if in_tetrahedron(t, eps):
        return lengths_from_angles(t)
    a, b, c = t
    on = [abs(a + b + c - PI) <= eps, abs(b - a - c + PI) <= eps,
          abs(a - b - c + PI) <= eps, abs(c - a - b + PI) <= eps]
    if sum(on) != 1 or not in_tetrahedron(t, -eps):
        return None
    # a, b, c, d in that order
    return _FACE_LENGTHS[on.index(True)]


def representative_lengths(t, eps: float = 1e-9):
    """Lengths for any angles in closed ``G``.

    On an edge or vertex of ``G`` the lengths are free; this picks the forced
    lengths of the first face (in the order a, b, c, d) through ``t``.  The
    pants holonomies do not depend on the choice.
    """
    t = AngleTriple.of(t)
    forced = face_lengths(t, eps)
    if forced is not None:
        return tuple(forced)
    if not in_tetrahedron(t, -eps):
        raise DomainError(f"angles {tuple(t)} outside G")
    a, b, c = t
    on = [abs(a + b + c - PI) <= eps, abs(b - a - c + PI) <= eps,
          abs(a - b - c + PI) <= eps, abs(c - a - b + PI) <= eps]
    return _FACE_LENGTHS[on.index(True)]


def generalized_triangle(base) -> GeneralizedTriangle:
    """Triangle for an angle triple, a six-tuple, or an existing triangle."""
    if isinstance(base, GeneralizedTriangle):
        return base
    vals = tuple(float(x) for x in base)
    if len(vals) == 6:
        return triangle_from_coordinates(vals)
    t = AngleTriple.of(vals)
    if in_tetrahedron(t, 1e-9):
        return triangle_from_angles(t)
    lengths = face_lengths(t)
    if lengths is None:
        raise DomainError(f"angles {tuple(t)} do not determine a triangle class; "
                          "pass a six-tuple")
    return triangle_from_coordinates((*t, *lengths))


# ----------------------------------------------------------------------------
# standard position
# ----------------------------------------------------------------------------

def standard_position(tri: GeneralizedTriangle) -> GeneralizedTriangle:
    """Isometric copy in standard position; idempotent."""
    if tri.kind is not TriangleKind.NONDEGENERATE:
        return triangle_from_coordinates(coordinates(tri))
    v0, v1, _ = tri.vertices
    a = v0 / np.linalg.norm(v0)
    b = v1 - np.dot(a, v1) * a
    b = -b / np.linalg.norm(b)
    frame = np.array([a, b, np.cross(a, b)])
    verts = tri.vertices @ frame.T
    return GeneralizedTriangle(tri.kind, verts, tri.angles, tri.lengths,
                               tuple(None if d is None else frame @ d
                                     for d in tri.infinitesimal_dirs))
