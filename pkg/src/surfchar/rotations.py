"""Rotations of the sphere and their spin lifts.

Two flavors of group element are used throughout the package:

* ``Rotation3`` wraps an orthogonal 3x3 matrix (SO(3)).
* ``Spin`` wraps a unit quaternion ``(w, x, y, z)`` (SU(2)).

``R(x, t)`` is the counter-clockwise rotation by ``t`` about ``x`` seen from
the tip of ``x`` (right-handed).  The spin of ``R(x, t)`` is
``cos(t/2) + sin(t/2) x``, so a full turn is ``-1`` and two full turns are
``+1``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi
FOUR_PI = 4.0 * math.pi

UNIT_TOL = 1e-9
SEAM_TOL = 1e-12


class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class GroupFlavor(enum.Enum):
    SO3 = "so3"
    SU2 = "su2"

    @property
    def modulus(self) -> float:
        return TWO_PI if self is GroupFlavor.SO3 else FOUR_PI

    @classmethod
    def parse(cls, value) -> "GroupFlavor":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidInputError(f"unknown flavor {value!r}") from None


def reduce_angle(angle: float, modulus: float) -> float:
    """Reduce into ``[0, modulus)``; values within 1e-12 of the seam wrap to 0."""
    r = math.fmod(angle, modulus)
    if r < 0.0:
        r += modulus
    if modulus - r < SEAM_TOL or r < SEAM_TOL:
        return 0.0
    return r


_HALF_PI = 0.5 * math.pi
_QUADRANT = {0.0: (1.0, 0.0), _HALF_PI: (0.0, 1.0), math.pi: (-1.0, 0.0),
             3.0 * _HALF_PI: (0.0, -1.0), TWO_PI: (1.0, 0.0),
             -_HALF_PI: (0.0, -1.0), -math.pi: (-1.0, 0.0)}


def cos_sin(angle: float):
    """``(cos, sin)`` that are exact at the float quadrant angles."""
    hit = _QUADRANT.get(angle)
    if hit is not None:
        return hit
    return math.cos(angle), math.sin(angle)


def unit_vector(v) -> np.ndarray:
    """Normalize ``v`` to a unit 3-vector."""
    a = np.asarray(v, dtype=float).reshape(3)
    n = math.sqrt(float(a @ a))
    if n < 1e-300:
        raise InvalidInputError("zero vector has no direction")
    return a / n


def _check_axis(axis) -> np.ndarray:
    a = np.asarray(axis, dtype=float).reshape(3)
    n = math.sqrt(float(a @ a))
    if abs(n - 1.0) > UNIT_TOL:
        raise InvalidInputError(f"axis is not a unit vector (norm {n!r})")
    return a / n


def _first_nonzero_positive(v, tol=0.0):
    for c in v:
        if abs(c) > tol:
            return c > 0
    return True


# ----------------------------------------------------------------------------
# element types
# ----------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Rotation3:
    """An element of SO(3) stored as a 3x3 matrix."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float).reshape(3, 3)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    flavor = GroupFlavor.SO3

    def __matmul__(self, other: "Rotation3") -> "Rotation3":
        return compose(self, other)

    def inverse(self) -> "Rotation3":
        return Rotation3(self.matrix.T)

    def trace(self) -> float:
        return float(self.matrix[0, 0] + self.matrix[1, 1] + self.matrix[2, 2])

    def apply(self, v) -> np.ndarray:
        return self.matrix @ np.asarray(v, dtype=float)

    def axis_angle(self):
        """Canonical ``(axis, angle)`` with angle in ``[0, pi]``.

        At angle 0 or pi the axis has its first nonzero coordinate positive.
        """
        w, x, y, z = lift(self).q
        s = math.sqrt(x * x + y * y + z * z)
        angle = 2.0 * math.atan2(s, w)
        if s < 1e-15:
            return np.array([1.0, 0.0, 0.0]), 0.0
        axis = np.array([x, y, z]) / s
        if abs(angle - math.pi) < 1e-12 and not _first_nonzero_positive(axis, 1e-12):
            axis = -axis
        return axis, angle

    def __repr__(self):
        axis, angle = self.axis_angle()
        return f"Rotation3(axis={axis.round(12).tolist()}, angle={angle!r})"


@dataclass(frozen=True, eq=False)
class Spin:
    """An element of SU(2) stored as a unit quaternion ``(w, x, y, z)``."""

    q: tuple

    def __post_init__(self):
        q = tuple(float(c) for c in self.q)
        if len(q) != 4:
            raise InvalidInputError("a spin needs four components")
        object.__setattr__(self, "q", q)

    flavor = GroupFlavor.SU2

    def __matmul__(self, other: "Spin") -> "Spin":
        return compose(self, other)

    def __neg__(self) -> "Spin":
        return negate(self)

    def inverse(self) -> "Spin":
        w, x, y, z = self.q
        return Spin((w, -x, -y, -z))

    def trace(self) -> float:
        # trace in the 2x2 complex representation
        return 2.0 * self.q[0]

    def as_array(self) -> np.ndarray:
        return np.array(self.q)

    def axis_angle(self):
        """Normal form ``(axis, angle)`` with angle in ``[0, 2pi]``.

        ``spin(axis, angle)`` reproduces the element; ``angle > 2pi`` forms are
        folded by ``spin(w, t) = spin(-w, 4pi - t)``.
        """
        w, x, y, z = self.q
        s = math.sqrt(x * x + y * y + z * z)
        angle = 2.0 * math.atan2(s, w)
        if s < 1e-15:
            return np.array([1.0, 0.0, 0.0]), angle
        return np.array([x, y, z]) / s, angle

    def __repr__(self):
        return f"Spin({self.q!r})"


# ----------------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------------

def rot3_from_axis_angle(axis, angle: float) -> Rotation3:
    a = _check_axis(axis)
    t = reduce_angle(angle, TWO_PI)
    c, s = cos_sin(t)
    x, y, z = a
    k = 1.0 - c
    return Rotation3(np.array([
        [c + x * x * k, x * y * k - z * s, x * z * k + y * s],
        [y * x * k + z * s, c + y * y * k, y * z * k - x * s],
        [z * x * k - y * s, z * y * k + x * s, c + z * z * k],
    ]))


def spin_from_axis_angle(axis, angle: float) -> Spin:
    a = _check_axis(axis)
    t = reduce_angle(angle, FOUR_PI)
    c, s = cos_sin(0.5 * t)
    return Spin((c, s * a[0], s * a[1], s * a[2]))


def from_axis_angle(axis, angle: float, flavor: GroupFlavor):
    if flavor is GroupFlavor.SO3:
        return rot3_from_axis_angle(axis, angle)
    return spin_from_axis_angle(axis, angle)


def identity(flavor: GroupFlavor):
    if flavor is GroupFlavor.SO3:
        return Rotation3(np.eye(3))
    return Spin((1.0, 0.0, 0.0, 0.0))


def minus_identity() -> Spin:
    return Spin((-1.0, 0.0, 0.0, 0.0))


def flavor_of(g) -> GroupFlavor:
    return g.flavor


# ----------------------------------------------------------------------------
# group law and the double cover
# ----------------------------------------------------------------------------

def _qmul(a, b):
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def compose(a, b):
    """Return ``a . b`` (apply ``b`` first)."""
    if isinstance(a, Spin) and isinstance(b, Spin):
        return Spin(_qmul(a.q, b.q))
    if isinstance(a, Rotation3) and isinstance(b, Rotation3):
        return Rotation3(a.matrix @ b.matrix)
    raise InvalidInputError("cannot compose elements of different flavors")


def product(*gs):
    """Left-to-right product ``g0 . g1 . ...``."""
    out = gs[0]
    for g in gs[1:]:
        out = compose(out, g)
    return out


def inverse(g):
    return g.inverse()


def commutator(a, b):
    return product(a, b, a.inverse(), b.inverse())


def conjugate(g, h):
    """``g h g^-1``."""
    return product(g, h, g.inverse())


def trace(g) -> float:
    return g.trace()


def project(s: Spin) -> Rotation3:
    w, x, y, z = s.q
    return Rotation3(np.array([
        [w * w + x * x - y * y - z * z, 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), w * w - x * x + y * y - z * z, 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), w * w - x * x - y * y + z * z],
    ]))


def lift(r: Rotation3) -> Spin:
    """The sheet with ``w >= 0``; at ``w = 0`` the first nonzero of x, y, z is positive."""
    m = r.matrix
    tr = m[0, 0] + m[1, 1] + m[2, 2]
    # Shepperd: pivot on the largest diagonal entry of the 4x4 symmetric form
    cands = (tr, m[0, 0], m[1, 1], m[2, 2])
    k = max(range(4), key=lambda i: cands[i])
    if k == 0:
        w = 0.5 * math.sqrt(max(1.0 + tr, 0.0))
        f = 0.25 / w
        q = [w, (m[2, 1] - m[1, 2]) * f, (m[0, 2] - m[2, 0]) * f, (m[1, 0] - m[0, 1]) * f]
    elif k == 1:
        x = 0.5 * math.sqrt(max(1.0 + m[0, 0] - m[1, 1] - m[2, 2], 0.0))
        f = 0.25 / x
        q = [(m[2, 1] - m[1, 2]) * f, x, (m[0, 1] + m[1, 0]) * f, (m[0, 2] + m[2, 0]) * f]
    elif k == 2:
        y = 0.5 * math.sqrt(max(1.0 - m[0, 0] + m[1, 1] - m[2, 2], 0.0))
        f = 0.25 / y
        q = [(m[0, 2] - m[2, 0]) * f, (m[0, 1] + m[1, 0]) * f, y, (m[1, 2] + m[2, 1]) * f]
    else:
        z = 0.5 * math.sqrt(max(1.0 - m[0, 0] - m[1, 1] + m[2, 2], 0.0))
        f = 0.25 / z
        q = [(m[1, 0] - m[0, 1]) * f, (m[0, 2] + m[2, 0]) * f, (m[1, 2] + m[2, 1]) * f, z]
    n = math.sqrt(sum(c * c for c in q))
    q = [c / n for c in q]
    # half-turns: w is zero up to rounding, so snap it and use the tie-break
    if abs(q[0]) <= SEAM_TOL:
        q[0] = 0.0
        if not _first_nonzero_positive(q[1:], SEAM_TOL):
            q = [-c for c in q]
        q[0] = 0.0
    elif q[0] < 0.0:
        q = [-c for c in q]
    return Spin(tuple(q))


def negate(s: Spin) -> Spin:
    return Spin(tuple(-c for c in s.q))


def to_so3(g) -> Rotation3:
    return project(g) if isinstance(g, Spin) else g


def rotation_distance(a, b) -> float:
    """Frobenius distance in SO(3); plain 4-vector distance in SU(2)."""
    if isinstance(a, Spin) and isinstance(b, Spin):
        return math.sqrt(sum((x - y) ** 2 for x, y in zip(a.q, b.q)))
    if isinstance(a, Rotation3) and isinstance(b, Rotation3):
        return float(np.linalg.norm(a.matrix - b.matrix))
    raise InvalidInputError("cannot compare elements of different flavors")


def random_unit_vector(rng) -> np.ndarray:
    while True:
        v = rng.normal(size=3)
        n = float(np.linalg.norm(v))
        if n > 1e-6:
            return v / n
