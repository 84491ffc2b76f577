"""SO(3) and SU(2) characters of the genus-2 surface group from triangle data."""

from .rotations import (
    GroupFlavor,
    InvalidInputError,
    Rotation3,
    Spin,
    compose,
    from_axis_angle,
    lift,
    project,
)
from .triangles import (
    AngleTriple,
    ClassificationError,
    DomainError,
    GeneralizedTriangle,
    SixTuple,
    classify_region,
    generalized_triangle,
    standard_position,
    triangle_from_angles,
)
from .multiply import rotations_from_triangle, third_rotation
from .characters import (
    PastingAngles,
    fingerprint,
    stiefel_whitney,
    surface_rep_c0,
    surface_rep_c1,
)
from .actions import (
    ParamPoint,
    Space,
    canonical_fiber_rep,
    klein_axial,
    klein_fiber,
    orbit_double_klein,
)

__version__ = "0.1.0"

__all__ = [
    "AngleTriple", "ClassificationError", "DomainError", "GeneralizedTriangle",
    "GroupFlavor", "InvalidInputError", "ParamPoint", "PastingAngles", "Rotation3",
    "SixTuple", "Space", "Spin", "canonical_fiber_rep", "classify_region", "compose",
    "fingerprint", "from_axis_angle", "generalized_triangle", "klein_axial",
    "klein_fiber", "lift", "orbit_double_klein", "project", "rotations_from_triangle",
    "standard_position", "stiefel_whitney", "surface_rep_c0", "surface_rep_c1",
    "third_rotation", "triangle_from_angles",
]
