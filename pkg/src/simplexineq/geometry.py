"""Triangle and tetrahedron shapes: validated construction and derived quantities.

Shapes are immutable and validated once, at construction; every function in
this module may therefore assume its inputs are geometrically realizable.
All quantities are computed in binary64.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

# Validity thresholds are relative to a scale power of the shape so that
# acceptance is invariant under uniform rescaling.
EPS_TRI = 1e-12  # triangle slack a+b-c, relative to the face perimeter
EPS_VOL = 1e-12  # Cayley-Menger determinant, relative to (mean edge)**6

# Edge labeling: vertices A, B, C, D with
#   a1=AB, a2=BC, a3=CA, a4=AD, a5=CD, a6=BD.
# The four faces, as index triples into the edge tuple, in fixed order
# ABC, ACD, ABD, BCD:
FACE_EDGE_INDICES = ((0, 1, 2), (2, 3, 4), (0, 3, 5), (1, 4, 5))

# Pairs of edges that share no vertex: (AB,CD), (BC,AD), (CA,BD).
OPPOSITE_EDGE_PAIRS = ((0, 4), (1, 3), (2, 5))

EDGE_NAMES = ("a1", "a2", "a3", "a4", "a5", "a6")


class InvalidShapeError(ValueError):
    """Edge lengths do not define a valid shape."""


class InvalidTriangleError(InvalidShapeError):
    """Three lengths are not the sides of a nondegenerate triangle."""


class NonRealizableError(InvalidShapeError):
    """Six edge lengths admit no embedding as a nondegenerate tetrahedron."""


def is_valid_triangle(a: float, b: float, c: float) -> bool:
    """True iff a, b, c are positive and satisfy the strict triangle inequality.

    Total function: never raises. The strictness margin is EPS_TRI relative
    to the perimeter, so the verdict does not depend on overall scale.
    """
    if not (a > 0.0 and b > 0.0 and c > 0.0):
        return False
    if not (math.isfinite(a) and math.isfinite(b) and math.isfinite(c)):
        return False
    slack = EPS_TRI * (a + b + c)
    return a + b - c > slack and b + c - a > slack and c + a - b > slack


@dataclass(frozen=True)
class Triangle:
    """Triangle given by its three side lengths."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "c", float(self.c))
        if not (self.a > 0.0 and self.b > 0.0 and self.c > 0.0):
            raise InvalidTriangleError(
                f"side lengths must be positive, got ({self.a}, {self.b}, {self.c})"
            )
        if not is_valid_triangle(self.a, self.b, self.c):
            raise InvalidTriangleError(
                f"triangle inequality violated for sides ({self.a}, {self.b}, {self.c})"
            )

    @property
    def sides(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def perimeter(self) -> float:
        return self.a + self.b + self.c


def semiperimeter(t: Triangle) -> float:
    """Half the perimeter."""
    return 0.5 * (t.a + t.b + t.c)


def triangle_area(t: Triangle) -> float:
    """Area by the stable (sorted-operand) form of Heron's formula.

    The operands are ordered x >= y >= z and grouped so that every factor is
    computed without catastrophic cancellation, which keeps the result
    accurate for needle-like triangles.
    """
    x, y, z = sorted((t.a, t.b, t.c), reverse=True)
    q = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z))
    return 0.25 * math.sqrt(max(q, 0.0))


def inradius_triangle(t: Triangle) -> float:
    """Radius of the inscribed circle: area / semiperimeter."""
    return triangle_area(t) / semiperimeter(t)


@dataclass(frozen=True)
class Tetrahedron:
    """Tetrahedron given by its six edge lengths.

    Edge labeling (vertices A, B, C, D): a1=AB, a2=BC, a3=CA, a4=AD, a5=CD,
    a6=BD. The faces are then ABC=(a1,a2,a3), ACD=(a3,a4,a5), ABD=(a1,a4,a6)
    and BCD=(a2,a5,a6). Construction validates each face and the sign of the
    Cayley-Menger determinant.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    a5: float
    a6: float

    def __post_init__(self) -> None:
        for name in EDGE_NAMES:
            object.__setattr__(self, name, float(getattr(self, name)))
        e = self.edges
        if not all(x > 0.0 and math.isfinite(x) for x in e):
            raise InvalidShapeError(f"edge lengths must be positive and finite, got {e}")
        for i, j, k in FACE_EDGE_INDICES:
            if not is_valid_triangle(e[i], e[j], e[k]):
                raise InvalidTriangleError(
                    "triangle inequality violated on face "
                    f"({EDGE_NAMES[i]}, {EDGE_NAMES[j]}, {EDGE_NAMES[k]}) = "
                    f"({e[i]}, {e[j]}, {e[k]})"
                )
        mean_edge = sum(e) / 6.0
        if cayley_menger_determinant(e) <= EPS_VOL * mean_edge**6:
            raise NonRealizableError(
                f"edges {e} are not realizable as a nondegenerate tetrahedron "
                "(Cayley-Menger determinant is not positive)"
            )

    @property
    def edges(self) -> tuple[float, float, float, float, float, float]:
        return (self.a1, self.a2, self.a3, self.a4, self.a5, self.a6)


Shape = Union[Triangle, Tetrahedron]


def cayley_menger_determinant(edges: Sequence[float]) -> float:
    """Determinant of the bordered squared-distance matrix of four points.

    Equals 288 V^2 for a realizable tetrahedron of volume V; nonpositive
    values mean the six lengths cannot be embedded in R^3. Vertex order
    A, B, C, D, distances d(AB)=a1, d(BC)=a2, d(CA)=a3, d(AD)=a4, d(CD)=a5,
    d(BD)=a6.
    """
    a1, a2, a3, a4, a5, a6 = edges
    q_ab, q_bc, q_ca = a1 * a1, a2 * a2, a3 * a3
    q_ad, q_cd, q_bd = a4 * a4, a5 * a5, a6 * a6
    m = np.array(
        [
            [0.0, 1.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, q_ab, q_ca, q_ad],
            [1.0, q_ab, 0.0, q_bc, q_bd],
            [1.0, q_ca, q_bc, 0.0, q_cd],
            [1.0, q_ad, q_bd, q_cd, 0.0],
        ]
    )
    return float(np.linalg.det(m))


def faces(t: Tetrahedron) -> tuple[Triangle, Triangle, Triangle, Triangle]:
    """The four face triangles, in the fixed order ABC, ACD, ABD, BCD."""
    e = t.edges
    return tuple(Triangle(e[i], e[j], e[k]) for i, j, k in FACE_EDGE_INDICES)


def volume(t: Tetrahedron) -> float:
    """Volume from the Cayley-Menger determinant."""
    det = cayley_menger_determinant(t.edges)
    if det <= 0.0:
        raise NonRealizableError(f"nonpositive Cayley-Menger determinant for edges {t.edges}")
    return math.sqrt(det / 288.0)


def surface_area(t: Tetrahedron) -> float:
    """Sum of the four face areas."""
    return sum(triangle_area(f) for f in faces(t))


def inradius_tetrahedron(t: Tetrahedron) -> float:
    """Radius of the inscribed sphere: 3 V / (total face area)."""
    return 3.0 * volume(t) / surface_area(t)


def face_inradius_sum(t: Tetrahedron) -> float:
    """Sum of the inradii of the four faces."""
    return sum(inradius_triangle(f) for f in faces(t))


class Normalization(enum.Enum):
    """Scale convention applied to a shape before use."""

    NONE = "none"
    UNIT_PERIMETER = "unit-perimeter"
    UNIT_LONGEST_EDGE = "unit-longest-edge"


def total_edge_length(shape: Shape) -> float:
    if isinstance(shape, Triangle):
        return shape.a + shape.b + shape.c
    return sum(shape.edges)


def longest_edge(shape: Shape) -> float:
    if isinstance(shape, Triangle):
        return max(shape.sides)
    return max(shape.edges)


def scale_shape(shape: Shape, factor: float) -> Shape:
    """Uniformly rescale every edge by factor."""
    if factor <= 0.0:
        raise ValueError(f"scale factor must be positive, got {factor}")
    if isinstance(shape, Triangle):
        return Triangle(shape.a * factor, shape.b * factor, shape.c * factor)
    return Tetrahedron(*(x * factor for x in shape.edges))


def normalize(shape: Shape, normalization: Normalization) -> Shape:
    """Rescale so the total edge length, or the longest edge, equals one."""
    if normalization is Normalization.NONE:
        return shape
    if normalization is Normalization.UNIT_PERIMETER:
        return scale_shape(shape, 1.0 / total_edge_length(shape))
    return scale_shape(shape, 1.0 / longest_edge(shape))


def shape_to_dict(shape: Shape) -> dict[str, float]:
    """JSON-ready mapping: {"a","b","c"} for triangles, {"a1".."a6"} for tetrahedra."""
    if isinstance(shape, Triangle):
        return {"a": shape.a, "b": shape.b, "c": shape.c}
    return dict(zip(EDGE_NAMES, shape.edges))


def shape_from_dict(data: dict) -> Shape:
    """Inverse of shape_to_dict; validates the shape on construction."""
    keys = set(data)
    if keys == {"a", "b", "c"}:
        return Triangle(data["a"], data["b"], data["c"])
    if keys == set(EDGE_NAMES):
        return Tetrahedron(*(data[name] for name in EDGE_NAMES))
    raise ValueError(
        "shape object must have keys {a, b, c} or {a1, ..., a6}, got "
        f"{sorted(keys)}"
    )
