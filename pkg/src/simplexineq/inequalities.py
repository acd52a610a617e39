"""Evaluators for the triangle and tetrahedron edge-sum inequalities.

Every inequality is reported through an EvalReport whose gap is oriented so
that a positive value always means "the inequality holds"; searching for
counterexamples is then plain gap minimization regardless of the relation's
direction.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .geometry import (
    Shape,
    Tetrahedron,
    Triangle,
    faces,
    inradius_tetrahedron,
    inradius_triangle,
    semiperimeter,
    total_edge_length,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT6 = math.sqrt(6.0)

# Named constants of the inequality family.
K0 = 2.0 + SQRT2                      # best constant for the 12-term pair sum
C_TRI = 3.0 * SQRT3 * (2.0 - SQRT2)   # triangle inradius coefficient
C_REFINED = 12.0 * SQRT3 * (2.0 - SQRT2)
C_CONJ3 = 6.0 * SQRT6 * (2.0 * K0 - 5.0 * SQRT2)  # negative: 2*K0 - 5*sqrt(2) < 0

# Exponents are integers n >= 2; the cap keeps (min/max)**n well-defined
# without overflow-handling beyond the scaled evaluation below.
MAX_EXPONENT = 1000

# Relative tolerance used to classify a gap as decisively positive/negative.
EVAL_RTOL = 1e-12


class KindMismatchError(TypeError):
    """A triangle inequality was applied to a tetrahedron, or vice versa."""


class InequalityKind(enum.Enum):
    POWER_MEAN_LOWER = "powermean"
    ZHOU_HU = "zhouhu"
    YE = "ye"
    CONJ1 = "conj1"
    CONJ2 = "conj2"
    CONJ3 = "conj3"
    REFINED3 = "refined3"


TRIANGLE_KINDS = frozenset(
    {
        InequalityKind.POWER_MEAN_LOWER,
        InequalityKind.ZHOU_HU,
        InequalityKind.YE,
        InequalityKind.CONJ1,
    }
)
TETRAHEDRON_KINDS = frozenset(
    {InequalityKind.CONJ2, InequalityKind.CONJ3, InequalityKind.REFINED3}
)
KINDS_WITH_N = frozenset({InequalityKind.YE, InequalityKind.CONJ1})
KINDS_WITH_K = frozenset({InequalityKind.CONJ2})
STRICT_KINDS = frozenset(
    {InequalityKind.ZHOU_HU, InequalityKind.YE, InequalityKind.CONJ1}
)


@dataclass(frozen=True)
class InequalityId:
    """One concrete inequality instance: a kind plus its parameters."""

    kind: InequalityKind
    n: Optional[int] = None
    k: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind in KINDS_WITH_N:
            if self.n is None or not (2 <= int(self.n) <= MAX_EXPONENT):
                raise ValueError(
                    f"{self.kind.value} requires an integer exponent n with "
                    f"2 <= n <= {MAX_EXPONENT}, got {self.n}"
                )
            object.__setattr__(self, "n", int(self.n))
        elif self.n is not None:
            raise ValueError(f"{self.kind.value} takes no exponent n")
        if self.kind in KINDS_WITH_K:
            if self.k is None or not float(self.k) > 0.0:
                raise ValueError(f"{self.kind.value} requires a constant k > 0, got {self.k}")
            object.__setattr__(self, "k", float(self.k))
        elif self.k is not None:
            raise ValueError(f"{self.kind.value} takes no constant k")

    @property
    def strict(self) -> bool:
        return self.kind in STRICT_KINDS

    @property
    def shape_kind(self) -> type:
        return Triangle if self.kind in TRIANGLE_KINDS else Tetrahedron

    def label(self) -> str:
        if self.kind in KINDS_WITH_N:
            return f"{self.kind.value}(n={self.n})"
        if self.kind in KINDS_WITH_K:
            return f"{self.kind.value}(k={self.k})"
        return self.kind.value


def _check_exponent(n: int) -> int:
    if int(n) != n or not (2 <= int(n) <= MAX_EXPONENT):
        raise ValueError(f"exponent must be an integer in [2, {MAX_EXPONENT}], got {n}")
    return int(n)


def pair_root(x: float, y: float, n: int) -> float:
    """(x**n + y**n) ** (1/n), evaluated as max*(1 + (min/max)**n)**(1/n).

    The scaled form neither overflows nor underflows for any representable
    positive x, y with n up to MAX_EXPONENT.
    """
    hi = max(x, y)
    lo = min(x, y)
    return hi * (1.0 + (lo / hi) ** n) ** (1.0 / n)


def cyclic_sum(f: Callable[[float, float], float], t: Triangle) -> float:
    """f(a,b) + f(b,c) + f(c,a) over the triangle's sides."""
    return f(t.a, t.b) + f(t.b, t.c) + f(t.c, t.a)


def lhs_power_sum(t: Triangle, n: int) -> float:
    """Cyclic sum of (x**n + y**n)**(1/n) over the side pairs."""
    n = _check_exponent(n)
    return cyclic_sum(lambda x, y: pair_root(x, y, n), t)


def rhs_conj1(t: Triangle, n: int) -> float:
    """(2 + 2**(1/n)) s - 3 sqrt(3) (2 - 2**(1/n)) r."""
    n = _check_exponent(n)
    root = 2.0 ** (1.0 / n)
    return (2.0 + root) * semiperimeter(t) - 3.0 * SQRT3 * (2.0 - root) * inradius_triangle(t)


def gap_g(t: Triangle, n: int) -> float:
    """rhs_conj1 - lhs_power_sum; negative means the bound fails at (t, n)."""
    return rhs_conj1(t, n) - lhs_power_sum(t, n)


class GapScan(NamedTuple):
    values: list[tuple[int, float]]
    strictly_decreasing: bool


def scan_gap_monotonicity(t: Triangle, n_max: int) -> GapScan:
    """Gap values for n = 2..n_max plus a strict-decrease flag."""
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    values = [(n, gap_g(t, n)) for n in range(2, n_max + 1)]
    decreasing = all(values[i + 1][1] < values[i][1] for i in range(len(values) - 1))
    return GapScan(values, decreasing)


def lhs_lower_eq1(t: Triangle) -> float:
    """Lower bound 2 sqrt(2) s for the pair-root sum at n=2."""
    return 2.0 * SQRT2 * semiperimeter(t)


def rhs_zhouhu(t: Triangle) -> float:
    """Upper bound (2 + sqrt(2)) s for the pair-root sum at n=2."""
    return K0 * semiperimeter(t)


def tet_pair_sum(t: Tetrahedron) -> float:
    """The 12-term sum sqrt(x**2 + y**2) over the edge pairs of each face."""
    return sum(lhs_power_sum(f, 2) for f in faces(t))


def rhs_conj2(t: Tetrahedron, k: float) -> float:
    """k times the total edge length."""
    if not k > 0.0:
        raise ValueError(f"constant k must be positive, got {k}")
    return k * total_edge_length(t)


def rhs_conj3(t: Tetrahedron) -> float:
    """K0 * sum(edges) - C_CONJ3 * inradius; exceeds K0 * sum(edges), C_CONJ3 < 0."""
    return K0 * total_edge_length(t) - C_CONJ3 * inradius_tetrahedron(t)


def rhs_refined(t: Tetrahedron) -> float:
    """K0 * sum(edges) - C_REFINED * inradius; tighter than rhs_conj3."""
    return K0 * total_edge_length(t) - C_REFINED * inradius_tetrahedron(t)


def eval_tolerance(lhs: float, rhs: float) -> float:
    return EVAL_RTOL * max(abs(lhs), abs(rhs))


@dataclass(frozen=True)
class EvalReport:
    """One inequality evaluated at one shape.

    lhs and rhs follow the relation as written (lhs <= rhs or lhs < rhs),
    gap = rhs - lhs, and satisfied applies the strictness rule: a strict
    relation needs gap > 0, a non-strict one tolerates a roundoff-level
    negative gap.
    """

    inequality: InequalityId
    lhs: float
    rhs: float
    gap: float
    satisfied: bool
    strict: bool

    def to_dict(self) -> dict:
        return {
            "inequality": self.inequality.kind.value,
            "n": self.inequality.n,
            "k": self.inequality.k,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "satisfied": self.satisfied,
            "strict": self.strict,
        }


def _sides_for(ineq: InequalityId, shape: Shape) -> tuple[float, float]:
    kind = ineq.kind
    if kind is InequalityKind.POWER_MEAN_LOWER:
        return lhs_lower_eq1(shape), lhs_power_sum(shape, 2)
    if kind is InequalityKind.ZHOU_HU:
        return lhs_power_sum(shape, 2), rhs_zhouhu(shape)
    if kind is InequalityKind.YE:
        root = 2.0 ** (1.0 / ineq.n)
        return lhs_power_sum(shape, ineq.n), (2.0 + root) * semiperimeter(shape)
    if kind is InequalityKind.CONJ1:
        return lhs_power_sum(shape, ineq.n), rhs_conj1(shape, ineq.n)
    if kind is InequalityKind.CONJ2:
        return tet_pair_sum(shape), rhs_conj2(shape, ineq.k)
    if kind is InequalityKind.CONJ3:
        return tet_pair_sum(shape), rhs_conj3(shape)
    if kind is InequalityKind.REFINED3:
        return tet_pair_sum(shape), rhs_refined(shape)
    raise ValueError(f"unknown inequality kind {kind}")


def evaluate(ineq: InequalityId, shape: Shape) -> EvalReport:
    """Evaluate one inequality at one shape and classify the result.

    Raises KindMismatchError when the shape's type does not match the
    inequality's domain.
    """
    if not isinstance(shape, ineq.shape_kind):
        raise KindMismatchError(
            f"{ineq.label()} applies to {ineq.shape_kind.__name__.lower()}s, "
            f"got {type(shape).__name__}"
        )
    lhs, rhs = _sides_for(ineq, shape)
    gap = rhs - lhs
    if ineq.strict:
        satisfied = gap > 0.0
    else:
        satisfied = gap >= -eval_tolerance(lhs, rhs)
    return EvalReport(
        inequality=ineq, lhs=lhs, rhs=rhs, gap=gap, satisfied=satisfied, strict=ineq.strict
    )
