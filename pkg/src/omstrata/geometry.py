"""Exact rational plane geometry: predicates, lines, cross-ratio, affine maps.

All coordinates are ``fractions.Fraction``; every operation is exact, pure,
and deterministic.  Degenerate inputs raise the typed errors from
:mod:`omstrata.errors` instead of returning sentinels.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .errors import (
    CoincidentPoints,
    DegeneratePoints,
    DegenerateSource,
    DegenerateTarget,
    Identical,
    NonPositiveHeight,
    NotCollinear,
    Parallel,
)
from .linalg import SingularMatrix, solve_linear

Rational = Fraction
RationalLike = Union[Fraction, int]


def _frac(value: RationalLike) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class PlanePoint:
    x: Fraction
    y: Fraction

    def __init__(self, x: RationalLike, y: RationalLike):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))


@dataclass(frozen=True)
class Vector3:
    """Homogeneous 3-vector.  The zero vector is allowed (it models loops)."""

    x: Fraction
    y: Fraction
    z: Fraction

    def __init__(self, x: RationalLike, y: RationalLike, z: RationalLike):
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))
        object.__setattr__(self, "z", _frac(z))

    def dot(self, other: "Vector3") -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vector3") -> "Vector3":
        return Vector3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def scaled(self, factor: RationalLike) -> "Vector3":
        f = _frac(factor)
        return Vector3(self.x * f, self.y * f, self.z * f)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0


ZERO3 = Vector3(0, 0, 0)


def sign_det3(u: Vector3, v: Vector3, w: Vector3) -> int:
    """Sign of det(u, v, w) as rows, in {-1, 0, +1}, computed exactly."""
    det = (
        u.x * (v.y * w.z - v.z * w.y)
        - u.y * (v.x * w.z - v.z * w.x)
        + u.z * (v.x * w.y - v.y * w.x)
    )
    return (det > 0) - (det < 0)


@dataclass(frozen=True, eq=False)
class Line2:
    """Oriented line a*x + b*y + c = 0 with canonical integer coefficients.

    Canonical form: gcd(a, b, c) = 1 and the first non-zero of (a, b) is
    positive, so two Line2 values are equal iff they carry the same point set.
    The defining point pair is kept for diagnostics only and does not take
    part in equality.
    """

    a: int
    b: int
    c: int
    p: PlanePoint
    q: PlanePoint

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Line2):
            return NotImplemented
        return (self.a, self.b, self.c) == (other.a, other.b, other.c)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c))

    def contains(self, point: PlanePoint) -> bool:
        return self.a * point.x + self.b * point.y + self.c == 0

    def __repr__(self) -> str:
        return f"Line2({self.a}x + {self.b}y + {self.c} = 0)"


def _canonical_coeffs(a: Fraction, b: Fraction, c: Fraction) -> tuple[int, int, int]:
    denom_lcm = 1
    for value in (a, b, c):
        denom_lcm = denom_lcm * value.denominator // gcd(denom_lcm, value.denominator)
    ai = int(a * denom_lcm)
    bi = int(b * denom_lcm)
    ci = int(c * denom_lcm)
    g = gcd(gcd(abs(ai), abs(bi)), abs(ci))
    if g:
        ai, bi, ci = ai // g, bi // g, ci // g
    if ai < 0 or (ai == 0 and bi < 0):
        ai, bi, ci = -ai, -bi, -ci
    return ai, bi, ci


def line_through(p: PlanePoint, q: PlanePoint) -> Line2:
    """The canonical line through two distinct points."""
    if p == q:
        raise CoincidentPoints(f"cannot span a line with {p} twice")
    a = p.y - q.y
    b = q.x - p.x
    c = p.x * q.y - q.x * p.y
    ai, bi, ci = _canonical_coeffs(a, b, c)
    return Line2(ai, bi, ci, p, q)


def line_intersect(l1: Line2, l2: Line2) -> PlanePoint:
    """The unique common point of two lines.

    Raises Parallel when there is none and Identical when there are
    infinitely many.
    """
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        if (l1.a, l1.b, l1.c) == (l2.a, l2.b, l2.c):
            raise Identical(f"{l1} and {l2} coincide")
        raise Parallel(f"{l1} and {l2} are parallel")
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return PlanePoint(x, y)


def collinear(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> bool:
    """True iff the three points lie on one line (repetitions count)."""
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == 0


def cross_ratio(a: PlanePoint, b: PlanePoint, c: PlanePoint, d: PlanePoint) -> Fraction:
    """Exact cross-ratio of four pairwise-distinct collinear points.

    Each point is written as a + t * dir along the common line; the value is
    |t_c - t_a| / |t_c - t_b| * |t_d - t_b| / |t_d - t_a|, which agrees with
    the distance-quotient definition because all four distances share the
    direction length as a common factor.
    """
    points = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if points[i] == points[j]:
                raise DegeneratePoints(f"points {i} and {j} coincide")
    if not (collinear(a, b, c) and collinear(a, b, d)):
        raise NotCollinear("cross-ratio needs four collinear points")
    dx = b.x - a.x
    dy = b.y - a.y
    if dx != 0:
        params = [(p.x - a.x) / dx for p in points]
    else:
        params = [(p.y - a.y) / dy for p in points]
    ta, tb, tc, td = params
    return abs(tc - ta) / abs(tc - tb) * abs(td - tb) / abs(td - ta)


@dataclass(frozen=True)
class AffineMap2:
    """Affine automorphism p -> L p + t of the plane, det(L) != 0."""

    linear: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    translation: tuple[Fraction, Fraction]

    def det(self) -> Fraction:
        (a, b), (c, d) = self.linear
        return a * d - b * c

    def __call__(self, p: PlanePoint) -> PlanePoint:
        (a, b), (c, d) = self.linear
        tx, ty = self.translation
        return PlanePoint(a * p.x + b * p.y + tx, c * p.x + d * p.y + ty)

    def inverse(self) -> "AffineMap2":
        (a, b), (c, d) = self.linear
        tx, ty = self.translation
        det = self.det()
        ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
        return AffineMap2(
            ((ia, ib), (ic, id_)),
            (-(ia * tx + ib * ty), -(ic * tx + id_ * ty)),
        )

    @staticmethod
    def identity() -> "AffineMap2":
        one, zero = Fraction(1), Fraction(0)
        return AffineMap2(((one, zero), (zero, one)), (zero, zero))


def apply_affine(f: AffineMap2, p: PlanePoint) -> PlanePoint:
    return f(p)


def affine_from_correspondence(
    src: tuple[PlanePoint, PlanePoint, PlanePoint],
    dst: tuple[PlanePoint, PlanePoint, PlanePoint],
) -> AffineMap2:
    """The unique affine automorphism sending src_i to dst_i for i = 1..3.

    The source triple must be non-collinear for the map to exist and be
    unique; the target triple must be non-collinear for the map to be
    invertible.
    """
    if collinear(*src):
        raise DegenerateSource("source triple is collinear")
    if collinear(*dst):
        raise DegenerateTarget("target triple is collinear")
    matrix = [[p.x, p.y, Fraction(1)] for p in src]
    try:
        row_x = solve_linear(matrix, [p.x for p in dst])
        row_y = solve_linear(matrix, [p.y for p in dst])
    except SingularMatrix as exc:  # unreachable after the collinearity check
        raise DegenerateSource(str(exc)) from exc
    return AffineMap2(
        ((row_x[0], row_x[1]), (row_y[0], row_y[1])),
        (row_x[2], row_y[2]),
    )


def embed_affine(p: PlanePoint) -> Vector3:
    """Lift an affine point to height 1."""
    return Vector3(p.x, p.y, Fraction(1))


def perspective_normalize(v: Vector3) -> PlanePoint:
    """Divide by the z-coordinate; requires z > 0."""
    if v.z <= 0:
        raise NonPositiveHeight(f"z = {v.z} is not positive")
    return PlanePoint(v.x / v.z, v.y / v.z)
