"""Rational 3-dimensional subspaces of Q^n and their oriented matroids.

Two routes lead from a subspace to an oriented matroid on {1..n}:

* ``projection_arrangement`` orthogonally projects each coordinate vector
  onto the subspace by solving the Gram normal equations (no square roots,
  everything stays rational) and reads coordinates in the stored basis;
* ``subspace_om`` evaluates the covector recipe directly: a vector of the
  subspace with coefficient row c has i-th coordinate <c, column_i(B)>, so
  the columns of the basis matrix realize the oriented matroid.

The two must agree; the test suite checks them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotSpanning, RankDeficient
from .geometry import Vector3
from .labels import Label, is_label, label_key
from .linalg import matrix_rank, solve_linear
from .om import LabeledArrangement, Matroid, OrientedMatroid, om_equal, om_of, underlying_matroid

Row = tuple[Fraction, ...]


def _to_row(values: Iterable) -> Row:
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


@dataclass(frozen=True)
class Subspace:
    """A 3-plane in Q^n given by three independent basis rows."""

    ambient: int
    basis: tuple[Row, Row, Row]

    def __init__(self, ambient: int, basis: Iterable[Iterable]):
        rows = tuple(_to_row(r) for r in basis)
        if len(rows) != 3:
            raise RankDeficient(f"need exactly 3 basis rows, got {len(rows)}")
        if any(len(r) != ambient for r in rows):
            raise RankDeficient("basis rows must have the ambient dimension")
        if matrix_rank(rows) != 3:
            raise RankDeficient("basis rows are linearly dependent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", rows)

    def column(self, i: int) -> Vector3:
        """Coordinates of e_{i+1} paired against the basis rows."""
        return Vector3(self.basis[0][i], self.basis[1][i], self.basis[2][i])


@dataclass(frozen=True)
class VectorFamily:
    """Ordered labeled vectors in Q^n."""

    ambient: int
    elements: tuple[tuple[Label, Row], ...]

    def __init__(self, elements: Iterable[tuple[Label, Iterable]]):
        elems = tuple((label, _to_row(vec)) for label, vec in elements)
        if not elems:
            raise ValueError("empty vector family")
        seen = set()
        for label, _ in elems:
            if not is_label(label):
                raise ValueError(f"invalid label {label!r}")
            if label in seen:
                raise ValueError(f"duplicate label {label!r}")
            seen.add(label)
        ambient = len(elems[0][1])
        if any(len(vec) != ambient for _, vec in elems):
            raise ValueError("vectors of mixed dimension")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "elements", elems)

    @staticmethod
    def standard_basis(n: int) -> "VectorFamily":
        return VectorFamily(
            (i + 1, tuple(Fraction(1 if j == i else 0) for j in range(n))) for i in range(n)
        )


def projection_arrangement(subspace: Subspace) -> LabeledArrangement:
    """Orthogonal projections of the coordinate vectors, in basis coordinates.

    For each i the coefficient vector c_i solves G c_i = B e_i with G the
    Gram matrix of the basis rows.
    """
    rows = subspace.basis
    gram = [[sum(a * b for a, b in zip(rows[p], rows[q])) for q in range(3)] for p in range(3)]
    elements = []
    for i in range(subspace.ambient):
        rhs = [rows[p][i] for p in range(3)]
        coeff = solve_linear(gram, rhs)
        elements.append((i + 1, Vector3(coeff[0], coeff[1], coeff[2])))
    return LabeledArrangement(elements)


def subspace_om(subspace: Subspace) -> OrientedMatroid:
    """Oriented matroid of the subspace on labels {1..n}, computed directly
    from the coordinate pairings (the columns of the basis matrix)."""
    arrangement = LabeledArrangement(
        (i + 1, subspace.column(i)) for i in range(subspace.ambient)
    )
    return om_of(arrangement)


def family_om(family: VectorFamily, subspace: Subspace) -> OrientedMatroid:
    """Oriented matroid of the subspace measured against a spanning family.

    Replaces the coordinate vectors by the family vectors in the covector
    recipe: element i carries sign <v, v_i> for v in the subspace, realized
    by the arrangement of B v_i.
    """
    if family.ambient != subspace.ambient:
        raise NotSpanning(
            f"family lives in Q^{family.ambient}, subspace in Q^{subspace.ambient}"
        )
    if matrix_rank([vec for _, vec in family.elements]) != family.ambient:
        raise NotSpanning("family does not span its ambient space")
    rows = subspace.basis
    elements = []
    for label, vec in family.elements:
        image = tuple(sum(a * b for a, b in zip(row, vec)) for row in rows)
        elements.append((label, Vector3(*image)))
    return om_of(LabeledArrangement(sorted(elements, key=lambda e: label_key(e[0]))))


def same_stratum(v: Subspace, w: Subspace, level: str = "oriented-matroid") -> bool:
    """Whether two subspaces induce the same (oriented) matroid data."""
    if level not in ("oriented-matroid", "matroid"):
        raise ValueError(f"unknown level {level!r}")
    mv = subspace_om(v)
    mw = subspace_om(w)
    if level == "oriented-matroid":
        return om_equal(mv, mw)
    return underlying_matroid(mv) == underlying_matroid(mw)
