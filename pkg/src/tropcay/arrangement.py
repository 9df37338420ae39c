"""Tropical hyperplane arrangements, covectors, and tropical convexity.

A d-by-n matrix V is read as n min-plus hyperplanes with apices at its
columns.  The covector of a point z records, for every column k, which
rows attain min_i (v_ik - z_i); these pair sets classify the cells of the
arrangement, and the union of the bounded cells is the tropical convex
hull of the columns.

All pair indices (i, k) in covectors are 1-based, matching the usual
notation for rows and columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (
    MAX,
    MIN,
    TropMatrix,
    TropNum,
    exact_vector,
    mat_vec,
    trop_vector,
)
from .errors import (
    DimensionMismatchError,
    EmptyCellError,
    UnsupportedCaseError,
)
from .poly import Exponent, TropPolynomial, arrangement_poly
from .polyhedral import (
    AffineForm,
    HRep,
    dual_cell_hrep,
    hrep_affine_dim,
    hrep_feasible,
    is_bounded_cell,
    subdivision_faces,
    subdivision_from_poly,
)


@dataclass(frozen=True)
class Covector:
    """The tight (row, column) pairs of a point, 1-based."""

    d: int
    n: int
    pairs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, k in self.pairs:
            if not (1 <= i <= self.d and 1 <= k <= self.n):
                raise DimensionMismatchError(f"pair {(i, k)} out of range")

    def rows_of_column(self, k: int) -> frozenset[int]:
        return frozenset(i for i, kk in self.pairs if kk == k)

    def incidence(self) -> tuple[int, ...]:
        """0/1 vector over the row-major variables y_11,...,y_dn."""
        flat = [0] * (self.d * self.n)
        for i, k in self.pairs:
            flat[(i - 1) * self.n + (k - 1)] = 1
        return tuple(flat)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)


def covector(v: TropMatrix, z: Sequence) -> Covector:
    """tc(z): for each column, the rows where v_ik - z_i is minimal.
    Rows with v_ik = +inf never appear; every column contributes at
    least one pair."""
    zs = exact_vector(z)
    if len(zs) != v.d:
        raise DimensionMismatchError(f"point has {len(zs)} entries, matrix {v.d} rows")
    pairs = set()
    for k in range(v.n):
        col = v.column(k)
        best = None
        rows: list[int] = []
        for i, entry in enumerate(col):
            if not entry.is_finite:
                continue
            val = entry.value - zs[i]
            if best is None or val < best:
                best = val
                rows = [i]
            elif val == best:
                rows.append(i)
        for i in rows:
            pairs.add((i + 1, k + 1))
    return Covector(v.d, v.n, frozenset(pairs))


def coarse_type(cv: Covector) -> tuple[int, ...]:
    """Per-row counts of tight columns: the lattice point dual to the
    cell of the arrangement containing the point."""
    counts = [0] * cv.d
    for i, _ in cv.pairs:
        counts[i - 1] += 1
    return tuple(counts)


def cell_from_covector(v: TropMatrix, cv: Covector) -> HRep:
    """H-representation of {z : tc(z) contains the given pairs}, pinned
    to the first-coordinate-zero chart.  Unrealizable covectors raise."""
    if (cv.d, cv.n) != (v.d, v.n):
        raise DimensionMismatchError("covector shape does not match matrix")
    le = []
    for i, k in sorted(cv.pairs):
        vik = v.entries[i - 1][k - 1]
        if not vik.is_finite:
            raise EmptyCellError(f"entry {(i, k)} is +inf and can never be tight")
        for j in range(v.d):
            vjk = v.entries[j][k - 1]
            if j == i - 1 or not vjk.is_finite:
                continue
            # (v_ik - z_i) - (v_jk - z_j) <= 0
            coeffs = [Fraction(0)] * v.d
            coeffs[i - 1] = Fraction(-1)
            coeffs[j] = Fraction(1)
            le.append(AffineForm(tuple(coeffs), vik.value - vjk.value))
    chart = AffineForm(
        tuple(Fraction(1) if t == 0 else Fraction(0) for t in range(v.d)),
        Fraction(0),
    )
    h = HRep(v.d, tuple(le), (chart,))
    if hrep_feasible(h) is None:
        raise EmptyCellError("no point realizes this covector")
    return h


@dataclass(frozen=True)
class BoundedCell:
    """One bounded cell of the arrangement complex, dual to a face of the
    coefficient subdivision."""

    dual_labels: frozenset[Exponent]
    hrep: HRep
    dim: int
    maximal: bool


@dataclass(frozen=True)
class TropicalPolytopeCells:
    matrix: TropMatrix
    cells: tuple[BoundedCell, ...]

    def maximal_cells(self) -> tuple[BoundedCell, ...]:
        return tuple(c for c in self.cells if c.maximal)

    def contains(self, z: Sequence) -> bool:
        from .core import ProjectivePoint

        x = ProjectivePoint.of(z).coords
        return any(c.hrep.contains(x) for c in self.cells)


def tconv_bounded_cells(v: TropMatrix) -> TropicalPolytopeCells:
    """All bounded cells of the arrangement complex of V, with dimensions
    and inclusion-maximality flags.  Their union is the tropical convex
    hull of the columns; maximality is decided by label-set inclusion
    (larger dual face = smaller cell)."""
    if not v.is_finite:
        raise UnsupportedCaseError("tropical polytopes need a finite matrix")
    f = arrangement_poly(v)
    sub = subdivision_from_poly(f)
    faces = sorted(subdivision_faces(sub), key=lambda g: sorted(g))
    bounded = []
    for g in faces:
        h = dual_cell_hrep(f, g)
        if is_bounded_cell(h, known_feasible=True):
            bounded.append((g, h))
    kept = [g for g, _ in bounded]
    cells = tuple(
        BoundedCell(
            frozenset(g),
            h,
            hrep_affine_dim(h),
            not any(g2 < g for g2 in kept),
        )
        for g, h in bounded
    )
    return TropicalPolytopeCells(v, cells)


def project_nearest(v: TropMatrix, z: Sequence) -> tuple[Fraction, ...]:
    """The Hilbert-metric nearest point of the tropical convex hull of
    the columns: P(z)_i = min_k (v_ik + max_j (z_j - v_jk))."""
    if not v.is_finite:
        raise UnsupportedCaseError("projection needs a finite matrix")
    zs = exact_vector(z)
    if len(zs) != v.d:
        raise DimensionMismatchError("point/matrix shape mismatch")
    col_shift = []
    for k in range(v.n):
        col = v.column(k)
        col_shift.append(max(zj - e.value for zj, e in zip(zs, col)))
    return tuple(
        min(v.entries[i][k].value + col_shift[k] for k in range(v.n))
        for i in range(v.d)
    )


def membership(v: TropMatrix, z: Sequence) -> bool:
    """Is z in the tropical convex hull of the columns (up to the
    all-ones line)?  True exactly when the projection moves z by zero."""
    zs = exact_vector(z)
    p = project_nearest(v, z)
    diffs = {a - b for a, b in zip(p, zs)}
    return len(diffs) == 1


def tropical_combination(v: TropMatrix, weights: Sequence) -> tuple[TropNum, ...]:
    """The min-plus combination V (+) weights: always a member of the
    tropical convex hull of the columns."""
    return mat_vec(v, trop_vector(weights), MIN)
