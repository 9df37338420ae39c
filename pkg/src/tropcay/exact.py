"""Exact rational linear algebra and a small two-phase simplex.

Everything here works over Python ints and Fractions; no floating point.
The simplex uses Bland's rule, so it terminates and is deterministic,
which keeps every downstream artifact byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional, Sequence


def int_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss)
    elimination."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[-1][-1]


def hyperplane_through(points: Sequence[Sequence[int]]):
    """Affine hyperplane through e integer points in Z^e.

    Returns ``(const, coeffs)`` with h(x) = const + coeffs.x vanishing on
    the points, or ``None`` when the points are affinely dependent.  The
    overall sign is determined by the input order; callers normalize.
    """
    e = len(points)
    rows = [[1, *p] for p in points]  # e rows, e+1 columns
    const = 0
    coeffs = [0] * e
    any_nonzero = False
    for j in range(e + 1):
        minor = [row[:j] + row[j + 1 :] for row in rows]
        c = int_det(minor)
        if e % 2 == 1:  # cofactor sign (-1)^(e+j) for the appended row
            c = -c
        if j % 2 == 1:
            c = -c
        if c:
            any_nonzero = True
        if j == 0:
            const = c
        else:
            coeffs[j - 1] = c
    if not any_nonzero:
        return None
    return const, tuple(coeffs)


def mat_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        pv = a[rank][col]
        a[rank] = [x / pv for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == len(a):
            break
    return rank


def pivot_columns(rows: Sequence[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal independent set of columns (row echelon pivots)."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    if not a:
        return pivots
    r = 0
    for col in range(len(a[0])):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    return pivots


def null_space(
    rows: Sequence[Sequence[Fraction]], ncols: int
) -> list[tuple[Fraction, ...]]:
    """A basis of {x : rows @ x = 0}."""
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][col]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        pv = a[r][col]
        a[r] = [x / pv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row_i, pc in enumerate(pivots):
            v[pc] = -a[row_i][fc]
        basis.append(tuple(v))
    return basis


def cone_is_trivial(
    a_le: Sequence[Sequence[Fraction]],
    a_eq: Sequence[Sequence[Fraction]],
    dim: int,
) -> bool:
    """Is {v : a_le @ v <= 0, a_eq @ v = 0} just the origin?

    Equalities are eliminated exactly; dimensions 0-2 are decided by sign
    scans over candidate extreme rays, higher ones by a few LPs.
    """
    basis = null_space(a_eq, dim) if a_eq else [
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(dim))
        for i in range(dim)
    ]
    r = len(basis)
    if r == 0:
        return True
    reduced = []
    for row in a_le:
        reduced.append(
            tuple(sum(Fraction(c) * b[j] for j, c in enumerate(row)) for b in basis)
        )
    effective = [b for b in reduced if any(b)]
    if not effective:
        return False  # the whole subspace survives
    if r == 1:
        neg = any(b[0] < 0 for b in effective)
        pos = any(b[0] > 0 for b in effective)
        return neg and pos
    if r == 2:
        # Any nonzero cone element can be pushed to a constraint boundary,
        # so testing the rotations of the normals is exhaustive.
        for b in effective:
            for u in ((b[1], -b[0]), (-b[1], b[0])):
                if all(c[0] * u[0] + c[1] * u[1] <= 0 for c in effective):
                    return False
        return True
    for i in range(r):
        for s in (1, -1):
            c = [Fraction(0)] * r
            c[i] = Fraction(s)
            box = []
            for j in range(r):
                row = [Fraction(0)] * r
                row[j] = Fraction(1)
                box.append(row[:])
                row2 = [Fraction(0)] * r
                row2[j] = Fraction(-1)
                box.append(row2)
            res = lp_max(
                c,
                a_ub=[list(b) for b in reduced] + box,
                b_ub=[Fraction(0)] * len(reduced) + [Fraction(1)] * (2 * r),
            )
            if res.status == "optimal" and res.value > 0:
                return False
    return True


def solve_linear(
    a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]
) -> Optional[list[Fraction]]:
    """One exact solution of A x = b (free variables set to 0), or None
    if the system is inconsistent."""
    if not a:
        return []
    nrows, ncols = len(a), len(a[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row, col in pivots:
        x[col] = aug[row][ncols]
    return x


def scale_rows_to_int(points: Sequence[Sequence[Fraction]]) -> list[tuple[int, ...]]:
    """Clear denominators per coordinate axis (a positive diagonal map,
    so convexity and face structure are untouched)."""
    if not points:
        return []
    ncols = len(points[0])
    mult = [1] * ncols
    for j in range(ncols):
        mult[j] = lcm(*(Fraction(p[j]).denominator for p in points))
    return [
        tuple(int(Fraction(p[j]) * mult[j]) for j in range(ncols)) for p in points
    ]


# ---------------------------------------------------------------------------
# Linear programming


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction]
    x: Optional[tuple[Fraction, ...]]


def _pivot(rows, obj, basis, r, c):
    pv = rows[r][c]
    rows[r] = [x / pv for x in rows[r]]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, rows[r])]
    f = obj[c]
    if f:
        obj[:] = [x - f * y for x, y in zip(obj, rows[r])]
    basis[r] = c


def _run_simplex(rows, obj, basis, allowed):
    """Minimize, in place, with Bland's rule.  Returns 'optimal' or
    'unbounded'.  Layout: rows are [coeffs..., rhs]; obj likewise."""
    ncols = len(obj) - 1
    while True:
        enter = next((j for j in range(ncols) if allowed[j] and obj[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(rows, obj, basis, leave, enter)


def lp_max(
    objective: Sequence[Fraction],
    a_ub: Sequence[Sequence[Fraction]] = (),
    b_ub: Sequence[Fraction] = (),
    a_eq: Sequence[Sequence[Fraction]] = (),
    b_eq: Sequence[Fraction] = (),
    nonneg: bool = False,
) -> LpResult:
    """Maximize c.x subject to A_ub x <= b_ub and A_eq x = b_eq.

    Variables are free unless ``nonneg`` is set.  Exact two-phase
    simplex; small problems only, which is all this package ever needs.
    """
    nvar = len(objective)
    split = 1 if nonneg else 2  # free x encoded as x = u - w
    nstruct = nvar * split
    m_ub, m_eq = len(a_ub), len(a_eq)
    m = m_ub + m_eq

    def structify(row):
        out = []
        for a in row:
            out.append(Fraction(a))
            if split == 2:
                out.append(-Fraction(a))
        return out

    rows = []
    for i in range(m_ub):
        body = structify(a_ub[i])
        slack = [Fraction(0)] * m_ub
        slack[i] = Fraction(1)
        rows.append(body + slack + [Fraction(b_ub[i])])
    for i in range(m_eq):
        body = structify(a_eq[i])
        rows.append(body + [Fraction(0)] * m_ub + [Fraction(b_eq[i])])
    for row in rows:
        if row[-1] < 0:
            row[:] = [-x for x in row]
    # artificial basis
    width = nstruct + m_ub
    for i, row in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        row[-1:-1] = art
    basis = [width + i for i in range(m)]
    total = width + m

    # Phase 1: minimize the artificial sum.
    obj = [Fraction(0)] * (total + 1)
    for j in range(width, total):
        obj[j] = Fraction(1)
    for i, row in enumerate(rows):  # canonicalize: basis columns must read 0
        obj = [x - y for x, y in zip(obj, row)]
    allowed = [True] * total
    _run_simplex(rows, obj, basis, allowed)
    if -obj[-1] != 0:  # residual artificial mass
        return LpResult("infeasible", None, None)
    for i in range(m):  # drive leftover artificials out of the basis
        if basis[i] >= width:
            c = next((j for j in range(width) if rows[i][j] != 0), None)
            if c is not None:
                _pivot(rows, obj, basis, i, c)
    keep = [i for i in range(m) if basis[i] < width]
    rows = [rows[i][:width] + [rows[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    # Phase 2: minimize -objective over the structural columns.
    cost = [Fraction(0)] * (width + 1)
    for j in range(nvar):
        c = Fraction(objective[j])
        cost[j * split] = -c
        if split == 2:
            cost[j * split + 1] = c
    obj = cost[:]
    for i, row in enumerate(rows):
        f = obj[basis[i]]
        if f:
            obj = [x - f * y for x, y in zip(obj, row)]
    allowed = [True] * width
    status = _run_simplex(rows, obj, basis, allowed)
    if status == "unbounded":
        return LpResult("unbounded", None, None)
    values = [Fraction(0)] * width
    for i, b in enumerate(basis):
        values[b] = rows[i][-1]
    if nonneg:
        x = tuple(values[:nvar])
    else:
        x = tuple(values[2 * j] - values[2 * j + 1] for j in range(nvar))
    value = sum((Fraction(c) * v for c, v in zip(objective, x)), Fraction(0))
    return LpResult("optimal", value, x)


def lp_feasible_point(
    a_ub=(), b_ub=(), a_eq=(), b_eq=(), nvar: Optional[int] = None
) -> Optional[tuple[Fraction, ...]]:
    """A point satisfying the system, or None."""
    if nvar is None:
        if len(a_ub):
            nvar = len(a_ub[0])
        elif len(a_eq):
            nvar = len(a_eq[0])
        else:
            return ()
    res = lp_max([Fraction(0)] * nvar, a_ub, b_ub, a_eq, b_eq)
    return res.x if res.status == "optimal" else None


def in_convex_hull(point: Sequence[Fraction], generators: Sequence[Sequence[Fraction]]) -> bool:
    """Is the point a convex combination of the generators?  (Exact LP.)"""
    if not generators:
        return False
    d = len(point)
    npts = len(generators)
    a_eq = []
    b_eq = []
    for j in range(d):
        a_eq.append([Fraction(g[j]) for g in generators])
        b_eq.append(Fraction(point[j]))
    a_eq.append([Fraction(1)] * npts)
    b_eq.append(Fraction(1))
    res = lp_max([Fraction(0)] * npts, a_eq=a_eq, b_eq=b_eq, nonneg=True)
    return res.status == "optimal"
