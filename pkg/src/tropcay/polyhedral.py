"""Exact polyhedral kernel: regular subdivisions, dome facets, normal
complexes.

The hull computation is an exhaustive facet search: every subset of
lifted points that spans a candidate hyperplane is fitted exactly and
kept when all remaining points lie weakly on the required side.  That is
quadratic-exponential in the worst case but entirely adequate at desk
scale (tens of points, ambient dimension a handful), and it has no
genericity assumptions: ties, repeated coordinates, and lower-dimensional
configurations are all handled by first restricting to the affine hull.

Parallel workers for the facet search are capped by the environment
variable ``TROPCAY_THREADS`` (default 1).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Hashable, Iterable, Mapping, Optional, Sequence

from .core import MIN, Orientation, exact, exact_vector
from .errors import (
    DimensionMismatchError,
    InfeasibleSystemError,
)
from .exact import (
    cone_is_trivial,
    hyperplane_through,
    lp_feasible_point,
    lp_max,
    mat_rank,
    pivot_columns,
    scale_rows_to_int,
)
from .poly import Exponent, TropPolynomial

Label = Hashable


@dataclass(frozen=True)
class PointConfiguration:
    """Labeled rational points.  Labels are opaque hashable tokens and
    may share coordinates; cells of subdivisions are sets of labels."""

    ambient_dim: int
    points: tuple[tuple[Label, tuple[Fraction, ...]], ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[Label, Sequence]]) -> "PointConfiguration":
        pts = tuple((lab, exact_vector(c)) for lab, c in pairs)
        if not pts:
            raise DimensionMismatchError("empty point configuration")
        dim = len(pts[0][1])
        if any(len(c) != dim for _, c in pts):
            raise DimensionMismatchError("points of unequal dimension")
        labels = [lab for lab, _ in pts]
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        return cls(dim, pts)

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple(lab for lab, _ in self.points)

    def coords(self, label: Label) -> tuple[Fraction, ...]:
        for lab, c in self.points:
            if lab == label:
                return c
        raise KeyError(label)


Lifting = Mapping[Label, Fraction]


@dataclass
class Subdivision:
    """A polyhedral subdivision of a point configuration, recorded by the
    label sets of its inclusion-maximal cells.

    ``lifting`` is the height function that produced a regular
    subdivision, or None for purely combinatorial ones (e.g. lifted back
    from a mixed subdivision).
    """

    config: PointConfiguration
    lifting: Optional[dict]
    maximal_cells: frozenset[frozenset[Label]]

    @property
    def non_face_labels(self) -> frozenset[Label]:
        """Labels lifted strictly above the relevant hull: they sit in no
        cell."""
        used = set()
        for cell in self.maximal_cells:
            used |= cell
        return frozenset(self.config.labels) - used

    def sorted_cells(self) -> list[tuple[Label, ...]]:
        return sorted(tuple(sorted(c)) for c in self.maximal_cells)

    def refines(self, other: "Subdivision") -> bool:
        """Every cell here is contained (as a label set) in a cell there."""
        return all(
            any(cell <= big for big in other.maximal_cells)
            for cell in self.maximal_cells
        )


def worker_count() -> int:
    """Parallelism cap from TROPCAY_THREADS; never below 1."""
    try:
        return max(1, int(os.environ.get("TROPCAY_THREADS", "1")))
    except ValueError:
        return 1


def affine_dim(config: PointConfiguration) -> int:
    """Dimension of the affine hull of the configuration."""
    coords = [c for _, c in config.points]
    base = coords[0]
    diffs = [[x - b for x, b in zip(c, base)] for c in coords[1:]]
    return mat_rank(diffs)


def _reduce_to_hull(coords: list[tuple[Fraction, ...]]) -> list[tuple[int, ...]]:
    """Integer coordinates for the points inside their own affine hull.

    Scales axes to clear denominators, then projects to a pivot-column
    set of the difference matrix; both are affine isomorphisms on the
    hull, so faces and cells are unchanged.
    """
    ints = scale_rows_to_int(coords)
    base = ints[0]
    diffs = [[Fraction(x - b) for x, b in zip(p, base)] for p in ints[1:]]
    cols = pivot_columns(diffs)
    return [tuple(p[j] for j in cols) for p in ints]


def _lower_facets(
    points: Sequence[tuple[int, ...]], sign: int
) -> set[frozenset[int]]:
    """Index sets of the lower (sign=+1) or upper (sign=-1) hull facets
    of an integer point set that affinely spans its ambient space.

    The last coordinate is the lifting direction.  Each facet comes back
    as the full set of points on its supporting hyperplane.
    """
    e = len(points[0])
    idx = range(len(points))
    cells: list[frozenset[int]] = []

    def scan(subsets):
        found = []
        for subset in subsets:
            if any(cell.issuperset(subset) for cell in cells) or any(
                cell.issuperset(subset) for cell in found
            ):
                continue
            hp = hyperplane_through([points[i] for i in subset])
            if hp is None:
                continue
            const, coeffs = hp
            last = coeffs[-1]
            if last == 0:
                continue  # vertical: not a lower/upper facet
            if last < 0:
                const = -const
                coeffs = tuple(-c for c in coeffs)
            onset = []
            ok = True
            for j, p in enumerate(points):
                h = const + sum(a * b for a, b in zip(coeffs, p))
                if h == 0:
                    onset.append(j)
                elif sign * h < 0:
                    ok = False
                    break
            if ok:
                found.append(frozenset(onset))
        return found

    subsets = list(combinations(idx, e))
    workers = worker_count()
    if workers > 1 and len(subsets) > 256:
        chunk = (len(subsets) + workers - 1) // workers
        parts = [subsets[i : i + chunk] for i in range(0, len(subsets), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(scan, parts):
                cells.extend(part)
    else:
        cells.extend(scan(subsets))
    return set(cells)


def regular_subdivision(
    config: PointConfiguration, lifting: Lifting, side: str = "below"
) -> Subdivision:
    """Project the bounded faces of the lifted hull back to label sets.

    ``side="below"`` reads off the lower hull of conv{(a, lifting(a))},
    the right choice for min-plus data; ``"above"`` reads the upper hull
    and equals ``below`` with the negated lifting.
    """
    if side not in ("below", "above"):
        raise ValueError("side must be 'below' or 'above'")
    labels = config.labels
    lam = [exact(lifting[lab]) for lab in labels]
    coords = [c for _, c in config.points]

    reduced = _reduce_to_hull(coords)
    dprime = len(reduced[0])
    den = lcm(*(v.denominator for v in lam))
    lam_int = [int(v * den) for v in lam]
    lifted = [r + (h,) for r, h in zip(reduced, lam_int)]

    base = lifted[0]
    diffs = [[Fraction(x - b) for x, b in zip(p, base)] for p in lifted[1:]]
    if mat_rank(diffs) <= dprime:
        # The lifting is affine over the hull: one cell holding everything.
        cells = frozenset({frozenset(labels)})
    else:
        sign = 1 if side == "below" else -1
        raw = _lower_facets(lifted, sign)
        cells = frozenset(
            frozenset(labels[i] for i in cell) for cell in raw
        )
    return Subdivision(config, {lab: v for lab, v in zip(labels, lam)}, cells)


def subdivision_from_poly(f: TropPolynomial) -> Subdivision:
    """The regular subdivision of the support dual to the polynomial:
    coefficients lift the exponents, min-plus reads the lower hull,
    max-plus the upper."""
    config = PointConfiguration.of(
        (m, tuple(Fraction(e) for e in m)) for m in f.support
    )
    lifting = {m: c.value for m, c in f.terms}
    side = "below" if f.orientation is MIN else "above"
    return regular_subdivision(config, lifting, side)


def polytope_faces(
    points: Mapping[Label, Sequence[Fraction]]
) -> set[frozenset[Label]]:
    """All nonempty faces of conv(points) as label sets, the whole set
    included.  Recursive facet search inside each face's own hull."""
    labels = sorted(points.keys(), key=repr)
    coords = [tuple(exact(v) for v in points[lab]) for lab in labels]
    out: set[frozenset[Label]] = set()

    def recurse(active: tuple[int, ...]):
        face = frozenset(labels[i] for i in active)
        if face in out:
            return
        out.add(face)
        pts = _reduce_to_hull([coords[i] for i in active])
        r = len(pts[0])
        if r == 0:
            return
        base = pts[0]
        diffs = [[Fraction(x - b) for x, b in zip(p, base)] for p in pts[1:]]
        if mat_rank(diffs) < r:  # should not happen, but stay safe
            return
        seen: list[frozenset[int]] = []
        for subset in combinations(range(len(pts)), r):
            if any(s.issuperset(subset) for s in seen):
                continue
            hp = hyperplane_through([pts[i] for i in subset])
            if hp is None:
                continue
            const, coeffs = hp
            onset = []
            lo = hi = False
            for j, p in enumerate(pts):
                h = const + sum(a * b for a, b in zip(coeffs, p))
                if h == 0:
                    onset.append(j)
                elif h > 0:
                    hi = True
                else:
                    lo = True
                if lo and hi:
                    break
            if lo and hi:
                continue
            seen.append(frozenset(onset))
            recurse(tuple(active[j] for j in onset))

    recurse(tuple(range(len(labels))))
    return out


def subdivision_faces(sub: Subdivision) -> set[frozenset[Label]]:
    """Every face of the subdivision: faces of its maximal cells, deduped."""
    faces: set[frozenset[Label]] = set()
    for cell in sub.maximal_cells:
        faces |= polytope_faces(
            {lab: sub.config.coords(lab) for lab in cell}
        )
    return faces


# ---------------------------------------------------------------------------
# Normal complexes of tropical polynomials


@dataclass(frozen=True)
class AffineForm:
    """const + coeffs.x, used as the constraint form(x) <= 0 or == 0."""

    coeffs: tuple[Fraction, ...]
    const: Fraction

    def __call__(self, x: Sequence[Fraction]) -> Fraction:
        return self.const + sum(c * v for c, v in zip(self.coeffs, x))


@dataclass(frozen=True)
class HRep:
    """A polyhedron {x : f(x) <= 0 for f in le, g(x) == 0 for g in eq}."""

    dim: int
    le: tuple[AffineForm, ...]
    eq: tuple[AffineForm, ...] = ()

    def contains(self, x: Sequence) -> bool:
        xs = exact_vector(x)
        if len(xs) != self.dim:
            raise DimensionMismatchError("point/H-rep dimension mismatch")
        return all(f(xs) <= 0 for f in self.le) and all(
            g(xs) == 0 for g in self.eq
        )


@dataclass(frozen=True)
class NormalCell:
    """A maximal region where one term is optimal, tagged by that term's
    exponent (its dual point)."""

    dual_point: Exponent
    hrep: HRep


@dataclass(frozen=True)
class NormalComplex:
    source: TropPolynomial
    maximal_cells: tuple[NormalCell, ...]


def _difference_forms(
    f: TropPolynomial, m: Exponent, others: Iterable[Exponent]
) -> list[AffineForm]:
    """Forms that are <= 0 exactly where term m is at least as good as
    each listed other term."""
    cm = f.coeff(m).value
    forms = []
    for m2 in others:
        c2 = f.coeff(m2).value
        if f.orientation is MIN:
            coeffs = tuple(Fraction(a - b) for a, b in zip(m, m2))
            const = cm - c2
        else:
            coeffs = tuple(Fraction(b - a) for a, b in zip(m, m2))
            const = c2 - cm
        forms.append(AffineForm(coeffs, const))
    return forms


def _chart_forms(f: TropPolynomial) -> tuple[AffineForm, ...]:
    """For a homogeneous source everything is invariant along the all-ones
    line; pin the first coordinate to zero so cells become honest
    polyhedra."""
    from .poly import is_homogeneous

    if is_homogeneous(f) is None:
        return ()
    e1 = tuple(
        Fraction(1) if i == 0 else Fraction(0) for i in range(f.dim)
    )
    return (AffineForm(e1, Fraction(0)),)


def dome_facets(f: TropPolynomial) -> frozenset[Exponent]:
    """Support points that are uniquely optimal somewhere: these index
    the facets of the dome {(x, s) : s on the optimal side of F(x)}."""
    return frozenset(_facet_witnesses(f).keys())


def _facet_witnesses(
    f: TropPolynomial,
) -> dict[Exponent, tuple[Fraction, ...]]:
    """For each facet-defining support point, a point where it wins
    strictly.  Found by maximizing the winning margin with an exact LP."""
    out: dict[Exponent, tuple[Fraction, ...]] = {}
    supp = f.support
    d = f.dim
    for m in supp:
        forms = _difference_forms(f, m, (m2 for m2 in supp if m2 != m))
        # variables (x_1..x_d, t): maximize t with form(x) + t <= 0, t <= 1
        a_ub = [list(fm.coeffs) + [Fraction(1)] for fm in forms]
        b_ub = [-fm.const for fm in forms]
        a_ub.append([Fraction(0)] * d + [Fraction(1)])
        b_ub.append(Fraction(1))
        c = [Fraction(0)] * d + [Fraction(1)]
        res = lp_max(c, a_ub=a_ub, b_ub=b_ub)
        if res.status == "optimal" and res.value > 0:
            out[m] = res.x[:d]
    return out


def normal_complex(f: TropPolynomial) -> NormalComplex:
    """Maximal cells of the subdivision of space by optimal terms, each
    carried with an exact H-representation."""
    chart = _chart_forms(f)
    cells = []
    for m in sorted(dome_facets(f)):
        others = [m2 for m2 in f.support if m2 != m]
        hrep = HRep(
            f.dim, tuple(_difference_forms(f, m, others)), chart
        )
        cells.append(NormalCell(m, hrep))
    return NormalComplex(f, tuple(cells))


def cell_of_point(f: TropPolynomial, x: Sequence) -> frozenset[Exponent]:
    """The argopt set at x: the dual face of the cell containing x."""
    return f.eval(x).argopt


def dual_cell_hrep(f: TropPolynomial, face: Iterable[Exponent]) -> HRep:
    """H-representation of the (possibly lower-dimensional) normal-complex
    cell dual to a face of the coefficient subdivision: the face's terms
    tie and every other term is no better."""
    face = sorted(face)
    if not face:
        raise ValueError("empty face")
    m0 = face[0]
    eq = []
    for m in face[1:]:
        coeffs = tuple(Fraction(a - b) for a, b in zip(m0, m))
        eq.append(AffineForm(coeffs, f.coeff(m0).value - f.coeff(m).value))
    outside = [m for m in f.support if m not in set(face)]
    le = tuple(_difference_forms(f, m0, outside))
    return HRep(f.dim, le, tuple(eq) + _chart_forms(f))


def hrep_feasible(h: HRep) -> Optional[tuple[Fraction, ...]]:
    a_ub = [list(f.coeffs) for f in h.le]
    b_ub = [-f.const for f in h.le]
    a_eq = [list(g.coeffs) for g in h.eq]
    b_eq = [-g.const for g in h.eq]
    return lp_feasible_point(a_ub, b_ub, a_eq, b_eq, nvar=h.dim)


def hrep_affine_dim(h: HRep) -> int:
    """Dimension of the affine span of {x : eq forms vanish}; for cells of
    normal complexes the inequalities never cut this further."""
    rank = mat_rank([list(g.coeffs) for g in h.eq]) if h.eq else 0
    return h.dim - rank


def is_bounded_cell(h: HRep, known_feasible: bool = False) -> bool:
    """Recession-cone test: the cell is bounded iff the only direction
    satisfying all constraints homogeneously is zero.  Infeasible input
    is an error, not 'bounded'."""
    if not known_feasible and hrep_feasible(h) is None:
        raise InfeasibleSystemError("H-representation has no points")
    return cone_is_trivial(
        [f.coeffs for f in h.le], [g.coeffs for g in h.eq], h.dim
    )


def interior_point(h: HRep, bound: int = 0) -> Optional[tuple[Fraction, ...]]:
    """A relative-interior point (all inequalities strict), optionally
    confined to the box |x_i| <= bound.  None when no such point exists."""
    d = h.dim
    a_ub = [list(f.coeffs) + [Fraction(1)] for f in h.le]
    b_ub = [-f.const for f in h.le]
    a_ub.append([Fraction(0)] * d + [Fraction(1)])
    b_ub.append(Fraction(1))
    if bound:
        for i in range(d):
            row = [Fraction(0)] * d
            row[i] = Fraction(1)
            a_ub.append(row + [Fraction(0)])
            b_ub.append(Fraction(bound))
            row2 = [Fraction(0)] * d
            row2[i] = Fraction(-1)
            a_ub.append(row2 + [Fraction(0)])
            b_ub.append(Fraction(bound))
    a_eq = [list(g.coeffs) + [Fraction(0)] for g in h.eq]
    b_eq = [-g.const for g in h.eq]
    c = [Fraction(0)] * d + [Fraction(1)]
    res = lp_max(c, a_ub=a_ub, b_ub=b_ub, a_eq=a_eq, b_eq=b_eq)
    if res.status != "optimal" or res.value <= 0:
        return None
    return res.x[:d]
