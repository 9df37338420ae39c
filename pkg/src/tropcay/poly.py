"""Tropical polynomials with exact coefficients.

A polynomial is a finite family of terms ``c_m + m.x`` combined by min
or max.  Evaluation returns both the optimal value and the set of
exponents attaining it; a point is on the tropical hypersurface exactly
when that set has at least two elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, NamedTuple, Optional, Sequence

from .core import (
    MAX,
    MIN,
    Orientation,
    TropMatrix,
    TropNum,
    exact_vector,
    t_add,
    tropical,
)
from .errors import (
    DimensionMismatchError,
    EmptySupportError,
    UnsupportedCaseError,
)

Exponent = tuple[int, ...]


class EvalResult(NamedTuple):
    value: Fraction
    argopt: frozenset[Exponent]


@dataclass(frozen=True)
class TropPolynomial:
    """Canonical form: terms sorted by exponent, duplicates merged, and
    no coefficient equal to the additive identity.  Use :func:`make_poly`."""

    orientation: Orientation
    dim: int
    terms: tuple[tuple[Exponent, TropNum], ...]
    _by_exp: dict = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_by_exp", dict(self.terms))

    @property
    def support(self) -> tuple[Exponent, ...]:
        return tuple(m for m, _ in self.terms)

    def coeff(self, m: Exponent) -> Optional[TropNum]:
        return self._by_exp.get(tuple(m))

    def eval(self, x: Sequence) -> EvalResult:
        """Optimal value over all terms, and the exponents attaining it."""
        xs = exact_vector(x)
        if len(xs) != self.dim:
            raise DimensionMismatchError(
                f"point has {len(xs)} coordinates, polynomial has {self.dim}"
            )
        want_min = self.orientation is MIN
        best: Optional[Fraction] = None
        arg: list[Exponent] = []
        for m, c in self.terms:
            v = c.value + sum(e * xi for e, xi in zip(m, xs) if e)
            if best is None or v == best:
                arg.append(m)
                best = v
            elif (v < best) if want_min else (v > best):
                best = v
                arg = [m]
        return EvalResult(best, frozenset(arg))

    def vanishes(self, x: Sequence) -> bool:
        """True when the optimum is attained at least twice (the tropical
        notion of being a root)."""
        return len(self.eval(x).argopt) >= 2

    def __str__(self):
        opt = "min" if self.orientation is MIN else "max"
        parts = []
        for m, c in self.terms:
            mono = "+".join(
                f"{e}*x{i + 1}" if e != 1 else f"x{i + 1}"
                for i, e in enumerate(m)
                if e
            )
            parts.append(f"{c}" + (f" + {mono}" if mono else ""))
        return f"{opt}({'; '.join(parts)})"


def make_poly(
    terms: Iterable[tuple[Sequence[int], object]],
    orientation: Orientation,
    dim: int,
) -> TropPolynomial:
    """Build a polynomial in canonical form.

    Duplicate exponents merge by the tropical sum, coefficients equal to
    the additive identity are dropped, and an empty result is an error:
    the zero polynomial has no hypersurface and nothing downstream wants
    it.
    """
    if dim < 1:
        raise DimensionMismatchError("dimension must be positive")
    merged: dict[Exponent, TropNum] = {}
    for m, c in terms:
        m = tuple(int(e) for e in m)
        if len(m) != dim:
            raise DimensionMismatchError(
                f"exponent {m} does not have {dim} entries"
            )
        cv = tropical(c)
        orientation.require_legal(cv)
        if m in merged:
            merged[m] = t_add(merged[m], cv, orientation)
        else:
            merged[m] = cv
    kept = sorted(
        (m, c) for m, c in merged.items() if c != orientation.identity
    )
    if not kept:
        raise EmptySupportError("no effective terms")
    return TropPolynomial(orientation, dim, tuple(kept))


def poly_mul(f: TropPolynomial, g: TropPolynomial) -> TropPolynomial:
    """Tropical product: supports add, coefficients add, collisions merge
    by the tropical sum."""
    if f.orientation is not g.orientation:
        raise DimensionMismatchError("mixed orientations in a product")
    if f.dim != g.dim:
        raise DimensionMismatchError("mixed ambient dimensions in a product")
    acc: dict[Exponent, TropNum] = {}
    for m1, c1 in f.terms:
        for m2, c2 in g.terms:
            m = tuple(a + b for a, b in zip(m1, m2))
            c = c1 + c2
            if m in acc:
                acc[m] = f.orientation.pick(acc[m], c)
            else:
                acc[m] = c
    return TropPolynomial(f.orientation, f.dim, tuple(sorted(acc.items())))


def linear_form(column: Sequence, o: Orientation) -> TropPolynomial:
    """The tropical linear form attached to one matrix column.

    Support sits inside the unit vectors; the coefficient of x_i is the
    i-th entry for min, its negation for max.  Entries equal to +inf
    contribute no term at all.
    """
    col = [tropical(v) for v in column]
    d = len(col)
    terms = []
    for i, v in enumerate(col):
        if v.inf == 1:
            continue
        e = tuple(1 if j == i else 0 for j in range(d))
        terms.append((e, v if o is MIN else -v))
    if not terms:
        raise EmptySupportError("column has no finite entry")
    return make_poly(terms, o, d)


def arrangement_poly(v: TropMatrix) -> TropPolynomial:
    """Max-plus product of the linear forms of all columns; its
    hypersurface is the union of the column hyperplanes."""
    forms = [linear_form(v.column(k), MAX) for k in range(v.n)]
    return reduce(poly_mul, forms)


def separate_variables_product(v: TropMatrix) -> TropPolynomial:
    """The arrangement product with each column written in its own block
    of variables y_{ik}, laid out row-major: y_{ik} is variable (i-1)*n + k.

    With all entries finite this has d^n terms, one per choice of a row
    in every column, and no exponent collisions.
    """
    if not v.is_finite:
        raise UnsupportedCaseError(
            "separated variables need a finite matrix"
        )
    d, n = v.d, v.n
    forms = []
    for k in range(n):
        terms = []
        for i in range(d):
            e = [0] * (d * n)
            e[i * n + k] = 1
            terms.append((tuple(e), -v.entries[i][k]))
        forms.append(make_poly(terms, MAX, d * n))
    return reduce(poly_mul, forms)


def identify_variables(f: TropPolynomial, d: int, n: int) -> TropPolynomial:
    """Substitute y_{ik} := x_i in a polynomial over the row-major
    variables y_{11},...,y_{dn}: exponents collapse to row sums and
    collisions merge tropically."""
    if f.dim != d * n:
        raise DimensionMismatchError(f"expected {d * n} variables, got {f.dim}")
    terms = []
    for m, c in f.terms:
        collapsed = tuple(sum(m[i * n : (i + 1) * n]) for i in range(d))
        terms.append((collapsed, c))
    return make_poly(terms, f.orientation, d)


def is_homogeneous(f: TropPolynomial) -> Optional[int]:
    """The common total degree of all terms, or None."""
    degrees = {sum(m) for m in f.support}
    return degrees.pop() if len(degrees) == 1 else None


def negate_poly(f: TropPolynomial) -> TropPolynomial:
    """Negate all coefficients and swap orientation.

    Satisfies negate(F)(x) = -F(-x), with the same optimizing exponents
    at mirrored points.
    """
    return TropPolynomial(
        f.orientation.dual,
        f.dim,
        tuple((m, -c) for m, c in f.terms),
    )
