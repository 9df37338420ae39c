"""Exact min-plus / max-plus arithmetic on extended rationals.

Scalars are :class:`TropNum`: a :class:`fractions.Fraction` or one of the
two infinities.  One scalar type serves both semiring orientations; each
operation checks that the sentinels in its inputs are legal for the
requested orientation (+inf belongs to min-plus, -inf to max-plus), so
data can be negated and transposed freely between the two worlds.
Floating point is rejected everywhere: ties are meaningful here, and a
tie is exactly what rounding destroys.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatchError,
    OrientationError,
    UndefinedProductError,
)

RationalLike = Union[int, str, Fraction]


class TropNum:
    """An exact extended rational: a Fraction, +inf, or -inf.

    Ordered the usual way (-inf < finite < +inf).  ``+`` is ordinary
    (extended) addition, i.e. the tropical *product*; adding opposite
    infinities raises :class:`UndefinedProductError`.
    """

    __slots__ = ("inf", "value")

    def __init__(self, value: RationalLike = 0, inf: int = 0):
        if inf:
            self.inf = 1 if inf > 0 else -1
            self.value = None
        else:
            self.inf = 0
            self.value = Fraction(value)

    @property
    def is_finite(self) -> bool:
        return self.inf == 0

    def __add__(self, other: "TropNum") -> "TropNum":
        if not isinstance(other, TropNum):
            return NotImplemented
        if self.inf == 0 and other.inf == 0:
            return TropNum(self.value + other.value)
        if self.inf and other.inf and self.inf != other.inf:
            raise UndefinedProductError("(+inf) + (-inf) is undefined")
        return POS_INF if self.inf > 0 or other.inf > 0 else NEG_INF

    def __neg__(self) -> "TropNum":
        if self.inf:
            return NEG_INF if self.inf > 0 else POS_INF
        return TropNum(-self.value)

    def __sub__(self, other: "TropNum") -> "TropNum":
        return self + (-other)

    def _cmp(self, other: "TropNum") -> int:
        if self.inf != other.inf:
            return -1 if self.inf < other.inf else 1
        if self.inf:
            return 0
        if self.value == other.value:
            return 0
        return -1 if self.value < other.value else 1

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if not isinstance(other, TropNum):
            return NotImplemented
        return self.inf == other.inf and self.value == other.value

    def __hash__(self):
        return hash((self.inf, self.value))

    def __repr__(self):
        if self.inf:
            return "TropNum(+inf)" if self.inf > 0 else "TropNum(-inf)"
        return f"TropNum({self.value})"

    def __str__(self):
        if self.inf:
            return "inf" if self.inf > 0 else "-inf"
        return str(self.value)


POS_INF = TropNum(inf=1)
NEG_INF = TropNum(inf=-1)


def tropical(x) -> TropNum:
    """Coerce ints, Fractions, and strings ("7", "-3/2", "0.25", "inf",
    "-inf") to :class:`TropNum`.  Floats are rejected: they are not exact."""
    if isinstance(x, TropNum):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}; pass int, Fraction, or string")
    if isinstance(x, str):
        s = x.strip()
        if s in ("inf", "+inf"):
            return POS_INF
        if s == "-inf":
            return NEG_INF
        return TropNum(Fraction(s))
    return TropNum(Fraction(x))


def exact(x) -> Fraction:
    """Coerce to a finite Fraction, rejecting floats and infinities."""
    if isinstance(x, TropNum):
        if not x.is_finite:
            raise OrientationError("expected a finite value, got an infinity")
        return x.value
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}; pass int, Fraction, or string")
    return Fraction(x)


def exact_vector(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(exact(x) for x in xs)


def trop_vector(xs: Iterable) -> tuple[TropNum, ...]:
    return tuple(tropical(x) for x in xs)


class Orientation(enum.Enum):
    """Which of the two tropical semirings is in force."""

    MIN = "min"
    MAX = "max"

    @property
    def identity(self) -> TropNum:
        """The additive identity: +inf for min-plus, -inf for max-plus."""
        return POS_INF if self is Orientation.MIN else NEG_INF

    @property
    def one(self) -> TropNum:
        """The multiplicative identity, 0 in both orientations."""
        return TropNum(0)

    @property
    def dual(self) -> "Orientation":
        return Orientation.MAX if self is Orientation.MIN else Orientation.MIN

    def legal(self, a: TropNum) -> bool:
        """-inf never appears in min-plus data, +inf never in max-plus."""
        return a.inf != (-1 if self is Orientation.MIN else 1)

    def require_legal(self, *vals: TropNum) -> None:
        for a in vals:
            if not self.legal(a):
                raise OrientationError(
                    f"{a} is not a legal {self.value}-plus value"
                )

    def pick(self, a: TropNum, b: TropNum) -> TropNum:
        return min(a, b) if self is Orientation.MIN else max(a, b)


MIN = Orientation.MIN
MAX = Orientation.MAX


def t_add(a, b, o: Orientation) -> TropNum:
    """Tropical sum: min or max of the operands, by orientation."""
    a, b = tropical(a), tropical(b)
    o.require_legal(a, b)
    return o.pick(a, b)


def t_mul(a, b) -> TropNum:
    """Tropical product: ordinary (extended) addition."""
    return tropical(a) + tropical(b)


class TropMatrix:
    """A d-by-n matrix of extended rationals.

    Invariant: every column holds at least one finite entry, so tropical
    matrix-vector products against finite vectors stay finite.
    """

    __slots__ = ("d", "n", "entries")

    def __init__(self, rows: Iterable[Iterable]):
        entries = tuple(tuple(tropical(e) for e in row) for row in rows)
        if not entries or not entries[0]:
            raise DimensionMismatchError("matrix needs at least one row and column")
        n = len(entries[0])
        if any(len(row) != n for row in entries):
            raise DimensionMismatchError("ragged rows")
        for k in range(n):
            if all(not row[k].is_finite for row in entries):
                raise DimensionMismatchError(
                    f"column {k + 1} has no finite entry"
                )
        self.entries = entries
        self.d = len(entries)
        self.n = n

    @property
    def is_finite(self) -> bool:
        return all(e.is_finite for row in self.entries for e in row)

    def row(self, i: int) -> tuple[TropNum, ...]:
        return self.entries[i]

    def column(self, k: int) -> tuple[TropNum, ...]:
        return tuple(row[k] for row in self.entries)

    def transpose(self) -> "TropMatrix":
        return TropMatrix(zip(*self.entries))

    def __neg__(self) -> "TropMatrix":
        return TropMatrix((-e for e in row) for row in self.entries)

    def sharp(self) -> "TropMatrix":
        """The negated transpose; see :func:`sharp`."""
        return sharp(self)

    def __eq__(self, other):
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(e) for e in row) for row in self.entries)
        return f"TropMatrix[{body}]"


def sharp(m: TropMatrix) -> TropMatrix:
    """Negated transpose M^# with (M^#)_{ki} = -M_{ik}.

    Swaps the two orientations; applying it twice gives the matrix back.
    """
    cols = [[-m.entries[i][k] for i in range(m.d)] for k in range(m.n)]
    return TropMatrix(cols)


def mat_vec(m: TropMatrix, x: Sequence, o: Orientation) -> tuple[TropNum, ...]:
    """Tropical matrix-vector product: result_i = opt_k (M_ik + x_k)."""
    xs = trop_vector(x)
    if len(xs) != m.n:
        raise DimensionMismatchError(f"vector length {len(xs)} != {m.n} columns")
    for row in m.entries:
        o.require_legal(*row)
    o.require_legal(*xs)
    out = []
    for row in m.entries:
        acc = o.identity
        for a, b in zip(row, xs):
            acc = o.pick(acc, a + b)
        out.append(acc)
    return tuple(out)


def hilbert_dist(x: Sequence, y: Sequence) -> Fraction:
    """Hilbert projective distance max_{i,j} |x_i + y_j - x_j - y_i|.

    Zero exactly when x and y differ by a constant vector, i.e. when they
    name the same point of the quotient by the all-ones line.
    """
    xs, ys = exact_vector(x), exact_vector(y)
    if len(xs) != len(ys):
        raise DimensionMismatchError("vectors of unequal length")
    diffs = [a - b for a, b in zip(xs, ys)]
    return max(diffs) - min(diffs)


@dataclass(frozen=True)
class ProjectivePoint:
    """A point of R^d modulo the all-ones line, stored with first
    coordinate normalized to zero."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coords or self.coords[0] != 0:
            raise ValueError("canonical representative must start with 0; use .of()")

    @classmethod
    def of(cls, vec: Sequence) -> "ProjectivePoint":
        xs = exact_vector(vec)
        if not xs:
            raise DimensionMismatchError("empty vector")
        return cls(tuple(v - xs[0] for v in xs))

    @property
    def dim(self) -> int:
        return len(self.coords)
