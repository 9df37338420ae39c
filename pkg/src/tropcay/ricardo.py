"""Ricardian trade in logarithmic coordinates.

An economy is a finite matrix logR of log unit labor requirements, rows
indexed by goods and columns by countries.  Log wages w and log prices p
interact tropically: min-plus products of logR price the goods, max-plus
products of the negated transpose recover supporting wages.  The induced
Shapley-type operators are idempotent, so one application of either
reaches an equilibrium.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    MAX,
    MIN,
    TropMatrix,
    exact_vector,
    hilbert_dist,
    mat_vec,
    sharp,
)
from .errors import AdmissibilityError, DimensionMismatchError
from .arrangement import Covector, covector


@dataclass(frozen=True)
class Economy:
    """logR with every entry finite: each country can produce each good,
    if perhaps at terrible cost."""

    logR: TropMatrix

    def __post_init__(self):
        if not self.logR.is_finite:
            raise AdmissibilityError("log requirement matrix must be finite")

    @property
    def goods(self) -> int:
        return self.logR.d

    @property
    def countries(self) -> int:
        return self.logR.n

    @classmethod
    def from_positive_requirements(
        cls, r: Sequence[Sequence], digits: int = 6
    ) -> "Economy":
        """Ingest a positive decimal matrix R by taking base-10 logs,
        rounded to ``digits`` decimal places.

        The rounding makes this approximate; everything downstream is
        exact in the rounded data.  Prefer passing logs directly.
        """
        import math

        scale = 10**digits
        rows = []
        for row in r:
            out = []
            for x in row:
                fx = Fraction(x)
                if fx <= 0:
                    raise AdmissibilityError("requirements must be positive")
                out.append(Fraction(round(math.log10(fx) * scale), scale))
            rows.append(out)
        return cls(TropMatrix(rows))


@dataclass(frozen=True)
class WagePriceSystem:
    """Log wages (one per country) and log prices (one per good)."""

    logw: tuple[Fraction, ...]
    logp: tuple[Fraction, ...]

    @classmethod
    def of(cls, logw: Sequence, logp: Sequence) -> "WagePriceSystem":
        return cls(exact_vector(logw), exact_vector(logp))


def _check_shapes(e: Economy, s: WagePriceSystem) -> None:
    if len(s.logw) != e.countries or len(s.logp) != e.goods:
        raise DimensionMismatchError("wage/price lengths do not match economy")


def is_admissible(e: Economy, s: WagePriceSystem) -> bool:
    """No production is profitable: logR_ik + w_k >= p_i everywhere."""
    _check_shapes(e, s)
    return all(
        e.logR.entries[i][k].value + s.logw[k] >= s.logp[i]
        for i in range(e.goods)
        for k in range(e.countries)
    )


def prices_from_wages(e: Economy, logw: Sequence) -> tuple[Fraction, ...]:
    """Cheapest-supplier prices: p_i = min_k (logR_ik + w_k)."""
    ws = exact_vector(logw)
    if len(ws) != e.countries:
        raise DimensionMismatchError("wage length does not match economy")
    return tuple(x.value for x in mat_vec(e.logR, ws, MIN))


def wages_from_prices(e: Economy, logp: Sequence) -> tuple[Fraction, ...]:
    """Largest supportable wages: w_k = max_i (p_i - logR_ik)."""
    ps = exact_vector(logp)
    if len(ps) != e.goods:
        raise DimensionMismatchError("price length does not match economy")
    return tuple(x.value for x in mat_vec(sharp(e.logR), ps, MAX))


def shapley_T(e: Economy, logp: Sequence) -> tuple[Fraction, ...]:
    """Price-side operator T(p)_i = min_k max_j (r_ik - r_jk + p_j).

    Idempotent; its fixed points are exactly the tropical convex hull of
    the columns of logR.
    """
    return prices_from_wages(e, wages_from_prices(e, logp))


def dual_shapley(e: Economy, logw: Sequence) -> tuple[Fraction, ...]:
    """Wage-side operator T#(w) = wages of the prices of w; idempotent."""
    return wages_from_prices(e, prices_from_wages(e, logw))


def sharing(e: Economy, s: WagePriceSystem) -> bool:
    """Prices are exactly generated by the wages."""
    _check_shapes(e, s)
    return prices_from_wages(e, s.logw) == s.logp


def covering(e: Economy, s: WagePriceSystem) -> bool:
    """Wages are exactly recovered from the prices."""
    _check_shapes(e, s)
    return wages_from_prices(e, s.logp) == s.logw


def classify(e: Economy, s: WagePriceSystem) -> dict:
    """Admissibility plus the two one-sided equilibrium properties."""
    return {
        "admissible": is_admissible(e, s),
        "sharing": sharing(e, s),
        "covering": covering(e, s),
    }


def competitive_pairs(e: Economy, s: WagePriceSystem) -> frozenset[tuple[int, int]]:
    """Pairs (good, country), 1-based, where production breaks even:
    logR_ik + w_k = p_i.  Requires admissibility, under which these are
    the minimizing pairs.

    Equivalently the covector of -w with respect to transpose(logR), with
    pair order swapped; see :func:`competitive_pairs_covector`.
    """
    _check_shapes(e, s)
    if not is_admissible(e, s):
        raise AdmissibilityError("system allows profitable production")
    return frozenset(
        (i + 1, k + 1)
        for i in range(e.goods)
        for k in range(e.countries)
        if e.logR.entries[i][k].value + s.logw[k] == s.logp[i]
    )


def competitive_pairs_covector(e: Economy, logw: Sequence) -> Covector:
    """The covector of -w with respect to the transposed economy; for
    admissible sharing systems its transposed pairs are the competitive
    pairs."""
    ws = exact_vector(logw)
    return covector(e.logR.transpose(), [-x for x in ws])


def equilibrate(e: Economy, logw: Sequence) -> WagePriceSystem:
    """Adjust wages by one application of the wage-side operator; prices
    are unchanged and the result is sharing and covering."""
    ws = exact_vector(logw)
    w2 = dual_shapley(e, ws)
    return WagePriceSystem(tuple(w2), prices_from_wages(e, w2))


def equilibrate_prices(e: Economy, logp: Sequence) -> WagePriceSystem:
    """The price-side twin: adjust prices by T, then support them."""
    ps = exact_vector(logp)
    p2 = shapley_T(e, ps)
    return WagePriceSystem(wages_from_prices(e, p2), tuple(p2))


def wage_distance(a: Sequence, b: Sequence) -> Fraction:
    """Hilbert distance between wage (or price) vectors: zero means the
    same relative system."""
    return hilbert_dist(a, b)
