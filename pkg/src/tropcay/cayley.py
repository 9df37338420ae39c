"""The Cayley trick: subdivisions of a stacked configuration versus
mixed subdivisions of the Minkowski sum.

Groups A_1,...,A_n in R^d are embedded side by side in R^{d+n} by
appending the n unit vectors: a point a of group i becomes (a, e_i).
Cells of a subdivision of the embedding that meet every group correspond
to mixed cells (A'_1,...,A'_n); forgetting the embedding and summing one
point from each group recovers cells of the Minkowski sum.  The bijection
is purely label-based, so no rescaling by 1/n ever enters.

When the groups are supports of tropical polynomials and the liftings
their coefficients, the induced mixed subdivision matches the coefficient
subdivision of the tropical product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .errors import DimensionMismatchError, NonTransversalCellError
from .polyhedral import (
    Label,
    Lifting,
    PointConfiguration,
    Subdivision,
    regular_subdivision,
)


@dataclass(frozen=True)
class CayleyConfig:
    """The stacked configuration.  Embedded labels are (group_index,
    original_label) with group indices counted from 0."""

    parts: tuple[PointConfiguration, ...]
    embedded: PointConfiguration


@dataclass(frozen=True)
class MixedCell:
    """One cell of a mixed subdivision: a choice of label subset from
    every group, whose Minkowski sum is the cell geometrically."""

    label_subsets: tuple[frozenset[Label], ...]

    def sum_points(self, parts: Sequence[PointConfiguration]) -> frozenset:
        """All sums of one point per group, as coordinate tuples."""
        pts = set()
        for choice in product(*(sorted(s, key=repr) for s in self.label_subsets)):
            coords = [parts[i].coords(lab) for i, lab in enumerate(choice)]
            pts.add(tuple(sum(col) for col in zip(*coords)))
        return frozenset(pts)


@dataclass(frozen=True)
class MixedSubdivision:
    parts: tuple[PointConfiguration, ...]
    cells: frozenset[MixedCell]

    def sorted_cells(self) -> list[tuple[tuple[Label, ...], ...]]:
        return sorted(
            tuple(tuple(sorted(s, key=repr)) for s in cell.label_subsets)
            for cell in self.cells
        )

    def refines(self, other: "MixedSubdivision") -> bool:
        """Componentwise label containment of every cell in some cell."""
        return all(
            any(
                all(a <= b for a, b in zip(cell.label_subsets, big.label_subsets))
                for big in other.cells
            )
            for cell in self.cells
        )


def cayley_embed(parts: Sequence[PointConfiguration]) -> CayleyConfig:
    """Stack the groups into R^{d+n} with unit-vector tags.

    For groups of simplex vertices the embedded points are literally the
    vertices of a product of simplices: no affine change is needed.
    """
    parts = tuple(parts)
    if not parts:
        raise DimensionMismatchError("need at least one group")
    d = parts[0].ambient_dim
    if any(p.ambient_dim != d for p in parts):
        raise DimensionMismatchError("groups live in different dimensions")
    n = len(parts)
    pairs = []
    for i, part in enumerate(parts):
        tag = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
        for lab, coords in part.points:
            pairs.append(((i, lab), coords + tag))
    return CayleyConfig(parts, PointConfiguration.of(pairs))


def _parts_from_embedding(config: PointConfiguration) -> tuple[PointConfiguration, ...]:
    """Recover the groups from an embedded configuration, validating the
    unit-vector tags."""
    groups: dict[int, list] = {}
    for lab, coords in config.points:
        if not (isinstance(lab, tuple) and len(lab) == 2 and isinstance(lab[0], int)):
            raise ValueError("labels of an embedded configuration are (group, label)")
        groups.setdefault(lab[0], []).append((lab[1], coords))
    n = len(groups)
    if sorted(groups) != list(range(n)):
        raise ValueError("group indices must be 0..n-1 with no gaps")
    d = config.ambient_dim - n
    if d < 1:
        raise DimensionMismatchError("embedding has no room for base coordinates")
    parts = []
    for i in range(n):
        pts = []
        for lab, coords in groups[i]:
            tag = coords[d:]
            want = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
            if tag != want:
                raise ValueError(f"point {lab} of group {i} carries the wrong tag")
            pts.append((lab, coords[:d]))
        parts.append(PointConfiguration.of(pts))
    return tuple(parts)


def cayley_to_mixed(sub: Subdivision) -> MixedSubdivision:
    """Read a subdivision of an embedded configuration as a mixed
    subdivision: split each cell by group.  A cell that misses a group
    has no mixed counterpart and is an error."""
    parts = _parts_from_embedding(sub.config)
    n = len(parts)
    cells = []
    for cell in sub.maximal_cells:
        subsets: list[set] = [set() for _ in range(n)]
        for (i, lab) in cell:
            subsets[i].add(lab)
        if any(not s for s in subsets):
            missing = [i for i, s in enumerate(subsets) if not s]
            raise NonTransversalCellError(
                f"cell {sorted(cell)} misses group(s) {missing}"
            )
        cells.append(MixedCell(tuple(frozenset(s) for s in subsets)))
    return MixedSubdivision(parts, frozenset(cells))


def mixed_to_cayley(ms: MixedSubdivision) -> Subdivision:
    """Lift a mixed subdivision back to the embedded configuration.  The
    result carries no lifting: it is combinatorial data."""
    cc = cayley_embed(ms.parts)
    for cell in ms.cells:
        if len(cell.label_subsets) != len(ms.parts):
            raise DimensionMismatchError("cell does not choose from every group")
        for i, subset in enumerate(cell.label_subsets):
            if not subset:
                raise NonTransversalCellError(f"empty choice in group {i}")
            known = set(ms.parts[i].labels)
            if not subset <= known:
                raise ValueError(f"unknown labels {sorted(subset - known, key=repr)}")
    cells = frozenset(
        frozenset(
            (i, lab)
            for i, subset in enumerate(cell.label_subsets)
            for lab in subset
        )
        for cell in ms.cells
    )
    return Subdivision(cc.embedded, None, cells)


def minkowski_config(parts: Sequence[PointConfiguration]) -> PointConfiguration:
    """The Minkowski sum as a labeled configuration: one label tuple per
    choice of a point from every group.  Coinciding sums keep their
    distinct labels."""
    parts = tuple(parts)
    if not parts:
        raise DimensionMismatchError("need at least one group")
    pairs = []
    for choice in product(*(p.points for p in parts)):
        label = tuple(lab for lab, _ in choice)
        coords = tuple(sum(col) for col in zip(*(c for _, c in choice)))
        pairs.append((label, coords))
    return PointConfiguration.of(pairs)


def mixed_regular(
    parts: Sequence[PointConfiguration],
    liftings: Sequence[Lifting],
    side: str = "below",
) -> MixedSubdivision:
    """The regular mixed subdivision induced by per-group liftings, via
    the Cayley route: lift the embedding by the concatenated heights,
    subdivide, and split cells by group."""
    cc = cayley_embed(parts)
    if len(liftings) != len(cc.parts):
        raise DimensionMismatchError("one lifting per group, please")
    lifted = {}
    for i, lift in enumerate(liftings):
        for lab in cc.parts[i].labels:
            lifted[(i, lab)] = lift[lab]
    sub = regular_subdivision(cc.embedded, lifted, side)
    return cayley_to_mixed(sub)
