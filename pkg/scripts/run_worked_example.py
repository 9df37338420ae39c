#!/usr/bin/env python3
"""Walk the whole pipeline on the 3-goods / 4-countries example matrix
and drop the two SVG figures next to this script.

Usage:  python scripts/run_worked_example.py [outdir]
"""

import sys
from fractions import Fraction
from pathlib import Path

from tropcay import (
    Economy,
    TropMatrix,
    WagePriceSystem,
    arrangement_poly,
    cell_of_point,
    classify,
    coarse_type,
    competitive_pairs,
    covector,
    equilibrate,
    normal_complex,
    prices_from_wages,
    tconv_bounded_cells,
)
from tropcay.polyhedral import subdivision_from_poly
from tropcay.svgplot import render_arrangement, render_mixed

F = Fraction


def fmt(vec):
    return "(" + ", ".join(str(x) for x in vec) + ")"


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
    v = TropMatrix([[0, 0, 0, 0], [1, 4, 3, 0], [0, 1, 3, 2]])

    f = arrangement_poly(v)
    print(f"arrangement polynomial ({len(f.terms)} terms):")
    print(f"  {f}")

    z = [F(0), F(1), F(3)]
    cv = covector(v, z)
    print(f"\ncovector at {fmt(z)}: {cv.sorted_pairs()}")
    print(f"coarse type at (0, 2, 0): {coarse_type(covector(v, [F(0), F(2), F(0)]))}")
    print(f"dual cell of {fmt(z)}: {sorted(cell_of_point(f, z))}")

    nc = normal_complex(f)
    print(f"\nnormal complex: {len(nc.maximal_cells)} maximal cells")
    sub = subdivision_from_poly(f)
    print(f"dual subdivision of 4*triangle: {len(sub.maximal_cells)} cells")

    cells = tconv_bounded_cells(v)
    maximal = cells.maximal_cells()
    print(f"\nbounded cells of the column span: {len(cells.cells)} total")
    for c in maximal:
        print(f"  maximal dim {c.dim}: dual {sorted(c.dual_labels)}")

    e = Economy(v)
    w = (F(5), F(5), F(1), F(2))
    s = WagePriceSystem.of(w, prices_from_wages(e, w))
    print(f"\nwages {fmt(w)} -> prices {fmt(s.logp)}")
    print(f"classification: {classify(e, s)}")
    print(f"competitive pairs: {sorted(competitive_pairs(e, s))}")
    eq = equilibrate(e, w)
    print(f"equilibrated wages {fmt(eq.logw)}, prices {fmt(eq.logp)}")
    print(f"after equilibration: {classify(e, eq)}")

    outdir.mkdir(parents=True, exist_ok=True)
    arr_path = outdir / "arrangement.svg"
    mix_path = outdir / "mixed.svg"
    arr_path.write_bytes(render_arrangement(v).encode())
    mix_path.write_bytes(render_mixed(sub.maximal_cells).encode())
    print(f"\nwrote {arr_path} and {mix_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
