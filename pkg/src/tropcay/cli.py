"""Command-line driver.

Subcommands read one JSON input document, run the matching pipeline and
print a canonical JSON report (sorted keys, exact rational strings) so
repeated runs are byte-identical.  ``plot`` additionally writes an SVG.

Exit codes: 0 success, 2 malformed input, 3 unsupported case,
4 failed mathematical precondition.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import arrangement as arr
from . import poly as tp
from . import polyhedral as ph
from . import ricardo as rc
from . import svgplot
from .cayley import mixed_regular
from .core import TropMatrix
from .errors import SchemaError, TropcayError, UnsupportedCaseError
from .serialize import (
    InputDocument,
    canonical_json,
    entry_str,
    load_input,
    parse_entry,
    rational_str,
)


def _parse_vector(text: str, what: str) -> tuple[Fraction, ...]:
    out = []
    for piece in text.split(","):
        e = parse_entry(piece.strip())
        if not e.is_finite:
            raise SchemaError(f"{what} entries must be finite, got {piece!r}")
        out.append(e.value)
    return tuple(out)


def _need(doc: InputDocument, kind: str, command: str) -> None:
    if doc.kind != kind:
        raise SchemaError(f"{command} needs a {kind!r} input, got {doc.kind!r}")


def _report(command: str, doc: InputDocument) -> dict:
    return {"tool": "tropcay", "command": command, "input": doc.canonical()}


def _poly_section(f: tp.TropPolynomial) -> dict:
    return {
        "orientation": f.orientation.name.lower(),
        "variables": f.dim,
        "terms": [
            {"exponent": list(m), "coeff": entry_str(c)} for m, c in f.terms
        ],
    }


def _cell_list(cells) -> list:
    return sorted(sorted(list(m) for m in cell) for cell in cells)


def cmd_arrangement(args) -> dict:
    doc = load_input(args.input)
    _need(doc, "matrix", "arrangement")
    f = tp.arrangement_poly(doc.matrix)
    report = _report("arrangement", doc)
    want_poly = args.poly or not (args.cells or args.dual)
    if want_poly:
        report["polynomial"] = _poly_section(f)
    if args.cells:
        complex_ = ph.normal_complex(f)
        report["cells"] = {
            "count": len(complex_.maximal_cells),
            "dual_points": [list(c.dual_point) for c in complex_.maximal_cells],
        }
    if args.dual:
        sub = ph.subdivision_from_poly(f)
        report["dual_subdivision"] = _cell_list(sub.maximal_cells)
    return report


def cmd_covector(args) -> dict:
    doc = load_input(args.input)
    _need(doc, "matrix", "covector")
    z = _parse_vector(args.point, "--point")
    if len(z) != doc.matrix.d:
        raise SchemaError(
            f"--point needs {doc.matrix.d} coordinates, got {len(z)}"
        )
    cv = arr.covector(doc.matrix, z)
    report = _report("covector", doc)
    report["point"] = [rational_str(x) for x in z]
    report["covector"] = {
        "pairs": [list(p) for p in cv.sorted_pairs()],
        "coarse_type": list(arr.coarse_type(cv)),
    }
    report["value"] = entry_str(tp.arrangement_poly(doc.matrix).eval(z).value)
    return report


def cmd_tconv(args) -> dict:
    doc = load_input(args.input)
    _need(doc, "matrix", "tconv")
    cells = arr.tconv_bounded_cells(doc.matrix)
    report = _report("tconv", doc)
    report["bounded_cells"] = [
        {
            "dual": sorted(list(m) for m in c.dual_labels),
            "dim": c.dim,
            "maximal": c.maximal,
        }
        for c in cells.cells
    ]
    by_dim: dict[str, int] = {}
    for c in cells.maximal_cells():
        by_dim[str(c.dim)] = by_dim.get(str(c.dim), 0) + 1
    report["maximal_count_by_dim"] = by_dim
    return report


def _simplex_parts(v: TropMatrix):
    """One standard-simplex part per column, lifted by that column."""
    corners = [
        (f"e{i + 1}", tuple(Fraction(int(i == j)) for j in range(v.d)))
        for i in range(v.d)
    ]
    part = ph.PointConfiguration.of(corners)
    parts, liftings = [], []
    for k in range(v.n):
        col = v.column(k)
        if not all(e.is_finite for e in col):
            raise UnsupportedCaseError("mixed subdivision needs finite columns")
        parts.append(part)
        liftings.append({f"e{i + 1}": col[i].value for i in range(v.d)})
    return parts, liftings


def cmd_mixed(args) -> dict:
    doc = load_input(args.input)
    if doc.kind == "configuration":
        sub = ph.regular_subdivision(doc.config, doc.lifting, side=doc.side)
        report = _report("mixed", doc)
        report["mixed"] = {
            "kind": "configuration",
            "cells": sorted(sorted(cell) for cell in sub.maximal_cells),
            "non_faces": sorted(sub.non_face_labels),
        }
        return report
    _need(doc, "matrix", "mixed")
    parts, liftings = _simplex_parts(doc.matrix)
    ms = mixed_regular(parts, liftings, side="below")
    identified = [
        sorted([int(x) for x in pt] for pt in cell.sum_points(parts))
        for cell in ms.cells
    ]
    report = _report("mixed", doc)
    report["mixed"] = {
        "kind": "matrix",
        "parts": len(parts),
        "cells": [[sorted(s) for s in c] for c in ms.sorted_cells()],
        "identified_cells": sorted(identified),
    }
    return report


def _wage_price(doc: InputDocument, args) -> rc.WagePriceSystem:
    if args.wages:
        logw = _parse_vector(args.wages, "--wages")
    elif doc.wages is not None:
        logw = doc.wages
    else:
        raise SchemaError("ricardo needs wages from --wages or the input document")
    if args.prices:
        logp = _parse_vector(args.prices, "--prices")
    elif doc.prices is not None:
        logp = doc.prices
    else:
        logp = rc.prices_from_wages(doc.economy, logw)
    return rc.WagePriceSystem.of(logw, logp)


def _system_section(e: rc.Economy, s: rc.WagePriceSystem) -> dict:
    out = {
        "wages": [rational_str(x) for x in s.logw],
        "prices": [rational_str(x) for x in s.logp],
        "classification": rc.classify(e, s),
    }
    if out["classification"]["admissible"]:
        out["competitive_pairs"] = [
            list(p) for p in sorted(rc.competitive_pairs(e, s))
        ]
    return out


def cmd_ricardo(args) -> dict:
    doc = load_input(args.input)
    _need(doc, "economy", "ricardo")
    e = doc.economy
    s = _wage_price(doc, args)
    report = _report("ricardo", doc)
    report.update(_system_section(e, s))
    if args.equilibrate:
        eq = rc.equilibrate(e, s.logw)
        report["equilibrated"] = _system_section(e, eq)
    return report


def cmd_plot(args) -> dict:
    doc = load_input(args.input)
    _need(doc, "matrix", "plot")
    if args.what == "arrangement":
        svg = svgplot.render_arrangement(doc.matrix)
    else:
        if doc.matrix.d != 3:
            raise UnsupportedCaseError(
                f"mixed pictures need a 3-row matrix, got {doc.matrix.d} rows"
            )
        sub = ph.subdivision_from_poly(tp.arrangement_poly(doc.matrix))
        svg = svgplot.render_mixed(sub.maximal_cells)
    with open(args.out, "wb") as fh:
        fh.write(svg.encode("utf-8"))
    report = _report("plot", doc)
    report["written"] = args.out
    return report


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropcay",
        description="Exact tropical arrangements, mixed subdivisions, "
        "tropical convexity and Ricardian wage-price systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("input", help="path to a JSON input document")
        p.add_argument("--format", choices=["json"], default="json")
        p.set_defaults(func=func)
        return p

    p = add("arrangement", cmd_arrangement, "arrangement polynomial and its cells")
    p.add_argument("--poly", action="store_true", help="list polynomial terms (default)")
    p.add_argument("--cells", action="store_true", help="count maximal cells")
    p.add_argument("--dual", action="store_true", help="list dual subdivision cells")

    p = add("covector", cmd_covector, "covector and coarse type of a point")
    p.add_argument("--point", required=True, help="comma-separated coordinates")

    add("tconv", cmd_tconv, "bounded cells of the column span")

    add("mixed", cmd_mixed, "mixed or regular subdivision of the input")

    p = add("ricardo", cmd_ricardo, "classify and equilibrate a wage-price system")
    p.add_argument("--wages", help="comma-separated log wages")
    p.add_argument("--prices", help="comma-separated log prices")
    p.add_argument("--equilibrate", action="store_true")

    p = add("plot", cmd_plot, "draw an arrangement or mixed subdivision as SVG")
    p.add_argument("--what", choices=["arrangement", "mixed"], required=True)
    p.add_argument("--out", required=True, help="SVG output path")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except SchemaError as exc:
        print(f"tropcay: input error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedCaseError as exc:
        print(f"tropcay: unsupported: {exc}", file=sys.stderr)
        return 3
    except TropcayError as exc:
        print(f"tropcay: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(canonical_json(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
