"""Acceptance checklist.  Each test prints one PASS/FAIL line; the lines
are written past pytest's capture so the checklist always shows.

Run as:  pytest tests/test_acceptance.py -v
"""

import io
import json
import random
import sys
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from fractions import Fraction
from pathlib import Path

from tropcay.arrangement import (
    coarse_type,
    covector,
    membership,
    project_nearest,
    tconv_bounded_cells,
    tropical_combination,
)
from tropcay.cayley import cayley_embed, cayley_to_mixed, mixed_regular, mixed_to_cayley
from tropcay.cli import main as cli_main
from tropcay.core import (
    NEG_INF,
    POS_INF,
    Orientation,
    ProjectivePoint,
    TropMatrix,
    t_add,
    t_mul,
    tropical,
)
from tropcay.poly import (
    arrangement_poly,
    identify_variables,
    make_poly,
    poly_mul,
    separate_variables_product,
)
from tropcay.polyhedral import (
    PointConfiguration,
    cell_of_point,
    regular_subdivision,
    subdivision_from_poly,
)
from tropcay.ricardo import (
    Economy,
    WagePriceSystem,
    classify,
    competitive_pairs,
    dual_shapley,
    equilibrate,
    prices_from_wages,
    shapley_T,
)

from oracles import subdivision_oracle

F = Fraction
MIN, MAX = Orientation.MIN, Orientation.MAX

V = TropMatrix([[0, 0, 0, 0], [1, 4, 3, 0], [0, 1, 3, 2]])
DATA = Path(__file__).resolve().parent.parent / "data"

# frozen expected arrangement polynomial of V
V_TERMS = {
    (4, 0, 0): 0, (3, 1, 0): 0, (3, 0, 1): 0,
    (2, 2, 0): -1, (2, 1, 1): 0, (2, 0, 2): -1,
    (1, 3, 0): -4, (1, 2, 1): -2, (1, 1, 2): -1, (1, 0, 3): -3,
    (0, 4, 0): -8, (0, 3, 1): -5, (0, 2, 2): -4, (0, 1, 3): -4,
    (0, 0, 4): -6,
}

GOLDEN_COVECTOR = frozenset({(3, 1), (3, 2), (1, 3), (3, 3), (2, 4), (3, 4)})


@contextmanager
def criterion(num, text):
    try:
        yield
    except BaseException:
        sys.__stdout__.write(f"[criterion {num:2d}] FAIL  {text}\n")
        raise
    sys.__stdout__.write(f"[criterion {num:2d}] PASS  {text}\n")


def test_01_arrangement_polynomial_exact():
    with criterion(1, "15-term arrangement polynomial, exact coefficients"):
        f = arrangement_poly(V)
        assert dict(f.terms) == {m: tropical(c) for m, c in V_TERMS.items()}


def test_02_covector_and_coarse_type():
    with criterion(2, "covector, coarse type and unique argmax at worked points"):
        assert covector(V, [F(0), F(1), F(3)]).pairs == GOLDEN_COVECTOR
        cv = covector(V, [F(0), F(2), F(0)])
        assert coarse_type(cv) == (2, 2, 0)
        r = arrangement_poly(V).eval([F(0), F(2), F(0)])
        assert r.value == 3 and r.argopt == frozenset({(2, 2, 0)})


def test_03_separated_variables_table():
    with criterion(3, "81-term separated product, argmax support, identification"):
        g = separate_variables_product(V)
        assert len(g.terms) == 81
        y = [F(0)] * 4 + [F(1)] * 4 + [F(3)] * 4
        r = g.eval(y)
        assert r.value == 6
        assert len(r.argopt) == 4
        union = set()
        for m in r.argopt:
            for idx, e in enumerate(m):
                if e:
                    union.add((idx // 4 + 1, idx % 4 + 1))
        assert union == set(GOLDEN_COVECTOR)
        assert identify_variables(g, 3, 4) == arrangement_poly(V)


def test_04_dual_cell_of_point():
    with criterion(4, "dual subdivision cell of the worked point"):
        got = cell_of_point(arrangement_poly(V), [F(0), F(1), F(3)])
        assert got == frozenset({(0, 0, 4), (0, 1, 3), (1, 0, 3), (1, 1, 2)})


def test_05_bounded_cells_of_column_span():
    with criterion(5, "four maximal bounded cells: three 2-dim, one 1-dim"):
        maximal = tconv_bounded_cells(V).maximal_cells()
        assert len(maximal) == 4
        dims = sorted(c.dim for c in maximal)
        assert dims == [1, 2, 2, 2]
        duals = {c.dual_labels for c in maximal}
        assert duals == {
            frozenset({(1, 1, 2)}),
            frozenset({(1, 2, 1)}),
            frozenset({(2, 1, 1)}),
            frozenset({(0, 3, 1), (1, 3, 0)}),
        }


def test_06_ricardo_worked_pipeline():
    with criterion(6, "wage-price classification, pairs, and equilibration"):
        e = Economy(V)
        w = (F(5), F(5), F(1), F(2))
        s = WagePriceSystem.of(w, prices_from_wages(e, w))
        assert classify(e, s) == {
            "admissible": True,
            "sharing": True,
            "covering": False,
        }
        assert competitive_pairs(e, s) == frozenset(
            {(1, 3), (2, 4), (3, 3), (3, 4)}
        )
        eq = equilibrate(e, w)
        assert eq.logw == (F(4), F(3), F(1), F(2))
        assert eq.logp == (F(1), F(2), F(4))
        assert classify(e, eq) == {
            "admissible": True,
            "sharing": True,
            "covering": True,
        }


def _random_cayley_instance(rng):
    d = rng.choice([1, 1, 1, 2, 2, 3])
    n = rng.choice([1, 2, 2, 3])
    budget = 5 if d * n <= 4 else 3
    parts, liftings = [], []
    for i in range(n):
        npts = rng.randint(1, budget)
        pts = [
            (f"g{i}p{j}", tuple(F(rng.randint(0, 2)) for _ in range(d)))
            for j in range(npts)
        ]
        parts.append(PointConfiguration.of(pts))
        denom = rng.choice([1, 1, 2, 3])
        liftings.append(
            {lab: F(rng.randint(-6, 6), denom) for lab, _ in pts}
        )
    return parts, liftings


def test_07_cayley_trick_random_suite():
    with criterion(7, "Cayley route = product-polynomial dual on 120 instances"):
        rng = random.Random(20240817)
        for trial in range(120):
            parts, liftings = _random_cayley_instance(rng)
            d, n = parts[0].ambient_dim, len(parts)
            ms = mixed_regular(parts, liftings, side="below")

            # identification: replace each mixed cell by its set of
            # label-sum lattice points
            identified = {
                frozenset(
                    tuple(int(x) for x in pt) for pt in cell.sum_points(parts)
                )
                for cell in ms.cells
            }

            # independent pipeline: multiply the per-part polynomials and
            # take the dual subdivision of the product
            factors = []
            for part, lam in zip(parts, liftings):
                terms = [
                    (tuple(int(x) for x in coords), tropical(lam[lab]))
                    for lab, coords in part.points
                ]
                factors.append(make_poly(terms, MIN, d))
            product = factors[0]
            for g in factors[1:]:
                product = poly_mul(product, g)
            dual = subdivision_from_poly(product).maximal_cells
            assert identified == dual, (trial, parts, liftings)

            # round trip on the underlying Cayley subdivision
            emb = cayley_embed(parts)
            concat = {
                (i, lab): liftings[i][lab]
                for i in range(n)
                for lab in parts[i].labels
            }
            cayley_sub = regular_subdivision(emb.embedded, concat, side="below")
            back = mixed_to_cayley(cayley_to_mixed(cayley_sub))
            assert back.maximal_cells == cayley_sub.maximal_cells, trial


def test_08_hull_oracle_random_suite():
    with criterion(8, "regular subdivisions match the affine-fit oracle, 200 configs"):
        rng = random.Random(77001)
        for trial in range(200):
            dim = rng.randint(1, 3)
            npts = rng.randint(1, 8)
            pts = [
                (
                    f"p{j}",
                    tuple(
                        F(rng.randint(-5, 5), rng.choice([1, 1, 1, 2, 4]))
                        for _ in range(dim)
                    ),
                )
                for j in range(npts)
            ]
            config = PointConfiguration.of(pts)
            lam = {
                lab: F(rng.randint(-8, 8), rng.choice([1, 1, 2, 3]))
                for lab, _ in pts
            }
            side = rng.choice(["below", "above"])
            got = regular_subdivision(config, lam, side=side).maximal_cells
            want = subdivision_oracle(pts, lam, side=side)
            assert got == want, (trial, pts, lam, side)


def _random_matrix(rng, d, n, lo=-4, hi=4):
    return TropMatrix(
        [[rng.randint(lo, hi) for _ in range(n)] for _ in range(d)]
    )


def _rand_poly(rng, dim, o):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        m = tuple(rng.randint(0, 2) for _ in range(dim))
        terms[m] = tropical(F(rng.randint(-2, 2)))
    return make_poly(terms.items(), o, dim)


def test_09_operator_property_suite():
    with criterion(9, "semiring, idempotence, membership, product laws (560 samples)"):
        rng = random.Random(55000)
        samples = 0

        # semiring axioms on random legal triples, both orientations
        for _ in range(120):
            o = rng.choice([MIN, MAX])
            pool = [tropical(F(rng.randint(-30, 30), rng.choice([1, 2, 3]))) for _ in range(3)]
            if rng.random() < 0.2:
                pool[rng.randrange(3)] = o.identity
            a, b, c = pool
            assert t_add(t_add(a, b, o), c, o) == t_add(a, t_add(b, c, o), o)
            assert t_add(a, b, o) == t_add(b, a, o)
            assert t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c))
            assert t_mul(a, t_add(b, c, o)) == t_add(t_mul(a, b), t_mul(a, c), o)
            assert t_add(a, o.identity, o) == a
            assert t_mul(a, o.one) == a
            samples += 1

        # the two Shapley-style operators are idempotent
        for _ in range(60):
            d, n = rng.randint(2, 4), rng.randint(2, 4)
            e = Economy(_random_matrix(rng, d, n))
            p = [F(rng.randint(-5, 5)) for _ in range(d)]
            w = [F(rng.randint(-5, 5)) for _ in range(n)]
            assert shapley_T(e, shapley_T(e, p)) == shapley_T(e, p)
            assert dual_shapley(e, dual_shapley(e, w)) == dual_shapley(e, w)
            samples += 1

        # membership <=> projection fixed point <=> lies in a bounded cell
        for _ in range(60):
            m = _random_matrix(rng, 3, rng.randint(2, 4))
            cells = tconv_bounded_cells(m)
            for _ in range(2):
                if rng.random() < 0.5:
                    weights = [F(rng.randint(-3, 3)) for _ in range(m.n)]
                    z = [e.value for e in tropical_combination(m, weights)]
                else:
                    z = [F(rng.randint(-6, 6)) for _ in range(3)]
                member = membership(m, z)
                fixed = ProjectivePoint.of(project_nearest(m, z)) == ProjectivePoint.of(z)
                in_cell = cells.contains(z)
                assert member == fixed == in_cell, (m, z)
                samples += 1

        # tropical products add values and multiply hypersurfaces
        vanished = 0
        for _ in range(100):
            o = rng.choice([MIN, MAX])
            dim = rng.randint(1, 3)
            f = _rand_poly(rng, dim, o)
            g = _rand_poly(rng, dim, o)
            fg = poly_mul(f, g)
            x = [F(rng.randint(-3, 3)) for _ in range(dim)]
            assert fg.eval(x).value == f.eval(x).value + g.eval(x).value
            both = f.vanishes(x) or g.vanishes(x)
            assert fg.vanishes(x) == both
            vanished += both
            samples += 2
        assert vanished > 5  # the tie case is genuinely exercised

        # upper subdivisions are lower subdivisions of the negated lifting
        for _ in range(60):
            dim = rng.randint(1, 2)
            npts = rng.randint(1, 6)
            pts = [
                (f"p{j}", tuple(F(rng.randint(-3, 3)) for _ in range(dim)))
                for j in range(npts)
            ]
            config = PointConfiguration.of(pts)
            lam = {lab: F(rng.randint(-4, 4), rng.choice([1, 2])) for lab, _ in pts}
            up = regular_subdivision(config, lam, side="above")
            down = regular_subdivision(
                config, {k: -v for k, v in lam.items()}, side="below"
            )
            assert up.maximal_cells == down.maximal_cells
            samples += 1

        assert samples >= 500


def test_10_cli_byte_determinism(tmp_path):
    with criterion(10, "byte-identical JSON and SVG over repeated CLI runs"):
        v_json = str(DATA / "V.json")
        economy_json = str(DATA / "economy.json")

        def run(argv):
            out, err = io.StringIO(), io.StringIO()
            with redirect_stdout(out), redirect_stderr(err):
                code = cli_main(argv)
            assert code == 0, err.getvalue()
            return out.getvalue()

        for argv in (
            ["arrangement", v_json, "--poly", "--cells", "--dual"],
            ["covector", v_json, "--point", "0,1,3"],
            ["tconv", v_json],
            ["mixed", v_json],
            ["ricardo", economy_json, "--equilibrate"],
        ):
            assert run(argv) == run(argv)

        svg_a, svg_b = tmp_path / "a.svg", tmp_path / "b.svg"
        for what in ("arrangement", "mixed"):
            run(["plot", v_json, "--what", what, "--out", str(svg_a)])
            run(["plot", v_json, "--what", what, "--out", str(svg_b)])
            assert svg_a.read_bytes() == svg_b.read_bytes()
        report = json.loads(run(["arrangement", v_json]))
        assert report["input"]["rows"] == [
            ["0", "0", "0", "0"],
            ["1", "4", "3", "0"],
            ["0", "1", "3", "2"],
        ]
