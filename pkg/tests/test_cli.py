import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import jsonschema
import pytest

from tropcay.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
V_JSON = str(DATA / "V.json")
ECONOMY_JSON = str(DATA / "economy.json")

with open(
    Path(__file__).resolve().parent.parent
    / "src"
    / "tropcay"
    / "schemas"
    / "report.schema.json"
) as fh:
    REPORT_SCHEMA = json.load(fh)


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    report = json.loads(out)
    jsonschema.validate(report, REPORT_SCHEMA)
    return report


class TestArrangement:
    def test_default_lists_polynomial(self):
        rep = run_json("arrangement", V_JSON)
        assert rep["command"] == "arrangement"
        assert len(rep["polynomial"]["terms"]) == 15
        assert rep["polynomial"]["orientation"] == "max"
        assert rep["input"]["rows"][1] == ["1", "4", "3", "0"]

    def test_cells_and_dual(self):
        rep = run_json("arrangement", V_JSON, "--cells", "--dual")
        assert rep["cells"]["count"] == 15
        assert len(rep["dual_subdivision"]) == 10
        assert [[0, 0, 4], [0, 1, 3], [1, 0, 3], [1, 1, 2]] in rep["dual_subdivision"]

    def test_single_column_has_d_cells(self, tmp_path):
        p = tmp_path / "one.json"
        p.write_text(json.dumps({"kind": "matrix", "rows": [[0], [1], [0]]}))
        rep = run_json("arrangement", str(p), "--cells")
        assert rep["cells"]["count"] == 3


class TestCovector:
    def test_golden_pairs(self):
        rep = run_json("covector", V_JSON, "--point", "0,1,3")
        assert rep["covector"]["pairs"] == [
            [1, 3], [2, 4], [3, 1], [3, 2], [3, 3], [3, 4]
        ]

    def test_coarse_type_and_value(self):
        rep = run_json("covector", V_JSON, "--point", "0,2,0")
        assert rep["covector"]["coarse_type"] == [2, 2, 0]
        assert rep["value"] == "3"

    def test_translation_invariant_covector(self):
        a = run_json("covector", V_JSON, "--point", "0,1,3")
        b = run_json("covector", V_JSON, "--point", "5,6,8")
        assert a["covector"] == b["covector"]

    def test_wrong_length_is_schema_error(self):
        code, _, err = run("covector", V_JSON, "--point", "0,1")
        assert code == 2 and "coordinates" in err


class TestTconv:
    def test_golden_counts(self):
        rep = run_json("tconv", V_JSON)
        assert rep["maximal_count_by_dim"] == {"2": 3, "1": 1}
        maximal = [c for c in rep["bounded_cells"] if c["maximal"]]
        assert sorted(c["dual"] for c in maximal) == [
            [[0, 3, 1], [1, 3, 0]],
            [[1, 1, 2]],
            [[1, 2, 1]],
            [[2, 1, 1]],
        ]

    def test_transpose_agrees_with_library(self, tmp_path):
        from tropcay.arrangement import tconv_bounded_cells
        from tropcay.core import TropMatrix

        vt = [[0, 1, 0], [0, 4, 1], [0, 3, 3], [0, 0, 2]]
        p = tmp_path / "vt.json"
        p.write_text(json.dumps({"kind": "matrix", "rows": vt}))
        rep = run_json("tconv", str(p))
        cells = tconv_bounded_cells(TropMatrix(vt))
        assert len(rep["bounded_cells"]) == len(cells.cells)
        by_dim = {}
        for c in cells.maximal_cells():
            by_dim[str(c.dim)] = by_dim.get(str(c.dim), 0) + 1
        assert rep["maximal_count_by_dim"] == by_dim


class TestMixed:
    def test_matrix_route_matches_dual_subdivision(self):
        rep = run_json("mixed", V_JSON)
        arr = run_json("arrangement", V_JSON, "--dual")
        assert rep["mixed"]["identified_cells"] == arr["dual_subdivision"]
        assert rep["mixed"]["parts"] == 4
        assert len(rep["mixed"]["cells"]) == 10

    def test_configuration_route(self):
        rep = run_json("mixed", str(DATA / "trapezoid.json"))
        assert rep["mixed"]["cells"] == [
            ["a", "b", "d", "e"],
            ["b", "c", "e"],
        ]
        assert rep["mixed"]["non_faces"] == []


class TestRicardo:
    def test_classification_and_pairs(self):
        rep = run_json("ricardo", ECONOMY_JSON)
        assert rep["classification"] == {
            "admissible": True,
            "sharing": True,
            "covering": False,
        }
        assert rep["competitive_pairs"] == [[1, 3], [2, 4], [3, 3], [3, 4]]
        assert rep["prices"] == ["1", "2", "4"]

    def test_equilibrate(self):
        rep = run_json("ricardo", ECONOMY_JSON, "--equilibrate")
        eq = rep["equilibrated"]
        assert eq["wages"] == ["4", "3", "1", "2"]
        assert eq["prices"] == ["1", "2", "4"]
        assert eq["classification"]["covering"] is True

    def test_wages_flag_overrides(self):
        rep = run_json("ricardo", ECONOMY_JSON, "--wages", "4,3,1,2", "--equilibrate")
        assert rep["classification"]["covering"] is True
        assert rep["equilibrated"]["wages"] == rep["wages"]

    def test_missing_wages(self, tmp_path):
        p = tmp_path / "e.json"
        p.write_text(json.dumps({"kind": "economy", "logR": [[0, 1], [1, 0]]}))
        code, _, err = run("ricardo", str(p))
        assert code == 2 and "wages" in err


class TestPlot:
    def test_arrangement_svg(self, tmp_path):
        out = tmp_path / "arr.svg"
        rep = run_json("plot", V_JSON, "--what", "arrangement", "--out", str(out))
        assert rep["written"] == str(out)
        svg = out.read_text()
        assert svg.startswith("<svg ")
        # one stroke class per column
        for k in (1, 2, 3, 4):
            assert f'class="h{k}"' in svg

    def test_mixed_svg_labels(self, tmp_path):
        out = tmp_path / "mix.svg"
        run_json("plot", V_JSON, "--what", "mixed", "--out", str(out))
        svg = out.read_text()
        for label in ("0,0,4", "4,0,0", "1,1,2"):
            assert f">{label}<" in svg

    def test_wrong_dimension(self, tmp_path):
        p = tmp_path / "flat.json"
        p.write_text(json.dumps({"kind": "matrix", "rows": [[0, 1], [1, 0]]}))
        code, _, err = run("plot", str(p), "--what", "arrangement", "--out", str(tmp_path / "x.svg"))
        assert code == 3


class TestExitCodes:
    def test_unreadable_file(self):
        code, _, _ = run("arrangement", "/nonexistent.json")
        assert code == 2

    def test_not_json(self, tmp_path):
        p = tmp_path / "bad.json"
        p.write_text("{")
        assert run("arrangement", str(p))[0] == 2

    def test_wrong_kind(self):
        assert run("tconv", ECONOMY_JSON)[0] == 2

    def test_unsupported(self, tmp_path):
        p = tmp_path / "inf.json"
        p.write_text(json.dumps({"kind": "matrix", "rows": [[0, "inf"], [1, 0]]}))
        assert run("tconv", str(p))[0] == 3

    def test_math_precondition(self, tmp_path):
        p = tmp_path / "col.json"
        p.write_text(
            json.dumps({"kind": "matrix", "rows": [["inf", 0], ["inf", 1]]})
        )
        assert run("arrangement", str(p))[0] == 4

    def test_help_exits_zero(self):
        assert run("--help")[0] == 0

    def test_usage_error(self):
        assert run("plot", V_JSON)[0] == 2


class TestDeterminism:
    def test_reports_are_byte_identical(self):
        for argv in (
            ["arrangement", V_JSON, "--poly", "--cells", "--dual"],
            ["covector", V_JSON, "--point", "0,1,3"],
            ["tconv", V_JSON],
            ["mixed", V_JSON],
            ["ricardo", ECONOMY_JSON, "--equilibrate"],
        ):
            _, one, _ = run(*argv)
            _, two, _ = run(*argv)
            assert one == two and one

    def test_svg_bytes_identical(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run_json("plot", V_JSON, "--what", "mixed", "--out", str(a))
        run_json("plot", V_JSON, "--what", "mixed", "--out", str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_thread_env_does_not_change_bytes(self):
        old = os.environ.get("TROPCAY_THREADS")
        try:
            os.environ["TROPCAY_THREADS"] = "4"
            _, a, _ = run("arrangement", V_JSON, "--dual")
            os.environ["TROPCAY_THREADS"] = "1"
            _, b, _ = run("arrangement", V_JSON, "--dual")
        finally:
            if old is None:
                os.environ.pop("TROPCAY_THREADS", None)
            else:
                os.environ["TROPCAY_THREADS"] = old
        assert a == b
