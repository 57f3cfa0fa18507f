import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from babylonian.cli import parse_number, run
from babylonian.rational import parse_rational

JSON_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["problem", "steps", "report"],
    "properties": {
        "problem": {
            "type": "object",
            "additionalProperties": False,
            "required": ["radicand", "degree", "x0"],
            "properties": {
                "radicand": {"type": "string"},
                "degree": {"type": "integer"},
                "x0": {"type": "string"},
            },
        },
        "steps": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["n", "exact", "decimal", "residual", "sexagesimal"],
                "properties": {
                    "n": {"type": "integer"},
                    "exact": {"type": "string"},
                    "decimal": {"type": "string"},
                    "residual": {"type": "string"},
                    "sexagesimal": {"type": ["string", "null"]},
                },
            },
        },
        "report": {
            "type": "object",
            "additionalProperties": False,
            "required": ["converged", "iterations", "observed_order"],
            "properties": {
                "converged": {"type": "boolean"},
                "iterations": {"type": "integer"},
                "observed_order": {"type": "string"},
            },
        },
    },
}


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def table_rows(text):
    lines = text.splitlines()
    header = lines[1].split()
    rows = []
    for line in lines[2:]:
        if not line.strip():
            break
        rows.append(dict(zip(header, line.split())))
    return rows


def test_paper_square_root_table():
    code, out, err = invoke("17", "--degree", "2", "--x0", "4", "--max-iter", "2", "--output", "table")
    rows = table_rows(out)
    assert [r["exact"] for r in rows[:2]] == ["4", "33/8"]
    assert parse_rational(rows[1]["decimal"]) == F(33, 8)
    assert rows[1]["decimal"].startswith("4.125")
    assert code == 3
    assert "no convergence" in err


def test_paper_cube_root_table():
    code, out, _ = invoke("17", "--degree", "3", "--x0", "2", "--max-iter", "2", "--output", "table")
    rows = table_rows(out)
    assert [r["exact"] for r in rows[:2]] == ["2", "11/4"]
    assert parse_rational(rows[1]["decimal"]) == F(11, 4)
    assert code == 3


def test_unit_radicand():
    code, out, err = invoke("1", "--degree", "7")
    rows = table_rows(out)
    assert [r["exact"] for r in rows] == ["1"]
    assert code == 0
    assert err == ""


def test_converged_run_exits_zero():
    code, out, _ = invoke("17", "--x0", "4")
    assert code == 0
    assert "converged: yes" in out


@pytest.mark.parametrize("argv", [
    ["-17"],
    ["17", "--x0", "0"],
    ["17", "--x0", "-2"],
    ["17", "--degree", "0"],
    ["seventeen"],
    ["17", "--x0", "4 1/8"],
    ["17", "--tol", "0"],
    ["17", "--tol", "x"],
    ["17", "--degree", "two"],
    ["17", "--max-iter", "0"],
    ["17", "--mode", "float"],
    ["sex:1;60"],
    ["17", "--precision", "-1"],
    [],
])
def test_bad_input_exit_code(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert err.startswith("root: error:")
    assert err.count("\n") == 1


def test_nonconvergence_emits_partial_trace():
    code, out, err = invoke("17", "--x0", "4", "--max-iter", "3", "--output", "json")
    assert code == 3
    record = json.loads(out)
    assert len(record["steps"]) == 4
    assert record["report"]["converged"] is False
    assert err.count("\n") == 1


def test_json_schema_and_round_trip():
    jsonschema = pytest.importorskip("jsonschema")
    code, out, _ = invoke("17", "--degree", "3", "--x0", "2", "--output", "json", "--sexagesimal", "3")
    assert code == 0
    record = json.loads(out, parse_constant=lambda c: pytest.fail(f"non-strict JSON {c}"))
    jsonschema.validate(record, JSON_SCHEMA)
    from babylonian import RootProblem, iterate

    trace = iterate(RootProblem(17, 3, 2))
    assert [parse_rational(s["exact"]) for s in record["steps"]] == trace.values
    assert [s["n"] for s in record["steps"]] == list(range(1, len(trace.iterates) + 1))
    assert record["steps"][1]["sexagesimal"] == "2;45,0,0"


def test_csv_output():
    code, out, _ = invoke("17", "--x0", "4", "--output", "csv", "--precision", "5")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "exact", "decimal", "residual", "sexagesimal"]
    assert rows[2] == ["2", "33/8", "4.12500", "0.01562", ""]


def test_sexagesimal_inputs():
    assert parse_number("sex:4;7,30") == F(33, 8)
    code, out, _ = invoke("sex:17", "--x0", "sex:4", "--max-iter", "1", "--output", "json")
    record = json.loads(out)
    assert record["problem"] == {"radicand": "17", "degree": 2, "x0": "4"}
    assert record["steps"][1]["exact"] == "33/8"


def test_fixed_precision_mode():
    code, out, _ = invoke("2", "--mode", "fixed-precision", "--precision", "40", "--tol", "1e-20", "--output", "json")
    assert code == 0
    record = json.loads(out)
    assert all(parse_rational(s["exact"]) * 10**40 % 1 == 0 for s in record["steps"][1:])


@pytest.mark.parametrize("output", ["table", "json", "csv"])
def test_deterministic(output):
    argv = ["17", "--degree", "3", "--x0", "2", "--output", output, "--sexagesimal", "4"]
    assert invoke(*argv) == invoke(*argv)


def test_console_module_subprocess():
    cmd = [sys.executable, "-m", "babylonian", "17", "--x0", "4", "--max-iter", "2", "--output", "csv"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 3
    assert first.stdout == second.stdout
    assert first.stdout.decode().splitlines()[2].startswith("2,33/8,4.125")
