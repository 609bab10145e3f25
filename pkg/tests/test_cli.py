"""Command-line surface: exit codes, formats, schema, determinism."""

import json
import subprocess
import sys

import jsonschema
import pytest

from opturan.cli import OUTPUT_SCHEMA, run


@pytest.fixture
def capture(capsys):
    def invoke(*argv):
        code = run(list(argv))
        out = capsys.readouterr()
        return code, out.out, out.err

    return invoke


def check_json_line(line: str) -> dict:
    obj = json.loads(line)
    jsonschema.validate(obj, OUTPUT_SCHEMA)
    return obj


# ---------------------------------------------------------------------------
# c-table
# ---------------------------------------------------------------------------

def test_c_table_text_matches_known_row(capture):
    code, out, _ = capture("c-table", "--max-k", "12")
    assert code == 0
    assert "23.75" in out and "361.75" in out and "10.5" in out


def test_c_table_json_schema_and_exact_rationals(capture):
    code, out, _ = capture("c-table", "--max-k", "12", "--format", "json")
    assert code == 0
    obj = check_json_line(out)
    values = {row["k"]: row["value"] for row in obj["result"]}
    assert values[9] == {"num": "95", "den": "4"}
    assert "." not in json.dumps(obj["result"])  # no floats anywhere


def test_c_table_csv(capture):
    code, out, _ = capture("c-table", "--max-k", "5", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "k,numerator,denominator", "3,1,1", "4,1,1", "5,3,2",
    ]


# ---------------------------------------------------------------------------
# generation and counting
# ---------------------------------------------------------------------------

def test_gen_fan_edges_and_dot(capture, tmp_path):
    code, out, _ = capture("gen", "--fan", "5")
    assert code == 0
    assert out.splitlines()[0] == "5"
    code, dot, _ = capture("gen", "--fan", "5", "--format", "dot")
    assert code == 0 and dot.startswith("graph G {")
    code, js, _ = capture("gen", "--triple-fan", "6", "--format", "json")
    obj = check_json_line(js)
    assert obj["result"]["chords"] == [[0, 2], [0, 4], [2, 4]]


def test_gen_requires_exactly_one_construction(capture):
    code, _, err = capture("gen", "--fan", "5", "--triple-fan", "6")
    assert code == 2 and "exactly one" in err


def test_gen_numeral_guard(capture):
    code, _, err = capture("gen", "--numeral", "101", "3")
    assert code == 2 and "guard" in err


def test_count_cycle_path_and_tree(capture, tmp_path):
    code, out, _ = capture("gen", "--fan", "8")
    graph_file = tmp_path / "fan8.txt"
    graph_file.write_text(out)
    code, out, _ = capture("count", "--graph", str(graph_file),
                           "--pattern", "cycle:3")
    assert code == 0 and out.strip() == "6"
    code, out, _ = capture("count", "--graph", str(graph_file),
                           "--pattern", "path:3", "--format", "json")
    assert check_json_line(out)["result"]["count"] == 74

    tree_file = tmp_path / "star.txt"
    tree_file.write_text("4\n0 1\n0 2\n0 3\n")
    code, out, _ = capture("count", "--graph", str(graph_file),
                           "--pattern", f"tree:{tree_file}")
    assert code == 0 and int(out) > 0


def test_count_missing_file(capture):
    code, _, err = capture("count", "--graph", "/nonexistent/g.txt",
                           "--pattern", "cycle:3")
    assert code == 2 and "g.txt" in err


def test_subtrees_command(capture, tmp_path):
    tree_file = tmp_path / "p4.txt"
    tree_file.write_text("4\n0 1\n1 2\n2 3\n")
    code, out, _ = capture("subtrees", "--tree", str(tree_file), "-k", "2")
    assert code == 0 and out.strip() == "3"
    code, out, _ = capture("subtrees", "--tree", str(tree_file))
    assert code == 0 and out.strip() == "10"


def test_greedy_formats(capture):
    code, out, _ = capture("greedy", "-d", "3", "-n", "4")
    assert code == 0
    assert out == "4\n0 1\n0 2\n0 3\n"
    code, dot, _ = capture("greedy", "-d", "3", "-n", "4", "--format", "dot")
    assert "0 -- 1;" in dot


# ---------------------------------------------------------------------------
# gamma and inject
# ---------------------------------------------------------------------------

def test_gamma_count_and_enumeration(capture):
    code, out, _ = capture("gamma", "-L", "3", "-t", "4")
    assert code == 0 and out.strip() == "5"
    code, out, _ = capture("gamma", "-L", "3", "-t", "3", "--enumerate")
    assert out.splitlines() == ["[0, 0, 0]", "[0, 0, 1]", "[0, 1, 0]", "[0, 1, 1]"]
    code, out, _ = capture("gamma", "-L", "2", "-t", "3", "--enumerate",
                           "--format", "json")
    obj = check_json_line(out)
    assert obj["result"] == {"count": 2, "schedules": [[0, 0], [0, 1]]}


def test_inject_single_and_all(capture):
    code, out, _ = capture("inject", "--N", "10", "--t", "2", "--k", "8",
                           "--A", "99", "--B", "88")
    assert code == 0
    assert out.strip() == "99 98 97 96 95 90 0 80 88"
    code, out, _ = capture("inject", "--N", "30", "--t", "3", "--k", "14",
                           "--A", "26999", "--B", "13965", "--all-seqs",
                           "--format", "json")
    obj = check_json_line(out)
    assert len(obj["result"]["paths"]) == 128


def test_inject_rejects_bad_endpoints(capture):
    code, _, err = capture("inject", "--N", "10", "--t", "2", "--k", "8",
                           "--A", "99", "--B", "87")
    assert code == 2 and "87" in err


# ---------------------------------------------------------------------------
# extremal and verify
# ---------------------------------------------------------------------------

def test_extremal_text_and_json(capture):
    code, out, _ = capture("extremal", "-n", "6", "--pattern", "path:3")
    assert code == 0 and "maximum=33" in out
    code, out, _ = capture("extremal", "-n", "6", "--pattern", "path:3",
                           "--format", "json")
    obj = check_json_line(out)
    assert obj["result"]["maximum"] == 33
    assert obj["result"]["maximizers"] == [[[0, 2], [0, 4], [2, 4]]]


def test_extremal_guard_and_unsafe(capture):
    code, _, err = capture("extremal", "-n", "12", "--pattern", "cycle:3")
    assert code == 2 and "guard" in err


def test_verify_exit_codes(capture):
    code, out, _ = capture("verify", "--suite", "counterexample-6")
    assert code == 0 and "overall: pass" in out
    # the 2-edge-path uniqueness claim genuinely fails at n=6
    code, out, _ = capture("verify", "--suite", "p3-exact")
    assert code == 1 and "n6-unique-maximizer" in out
    code, _, err = capture("verify", "--suite", "p3-exact", "--max-n", "5")
    assert code == 0


def test_verify_json_schema(capture):
    code, out, _ = capture("verify", "--suite", "c-table", "--format", "json")
    assert code == 0
    obj = check_json_line(out)
    assert obj["result"]["passed"] is True


def test_verify_rejects_unknown_param(capture):
    code, _, err = capture("verify", "--suite", "c-table", "--param", "zap=1")
    assert code == 2 and "zap" in err


def test_usage_errors_exit_two(capture):
    assert capture("verify")[0] == 2          # missing --suite
    assert capture("no-such-command")[0] == 2


# ---------------------------------------------------------------------------
# determinism
# ---------------------------------------------------------------------------

def run_cli_subprocess(*argv):
    return subprocess.run(
        [sys.executable, "-m", "opturan.cli", *argv],
        capture_output=True, timeout=300,
    )


def test_byte_identical_output_across_processes():
    for argv in (
        ("c-table", "--max-k", "12", "--format", "json"),
        ("verify", "--suite", "gamma", "--max-l", "6", "--format", "json"),
        ("extremal", "-n", "7", "--pattern", "cycle:4", "--format", "json"),
    ):
        first = run_cli_subprocess(*argv)
        second = run_cli_subprocess(*argv)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_jobs_do_not_perturb_output():
    base = run_cli_subprocess("verify", "--suite", "cycle-closed-forms",
                              "--max-n", "8")
    jobs = run_cli_subprocess("verify", "--suite", "cycle-closed-forms",
                              "--max-n", "8", "--jobs", "3")
    assert base.stdout == jobs.stdout
    assert base.returncode == jobs.returncode == 0
