"""End-to-end command line behavior, formats, and exit codes."""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "dotbinom"]


def run_cli(*args):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, timeout=300
    )


def test_bracket_plain():
    res = run_cli("bracket", "--q", "5", "--n", "4")
    assert res.returncode == 0
    assert res.stdout == "60\n"


def test_bracket_flavor():
    res = run_cli("bracket", "--q", "3", "--n", "3", "--flavor", "timelike_dot")
    assert res.stdout == "6\n"


def test_bracket_compare_paper():
    res = run_cli("bracket", "--q", "3", "--n", "2", "--compare-paper")
    assert res.returncode == 0
    assert res.stdout.splitlines() == [
        "value 2",
        "published 1",
        "status paper_discrepancy",
    ]


def test_bracket_compare_paper_agreeing_cell():
    res = run_cli("bracket", "--q", "5", "--n", "2", "--compare-paper")
    assert res.stdout.splitlines()[-1] == "status pass"


def test_bracket_json_round_trip():
    res = run_cli("bracket", "--q", "5", "--n", "4", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload == {
        "command": "bracket", "q": 5, "n": 4,
        "flavor": "spacelike_dot", "value": 60,
    }
    assert json.dumps(payload, indent=2) + "\n" == res.stdout


def test_triangle_plain():
    res = run_cli("triangle", "--q", "5", "--rows", "4")
    assert res.stdout.splitlines() == [
        "1",
        "1 1",
        "1 2 1",
        "1 15 15 1",
        "1 60 450 60 1",
    ]


def test_triangle_csv():
    res = run_cli("triangle", "--q", "3", "--rows", "2", "--format", "csv")
    assert res.stdout.splitlines() == [
        "n,k,value",
        "0,0,1",
        "1,0,1",
        "1,1,1",
        "2,0,1",
        "2,1,2",
        "2,2,1",
    ]


def test_triangle_rows_cap_is_usage_error():
    res = run_cli("triangle", "--q", "3", "--rows", "31")
    assert res.returncode == 2


def test_binom_variants():
    assert run_cli("binom", "--q", "3", "--n", "4", "--k", "2").stdout == "18\n"
    res = run_cli("binom", "--q", "3", "--n", "4", "--k", "2", "--variant", "dl")
    assert res.stdout == "72\n"


def test_poly_row():
    res = run_cli("poly", "--q-class", "1", "--n", "4", "--k", "2")
    assert res.stdout == "k=2 degree=4 1/2*q^4 + q^3 + 1/2*q^2\n"


def test_poly_checks_columns():
    res = run_cli("poly", "--q-class", "3", "--n", "4", "--checks",
                  "--format", "csv")
    lines = res.stdout.splitlines()
    assert lines[0] == \
        "q_class,n,k,degree,poly,sign,published_sign,limit,limit_expected"
    cell = dict(zip(lines[0].split(","), lines[2].split(",")))
    assert cell["k"] == "1"
    assert cell["sign"] == "minus"
    assert cell["published_sign"] == "plus"
    assert cell["limit"] == cell["limit_expected"] == "0"


def test_group_order_compare():
    res = run_cli("group-order", "--q", "3", "--n", "3", "--compare-paper")
    assert res.stdout.splitlines()[:3] == [
        "value 48",
        "published 2",
        "status paper_discrepancy",
    ]
    res = run_cli("group-order", "--q", "3", "--n", "1", "--compare-paper")
    lines = res.stdout.splitlines()
    assert lines[1] == "published not evaluable"
    assert lines[2] == "status skipped"


def test_mobius_output():
    res = run_cli("mobius", "--q", "3", "--n", "4")
    assert res.stdout.splitlines()[-1] == "m=4 b=5 mu=5"


def test_limits_output():
    res = run_cli("limits", "--n", "5", "--k", "3")
    assert res.stdout == "k=3 limit=2 ksets=2\n"


def test_oracle_count_plain_has_no_timing():
    res = run_cli("oracle", "count", "--q", "3", "--n", "2")
    lines = res.stdout.splitlines()
    assert "ambient dot" in lines
    assert "lines spacelike=2 timelike=2 lightlike=0" in lines
    assert not any(line.startswith("elapsed") for line in lines)


def test_oracle_count_json():
    res = run_cli("oracle", "count", "--q", "3", "--n", "2",
                  "--ambient", "lambda_dot", "--format", "json")
    payload = json.loads(res.stdout)
    assert payload["lines"] == {"spacelike": 1, "timelike": 1, "lightlike": 2}
    assert payload["flag_count"] is None
    assert json.dumps(payload, indent=2) + "\n" == res.stdout


def test_oracle_count_respects_budget():
    res = run_cli("oracle", "count", "--q", "13", "--n", "6",
                  "--budget", "100")
    assert res.returncode == 1
    assert "error:" in res.stderr


def test_oracle_poset_and_graph(tmp_path):
    graph = tmp_path / "edges.txt"
    res = run_cli("oracle", "poset", "--q", "3", "--n", "2",
                  "--kind", "lorentzian", "--emit-graph", str(graph))
    lines = res.stdout.splitlines()
    assert lines[0] == "ranks 1 2 1"
    assert lines[1] == "nodes 4"
    assert lines[2] == "edges 4"
    assert graph.read_text().count("\n") == 4


def test_flags_command():
    res = run_cli("flags", "--q", "3", "--n", "3")
    assert res.returncode == 0
    assert res.stdout.splitlines() == [
        "flags 6",
        "bracket_factorial 6",
        "status pass",
    ]


def test_verify_exit_zero_with_discrepancies():
    res = run_cli("verify", "--q", "3", "--max-n", "2")
    assert res.returncode == 0
    assert "PAPER-DISCREPANCY" in res.stdout
    assert "FAIL" not in res.stdout.replace("PAPER-DISCREPANCY", "")
    assert res.stdout.splitlines()[-1].startswith("checks:")


def test_verify_json_is_byte_stable_across_jobs():
    a = run_cli("verify", "--q", "5", "--max-n", "2", "--format", "json",
                "--jobs", "1")
    b = run_cli("verify", "--q", "5", "--max-n", "2", "--format", "json",
                "--jobs", "2")
    assert a.stdout == b.stdout
    payload = json.loads(a.stdout)
    assert json.dumps(payload, indent=2) + "\n" == a.stdout
    assert payload["summary"]["fail"] == 0


def test_verify_csv_is_byte_stable_across_jobs():
    a = run_cli("verify", "--q", "5", "--max-n", "2", "--format", "csv",
                "--jobs", "1")
    b = run_cli("verify", "--q", "5", "--max-n", "2", "--format", "csv",
                "--jobs", "2")
    assert a.stdout == b.stdout
    assert a.stdout.splitlines()[0] == "check,params,expected,actual,status,note"


def test_verify_without_paper_comparison():
    res = run_cli("verify", "--q", "3", "--max-n", "2", "--no-compare-paper")
    assert res.returncode == 0
    assert "PAPER-DISCREPANCY" not in res.stdout


def test_verify_multiple_fields():
    res = run_cli("verify", "--q", "3,5", "--max-n", "1", "--format", "csv")
    assert res.returncode == 0
    assert ",q=5 n=1" in res.stdout or "q=5 n=1" in res.stdout


def test_usage_errors_exit_two():
    assert run_cli().returncode == 2
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("bracket", "--q", "5").returncode == 2
    assert run_cli("verify", "--q", "x", "--max-n", "2").returncode == 2


def test_domain_errors_exit_one():
    res = run_cli("bracket", "--q", "4", "--n", "2")
    assert res.returncode == 1
    assert res.stderr.startswith("error:")
    res = run_cli("bracket", "--q", "15", "--n", "2")
    assert res.returncode == 1
