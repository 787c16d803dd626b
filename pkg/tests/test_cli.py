import json
import subprocess
import sys

from natprod.cli import run_command


def run(*argv):
    return run_command(list(argv))


def test_nprod_example():
    report = run("eval", "nprod", "[6 1 2;0 3 4;2 1 0]", "[3 0 1;2 1 0;0 1 2]")
    assert report.exit_code == 0
    assert report.payload == "[18 0 2;0 3 0;0 1 0]"


def test_shape_mismatch_exits_2():
    report = run("eval", "nprod", "[1 2]", "[1 2 3]")
    assert report.exit_code == 2
    assert "ShapeMismatch" in report.diagnostics


def test_partition_mismatch_exits_2():
    report = run("eval", "add", "[1 | 2 3]", "[1 2 | 3]")
    assert report.exit_code == 2
    assert "TypeMismatch" in report.diagnostics


def test_usage_error_exits_2():
    assert run("eval", "frobnicate", "[1]").exit_code == 2
    assert run("nonsense").exit_code == 2
    assert run("eval", "nprod", "[1]").exit_code == 2
    assert run("eval", "nprod", "[1]", "--unknown-flag", "x").exit_code == 2


def test_poly_diff_example():
    poly = (
        "[2 0 1 0 1 5] + [3 2 1 0 0 0] * x + [0 1 0 2 0 4] * x^2"
        " + [0 -2 -3 0 0 0] * x^3 + [8 0 7 0 1 0] * x^5"
    )
    report = run("poly", "diff", poly, "--domain", "Z")
    assert report.exit_code == 0
    assert report.payload == (
        "[3 2 1 0 0 0] + [0 2 0 4 0 8] * x + [0 -6 -9 0 0 0] * x^2"
        " + [40 0 35 0 5 0] * x^4"
    )


def test_poly_int_const_flag():
    report = run("poly", "int", "[2 4] * x", "--const", "[5 6]")
    assert report.exit_code == 0
    assert report.payload == "[5 6] + [1 2] * x^2"


def test_poly_solve_exit_codes():
    ok = run("poly", "solve", "[1 1 1] * x^3 + [-27 -8 -125]")
    assert ok.exit_code == 0
    assert ok.payload == "[3 2 5]"
    none = run("poly", "solve", "[1] * x^2 + [1] * x + [1]")
    assert none.exit_code == 1
    assert "no roots" in none.payload
    even = run("poly", "solve", "[1 1] * x^2 + [-4 -9]")
    assert even.exit_code == 0
    assert even.payload.splitlines()[:2] == ["[2 3]", "[-2 -3]"]


def test_orth_negative_finding_exits_1():
    assert run("eval", "orth", "[1 0]", "[0 1]").exit_code == 0
    report = run("eval", "orth", "[1 1]", "[0 1]")
    assert report.exit_code == 1
    assert report.payload == "false"


def test_divides_paths():
    ok = run("eval", "divides", "[5 7 2 8]", "[10 14 8 8]", "--domain", "Z")
    assert ok.exit_code == 0 and ok.payload == "[2 2 4 1]"
    no = run("eval", "divides", "[5 7]", "[11 14]", "--domain", "Z")
    assert no.exit_code == 1 and no.payload == "none"
    zero = run("eval", "divides", "[0 7]", "[10 14]", "--domain", "Z")
    assert zero.exit_code == 2
    assert "ZeroDivisorEntry" in zero.diagnostics


def test_json_format_stable():
    report = run("eval", "nprod", "[1 2]", "[3 4]", "--format", "json")
    obj = json.loads(report.payload)
    assert obj == {"cols": 2, "domain": "Q", "entries": [["3", "8"]], "rows": 1}


def test_byte_identical_reruns():
    args = ("verify", "laws", "--samples", "50", "--seed", "7")
    first = run(*args)
    second = run(*args)
    assert first.exit_code == second.exit_code == 0
    assert first.payload == second.payload


def test_parse_render_round_trip(tmp_path):
    fixture = tmp_path / "matrix.txt"
    fixture.write_text("[ 9 0 2 | 0 1 ;\n 0 1 0 | 5 0 ;\n 1 0 0 | 2 0 ]\n")
    report = run("eval", "parse-render", str(fixture))
    assert report.exit_code == 0
    canonical = report.payload
    again = run("eval", "parse-render", canonical)
    assert again.payload == canonical


def test_file_and_json_inputs(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"domain":"Z","rows":1,"cols":2,"entries":[["3","4"]]}')
    report = run("eval", "nprod", str(path), str(path))
    assert report.exit_code == 0
    assert report.payload == "[9 16]"
    missing = run("eval", "nprod", str(tmp_path / "nope.txt"), "[1 2]")
    assert missing.exit_code == 2


def test_complement_command():
    report = run("complement", "[2 0;3 0]")
    assert report.exit_code == 0
    assert report.payload.splitlines() == ["[0 1;0 1]", "dimension 2"]


def test_analyze_commands():
    report = run("analyze", "idempotents", "all:1x1:Zn:6")
    assert report.exit_code == 0
    assert report.payload.splitlines() == ["count 4", "[0]", "[1]", "[3]", "[4]"]
    ideal = run("analyze", "ideal", "masks:2x4", "[1 1 1 1;0 0 0 0]", "--format", "json")
    assert json.loads(ideal.payload)["cardinality"] == 16
    smar = run("analyze", "smarandache", "masks:1x2")
    assert smar.exit_code == 1 and smar.payload == "none"
    carrier = run("analyze", "carrier", "masks:2x2")
    assert carrier.exit_code == 0
    assert "identity" in carrier.payload


def test_analyze_explicit_carrier_from_file(tmp_path):
    path = tmp_path / "carrier.txt"
    path.write_text("[0 0]\n[1 1]\n[-1 -1]\n", encoding="utf-8")
    report = run("analyze", "smarandache", str(path), "--domain", "Z")
    assert report.exit_code == 0
    assert "order 2" in report.payload


def test_verify_suites_quick():
    report = run("verify", "paper-examples")
    assert report.exit_code == 0
    lines = report.payload.splitlines()
    assert len(lines) >= 26  # >= 25 cases plus the summary
    assert all(line.startswith("ok") for line in lines[:-1])
    unknown = run("verify", "bogus")
    assert unknown.exit_code == 2


def test_verify_suite_function():
    from natprod.cli import verify_suite

    report = verify_suite("laws", seed=7, samples=100, fmt="json")
    assert report.exit_code == 0
    obj = json.loads(report.payload)
    assert obj["failed"] == 0 and obj["suite"] == "laws"


def test_failing_case_reported_and_exit_1(monkeypatch):
    import natprod.verify as vf

    def broken():
        raise AssertionError("forced mismatch for the runner test")

    monkeypatch.setattr(vf, "_CASES", vf._CASES + [("forced-failure", broken)])
    report = run("verify", "paper-examples")
    assert report.exit_code == 1
    assert "FAIL forced-failure" in report.payload
    assert "forced mismatch" in report.payload
    obj = json.loads(run("verify", "paper-examples", "--format", "json").payload)
    assert obj["failed"] == 1


def test_help_and_empty_invocations():
    assert run("--help").exit_code == 0
    assert run().exit_code == 2
    assert run("poly", "umul", "[1 | 2;3 | 4]", "[1 | 2;3 | 4]").exit_code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "natprod", "eval", "nprod", "[2 3]", "[4 5]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "[8 15]"
