"""Command line behavior: records, exit codes, deterministic output."""

import json
import os
import subprocess
import sys

import pytest

from nlielab.catalog import algebra_O
from nlielab.cli import main
from nlielab.nlie import serialize_table

SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")


def run_cli(argv, check_code=None):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "nlielab"] + argv,
        capture_output=True,
        text=True,
        env=env,
    )
    if check_code is not None:
        assert proc.returncode == check_code, proc.stderr or proc.stdout
    return proc


def test_verify_runs_the_finite_suite(capsys):
    code = main(["verify", "O", "--n", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] filippov_jacobi: 1024 instances, exhaustive" in out
    assert "[PASS] pair_graded_dims: {-1: 4, 0: 6, 1: 4, 2: 1}" in out
    assert "[PASS] truncation_structure" in out
    assert "[PASS] seed_relations" in out
    assert "8 passed, 0 failed, 0 not decided" in out


def test_verify_json_is_byte_identical_across_runs(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    run_cli(["verify", "O", "--n", "3", "--json", str(out1)], check_code=0)
    run_cli(["verify", "O", "--n", "3", "--json", str(out2)], check_code=0)
    b1, b2 = out1.read_bytes(), out2.read_bytes()
    assert b1 == b2
    doc = json.loads(b1)
    assert doc["command"] == "verify"
    assert all(c["status"] == "pass" for c in doc["checks"])
    names = [c["name"] for c in doc["checks"]]
    assert names == sorted(names)


def test_verify_window_algebras(capsys):
    code = main(["verify", "S", "--n", "3", "--window", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] filippov_jacobi" in out
    assert "[----] pair_admissible" in out


def test_verify_over_a_prime_field(capsys):
    assert main(["verify", "O", "--n", "3", "--field", "fp:7"]) == 0
    out = capsys.readouterr().out
    assert "field=fp:7" in out


def test_verify_loaded_table_good_and_corrupted(tmp_path, capsys):
    alg = algebra_O(3)
    text = serialize_table(alg)
    good = tmp_path / "good.nlie"
    good.write_text(text)
    assert main(["verify", "--table", str(good)]) == 0
    capsys.readouterr()

    bad = tmp_path / "bad.nlie"
    bad.write_text(text.replace("1 2 3 -> 1*e4", "1 2 3 -> 1*e4 + 1*e1"))
    code = main(["verify", "--table", str(bad)])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL] filippov_jacobi" in out
    assert "witness:" in out


def test_verify_custom_form(tmp_path, capsys):
    form = tmp_path / "form.txt"
    form.write_text("2 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n")
    assert main(["verify", "O", "--n", "3", "--form", str(form)]) == 0
    capsys.readouterr()


def test_pairs_command(capsys):
    code = main(["pairs", "i", "--n", "3", "--xwindow", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] induced_bracket_matches_catalog: scalar -1 over 4 tuples" in out
    assert "[PASS] realization: H'(0,4) against O^3" in out


def test_pairs_window_only_irreducibility_is_open(capsys):
    code = main(["pairs", "ii", "--n", "3", "--xwindow", "2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[----] depth_module_irreducible" in out


def test_charp_exhibits_the_violation_and_the_control_fails(capsys):
    code = main(["charp", "--p", "3", "--s", "2"])
    out = capsys.readouterr().out
    assert code == 1
    assert "[PASS] fj_residue_zero: residue 0 at arity 7" in out
    assert "[PASS] bound_violation_exhibited" in out
    assert "degree 11 > 6" in out
    assert "[FAIL] rational_control_truncates" in out
    assert "bound exceeded" in out


def test_charp_even_arity_is_reported_only(capsys):
    code = main(["charp", "--p", "3", "--s", "1", "--cap", "9"])
    out = capsys.readouterr().out
    assert "[----] fj_residue_zero" in out
    assert code == 1  # the rational control still fails honestly


def test_report_command(capsys):
    code = main(["report", "--xwindow", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] split_H'(0,4)" in out
    assert "[PASS] split_S'(1,2)" in out
    assert "[----] split_SKO'(3,4;1/3)" in out
    assert "reported without assertion" in out


def test_usage_errors_exit_two(tmp_path):
    assert main([]) == 2
    assert main(["verify"]) == 2  # selector or table required
    assert main(["verify", "O", "--field", "fp:9"]) == 2
    assert main(["verify", "O", "--field", "z"]) == 2
    assert main(["verify", "O", "--n", "1"]) == 2
    assert main(["verify", "O", "--n", "3", "--cap", "1"]) == 2
    assert main(["verify", "--table", str(tmp_path / "missing.nlie")]) == 2
    assert main(["charp", "--p", "6"]) == 2
    assert main(["pairs", "i", "--n", "2"]) == 2


def test_argparse_rejects_unknown_selectors():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "Q"])
    assert exc.value.code == 2


def test_module_entry_point():
    proc = run_cli(["verify", "O", "--n", "3"], check_code=0)
    assert "filippov_jacobi" in proc.stdout
