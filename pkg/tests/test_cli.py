import json
import subprocess
import sys

import bgzeta.bernoulli
from bgzeta import UPoly, make_tower, parse_poly
from bgzeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bn_text(capsys):
    code, out, _ = run_cli(capsys, "--q", "2", "--n", "5", "bn")
    assert code == 0
    assert "n = 5: B_n(u) = 1 + (T^4+T)*u" in out
    assert "B_n    = T^4+T+1" in out


def test_bn_json_and_range(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--n", "3..6", "bn", "--json")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [3, 4, 5, 6]
    assert rows[0]["bernoulli_poly"] == ["1"]
    assert rows[0]["bernoulli_scalar"] == "1"
    assert rows[3]["bernoulli_poly"] == ["1"]


def test_flags_work_after_subcommand(capsys):
    a = run_cli(capsys, "--q", "2", "--n", "5", "bn")
    b = run_cli(capsys, "bn", "--q", "2", "--n", "5")
    assert a == b


def test_balpha_golden(capsys):
    code, out, _ = run_cli(capsys, "--q", "2", "--f", "u^2+u+1", "--n", "6",
                           "balpha")
    assert code == 0
    assert "n = 6: (T^4+T+1)^2" in out
    code, out, _ = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--n", "7",
                           "balpha")
    assert "n = 7: (T^2+1)(T^2+T+2)(T^2+2*T+2)" in out
    code, out, _ = run_cli(capsys, "--q", "2", "--f", "u^2+u+1", "--n", "1",
                           "balpha")
    assert "n = 1: 1" in out


def test_factor_subcommand(capsys):
    code, out, _ = run_cli(capsys, "--q", "2", "factor", "T^8+T^2+1")
    assert code == 0
    assert "(T^4+T+1)^2" in out


def test_zetabar_json(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--m", "T^2+1", "--part",
                           "minus", "zetabar", "--json")
    assert code == 0
    rows = json.loads(out)
    assert rows[0]["reduced_zeta"] == [1, 0, 1]
    assert rows[0]["display"] == "u^2+1"


def test_criterion_json_schema(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--m", "T^2+1",
                           "--part", "minus", "criterion", "--json")
    assert code == 0
    row = json.loads(out)[0]
    assert set(row) == {"q", "field_modulus", "f", "m", "part", "verdict",
                        "witness_n", "reduced_zeta", "elapsed_ms"}
    assert row["verdict"] is True and row["witness_n"] == 5
    assert row["elapsed_ms"] is None


def test_criterion_q4_field_modulus(capsys):
    code, out, _ = run_cli(capsys, "--q", "4", "--f", "u^2+u+1", "--m", "T+y",
                           "--part", "plus", "criterion", "--json")
    assert code == 0
    row = json.loads(out)[0]
    assert row["q"] == 4 and row["field_modulus"] == "y^2+y+1"


def test_survey_table_and_golden(capsys):
    code, out, _ = run_cli(capsys, "--q", "2", "--f", "u^2+u+1", "--dmax", "3",
                           "--part", "plus", "survey")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["m", "part", "verdict", "witness",
                                "reduced", "factor"]
    assert len(lines) == 6
    assert all("no" in line for line in lines[1:])


def test_search_pinned(capsys):
    code, out, _ = run_cli(capsys, "--q", "2", "--f", "u^2+u+1", "--d", "2",
                           "--part", "plus", "search", "--json")
    assert code == 0
    row = json.loads(out)
    assert row["m"] == "T^4+T^3+1"
    assert row["witness_b"] == 5
    assert row["exponent_n"] == 5
    assert row["verdict"] is True
    assert isinstance(row["trace"], list) and row["trace"]


def test_output_deterministic_across_runs_and_jobs(capsys):
    args = ["--q", "3", "--f", "u^2+1", "--dmax", "1", "survey", "--json"]
    first = run_cli(capsys, *args)
    second = run_cli(capsys, *args)
    assert first == second
    jobs2 = run_cli(capsys, *args, "--jobs", "2")
    assert jobs2 == first


def test_polynomial_arguments_roundtrip(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--m",
                           "T^2+2*T+2", "--part", "minus", "criterion",
                           "--json")
    row = json.loads(out)[0]
    F3 = make_tower(3)
    assert parse_poly(F3, row["m"]) == parse_poly(F3, "T^2+2*T+2")
    assert parse_poly(F3.prime_subfield(), row["f"], var="u") == \
        parse_poly(F3.prime_subfield(), "u^2+1", var="u")


def test_validation_error_exit_2(capsys):
    # reducible modulus
    code, out, err = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--m",
                             "T^2+2", "--part", "minus", "criterion")
    assert code == 2
    assert "error" in err.lower()


def test_validation_error_json_object(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--m", "T^2+2",
                           "--part", "minus", "criterion", "--json")
    assert code == 2
    obj = json.loads(out)
    assert obj["error"]["type"] == "ValidationError"
    assert obj["error"]["exit_code"] == 2


def test_conflicting_field_flags_exit_2(capsys):
    code, _, err = run_cli(capsys, "--q", "4", "--p", "3", "--n", "1", "bn")
    assert code == 2


def test_capacity_error_exit_3(capsys):
    code, out, _ = run_cli(capsys, "--q", "3", "--m", "T^6+2*T^4+T^2+1",
                           "--part", "minus", "--cap", "50", "zetabar",
                           "--json")
    assert code == 3
    assert json.loads(out)["error"]["type"] == "CapacityError"


def test_contract_violation_exit_4(capsys, monkeypatch):
    from bgzeta.errors import ContractViolationError

    def boom(*a, **k):
        raise ContractViolationError("forced for the exit-code test")

    monkeypatch.setattr("bgzeta.cli._zeta.criterion_check", boom)
    code, _, err = run_cli(capsys, "--q", "3", "--f", "u^2+1", "--m", "T^2+1",
                           "--part", "minus", "criterion")
    assert code == 4


def test_verify_paper_passes(capsys):
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 0
    assert "all golden checks pass" in out


def test_verify_paper_json(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["all_pass"] is True
    assert all(c["pass"] for c in obj["checks"])
    assert len(obj["checks"]) >= 20


def test_verify_paper_detects_injected_bug(capsys, monkeypatch):
    """A sign bug in the Bernoulli polynomial must fail a named check."""
    original = bgzeta.bernoulli.bernoulli_poly

    def corrupted(n, field, cap=10 ** 6):
        up = original(n, field, cap)
        return UPoly(field, [-c for c in up.coeffs])

    monkeypatch.setattr(bgzeta.bernoulli, "bernoulli_poly", corrupted)
    code, out, _ = run_cli(capsys, "verify-paper")
    assert code == 1
    assert "FAIL" in out
    assert "first failing" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bgzeta", "--q", "2", "--n", "5", "bn"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "T^4+T" in proc.stdout


def test_missing_required_flag_exit_2(capsys):
    code, _, err = run_cli(capsys, "--q", "2", "bn")
    assert code == 2
    assert "--n" in err or "requires" in err
