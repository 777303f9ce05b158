import json
import subprocess
import sys
from fractions import Fraction

from padic import cli, lift, parse_poly
from padic.hensel import certificate_from_record


def run_cli(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:  # argparse syntax errors
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_val(capsys):
    code, out, _ = run_cli(capsys, "val", "-p", "2", "3/8")
    assert code == 0 and out.strip() == "-3"


def test_val_zero(capsys):
    code, out, _ = run_cli(capsys, "val", "-p", "7", "0")
    assert code == 0 and out.strip() == "0"


def test_val_non_prime(capsys):
    code, _, err = run_cli(capsys, "val", "-p", "4", "2")
    assert code == 3 and "prime" in err


def test_val_parse_error(capsys):
    code, _, err = run_cli(capsys, "val", "-p", "2", "three")
    assert code == 2 and "error" in err


def test_argparse_syntax_error(capsys):
    code, _, _ = run_cli(capsys, "val", "-p")
    assert code == 2


def test_norm_zero(capsys):
    code, out, _ = run_cli(capsys, "norm", "-p", "5", "0")
    assert code == 0 and out.strip() == "0"


def test_norm(capsys):
    code, out, _ = run_cli(capsys, "norm", "-p", "2", "3/8")
    assert code == 0 and out.strip() == "2^3 = 8"


def test_norm_json(capsys):
    code, out, _ = run_cli(capsys, "norm", "-p", "2", "--json", "3/8")
    payload = json.loads(out)
    assert code == 0
    assert payload["valuation"] == -3 and payload["norm"] == "8"


def test_digits_minus_one(capsys):
    code, out, _ = run_cli(capsys, "digits", "-p", "5", "-N", "6", "--", "-1")
    assert code == 0 and out.strip() == "...444444"


def test_digits_one_third(capsys):
    code, out, _ = run_cli(capsys, "digits", "-p", "5", "-N", "6", "1/3")
    assert code == 0 and out.strip() == "...313132"


def test_digits_shifted(capsys):
    code, out, _ = run_cli(capsys, "digits", "-p", "3", "-N", "3", "9")
    assert code == 0 and out.strip() == "...001 × 3^2"


def test_digits_zero(capsys):
    code, _, err = run_cli(capsys, "digits", "-p", "5", "0")
    assert code == 4 and "expansion" in err


def test_digits_json_little_endian(capsys):
    code, out, _ = run_cli(capsys, "digits", "-p", "5", "-N", "6", "--json", "1/3")
    payload = json.loads(out)
    assert code == 0
    assert payload["digits"] == [2, 3, 1, 3, 1, 3]
    assert payload["start"] == 0 and payload["text"] == "...313132"


def test_eval(capsys):
    code, out, _ = run_cli(
        capsys, "eval", "-p", "5", "-N", "8", "--poly", "x^2 - 6", "1"
    )
    assert code == 0
    assert "v: 1" in out and "form: unit" in out


def test_lift_text(capsys):
    code, out, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "4", "--poly", "x^2 - 6", "--seed", "1"
    )
    assert code == 0
    assert "root: 516" in out
    assert "n=1  a_n=316" in out
    assert "verified: true" in out


def test_lift_degenerate(capsys):
    code, out, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "3", "--poly", "x^2 - 1", "--seed", "1"
    )
    assert code == 0 and "root: 1" in out and "exact root" in out


def test_lift_hypothesis_failure(capsys):
    code, _, err = run_cli(
        capsys, "lift", "-p", "2", "-K", "5", "--poly", "x^2 - 3", "--seed", "1"
    )
    assert code == 5
    assert "nu(f(a)) = 1" in err and "2*nu(f'(a)) = 2" in err


def test_lift_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "4", "--json",
        "--poly", "x^2 - 6", "--seed", "1",
    )
    assert code == 0
    parsed = certificate_from_record(json.loads(out))
    assert parsed == lift(parse_poly("x^2 - 6", 5), Fraction(1), 4)


def test_lift_text_and_json_agree(capsys):
    _, text, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "4", "--poly", "x^2 - 6", "--seed", "1"
    )
    _, raw, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "4", "--json",
        "--poly", "x^2 - 6", "--seed", "1",
    )
    payload = json.loads(raw)
    assert f"root: {payload['root']}" in text
    assert f"e={payload['e']}" in text and f"m={payload['m']}" in text
    for n, residue, val in payload["trace"]:
        assert f"n={n}  a_n={residue}  nu(f(a_n))={val}" in text


def test_oracle(capsys):
    code, out, _ = run_cli(capsys, "oracle", "-p", "5", "-k", "4", "--poly", "x^2 - 6")
    assert code == 0 and out.strip() == "109 516"


def test_oracle_empty(capsys):
    code, out, _ = run_cli(capsys, "oracle", "-p", "3", "-k", "2", "--poly", "x^2 + 1")
    assert code == 0 and out.strip() == ""


def test_oracle_domain_guard(capsys):
    code, _, err = run_cli(capsys, "oracle", "-p", "2", "-k", "30", "--poly", "x")
    assert code == 7 and "scan limit" in err


def test_crosscheck(capsys):
    code, out, _ = run_cli(capsys, "crosscheck", "-p", "5", "-k", "4", "--trials", "50")
    assert code == 0 and "mismatches: 0" in out


def test_bad_poly_exit_code(capsys):
    code, _, err = run_cli(capsys, "oracle", "-p", "5", "-k", "2", "--poly", "x**2")
    assert code == 2 and "error" in err


def test_nonintegral_seed_exit_code(capsys):
    code, _, _ = run_cli(
        capsys, "lift", "-p", "5", "-K", "3", "--poly", "x^2 - 6", "--seed", "1/5"
    )
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "padic", "val", "-p", "2", "3/8"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "-3"
