import json
import subprocess
import sys

import pytest

from finfree.cli import main
from finfree.polynomials import MonicPoly, boxtimes
from finfree.weingarten import ClassFunction, weingarten


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write_json(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


@pytest.fixture
def poly_files(tmp_path):
    p = write_json(tmp_path, "p.json", {"d": 2, "a": ["1", "0", "-1"]})
    q = write_json(tmp_path, "q.json", {"d": 2, "a": ["1", "-3", "2"]})
    return p, q


@pytest.fixture
def spectra_files(tmp_path):
    a = write_json(tmp_path, "a.json", [1, -1])
    b = write_json(tmp_path, "b.json", ["1", "-1"])
    return a, b


# --------------------------------------------------------------------- conv

def test_conv_add(capsys, poly_files):
    p, q = poly_files
    code, out = run_cli(capsys, "conv", "add", p, p)
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["a"] == ["1", "0", "-2"]
    assert payload["pretty"] == "x^2 - 2"


def test_conv_output_parses_back_as_input(capsys, tmp_path, poly_files):
    p, q = poly_files
    code, out = run_cli(capsys, "conv", "mul", p, q)
    assert code == 0
    first = json.loads(out)["result"]
    again = write_json(tmp_path, "again.json", first)
    code, out = run_cli(capsys, "conv", "mul", again, q)
    assert code == 0
    # same as multiplying q in twice
    twice = boxtimes(
        boxtimes(
            MonicPoly.from_json_dict({"d": 2, "a": ["1", "0", "-1"]}),
            MonicPoly.from_json_dict({"d": 2, "a": ["1", "-3", "2"]}),
        ),
        MonicPoly.from_json_dict({"d": 2, "a": ["1", "-3", "2"]}),
    )
    assert json.loads(out)["result"] == twice.to_json_dict()


def test_conv_pretty_format(capsys, poly_files):
    p, _ = poly_files
    code, out = run_cli(capsys, "conv", "add", p, p, "--format", "pretty")
    assert code == 0
    assert out.splitlines()[0] == "x^2 - 2"


def test_conv_missing_file(capsys, poly_files):
    p, _ = poly_files
    code = main(["conv", "add", p, "/nonexistent/q.json"])
    assert code == 2


def test_conv_degree_mismatch(capsys, tmp_path, poly_files):
    p, _ = poly_files
    q3 = write_json(tmp_path, "q3.json", {"d": 3, "a": ["1", "0", "0", "0"]})
    assert main(["conv", "add", p, q3]) == 2


def test_conv_malformed_poly(capsys, tmp_path):
    bad = write_json(tmp_path, "bad.json", {"d": 2, "a": ["2", "0", "1"]})
    assert main(["conv", "add", bad, bad]) == 2


# -------------------------------------------------------------------- zpoly

def test_zpoly(capsys):
    code, out = run_cli(capsys, "zpoly", "--d", "2")
    assert code == 0
    assert json.loads(out)["result"]["a"] == ["1", "0", "2/3"]
    assert main(["zpoly", "--d", "0"]) == 2


# --------------------------------------------------------------- commutator

def test_commutator_exact(capsys, spectra_files):
    a, b = spectra_files
    code, out = run_cli(capsys, "commutator", a, b)
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["a"] == ["1", "0", "8/3"]
    assert "mc" not in payload


def test_commutator_with_mc(capsys, spectra_files):
    a, b = spectra_files
    code, out = run_cli(
        capsys, "commutator", a, b, "--mc", "20000", "--seed", "42"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mc"]["bands_ok"] is True
    assert payload["mc"]["n"] == 20000
    assert payload["mc"]["seed"] == 42
    assert set(payload["mc"]["z_scores"]) == {"e_1", "e_2"}


def test_commutator_mc_reports_are_byte_identical(capsys, spectra_files):
    a, b = spectra_files
    _, out1 = run_cli(capsys, "commutator", a, b, "--mc", "3000", "--seed", "5")
    _, out2 = run_cli(capsys, "commutator", a, b, "--mc", "3000", "--seed", "5")
    assert out1 == out2
    _, out3 = run_cli(
        capsys, "commutator", a, b, "--mc", "3000", "--seed", "5", "--chunk", "100"
    )
    assert json.loads(out3)["mc"]["chunk_size"] == 100


def test_commutator_mc_without_seed(capsys, spectra_files):
    a, b = spectra_files
    assert main(["commutator", a, b, "--mc", "100"]) == 2


def test_commutator_length_mismatch(capsys, tmp_path, spectra_files):
    a, _ = spectra_files
    b3 = write_json(tmp_path, "b3.json", [1, 2, 3])
    assert main(["commutator", a, b3]) == 2


def test_commutator_rejects_floats(capsys, tmp_path, spectra_files):
    a, _ = spectra_files
    bad = write_json(tmp_path, "bad.json", [0.5, 1.5])
    assert main(["commutator", a, bad]) == 2


def test_commutator_rejects_empty(capsys, tmp_path, spectra_files):
    a, _ = spectra_files
    bad = write_json(tmp_path, "empty.json", [])
    assert main(["commutator", a, bad]) == 2


# --------------------------------------------------------------- weingarten

def test_weingarten_roundtrip(capsys):
    code, out = run_cli(capsys, "weingarten", "--k", "3", "--d", "4")
    assert code == 0
    payload = json.loads(out)
    assert ClassFunction.from_json_dict(payload) == weingarten(3, 4)
    assert payload["d"] == 4


def test_weingarten_bad_args(capsys):
    assert main(["weingarten", "--k", "0", "--d", "3"]) == 2
    assert main(["weingarten", "--k", "11", "--d", "3"]) == 2


# ----------------------------------------------------------------- immanant

def test_immanant_both_methods(capsys, tmp_path):
    mat = write_json(tmp_path, "y.json", [[1, 2], [3, 4]])
    code, out = run_cli(capsys, "immanant", "--shape", "1,1", mat)
    assert code == 0
    assert json.loads(out)["value"] == "-2"
    code, out = run_cli(
        capsys, "immanant", "--shape", "2", mat, "--method", "multilinear"
    )
    assert code == 0
    assert json.loads(out)["value"] == "10"


def test_immanant_bracketed_shape(capsys, tmp_path):
    mat = write_json(tmp_path, "y.json", [[1, 2], [3, 4]])
    code, out = run_cli(capsys, "immanant", "--shape", "[2]", mat)
    assert code == 0
    assert json.loads(out)["value"] == "10"


def test_immanant_errors(capsys, tmp_path):
    mat = write_json(tmp_path, "y.json", [[1, 2], [3, 4]])
    assert main(["immanant", "--shape", "3", mat]) == 2  # size mismatch
    assert main(["immanant", "--shape", "x", mat]) == 2
    ragged = write_json(tmp_path, "ragged.json", [[1, 2], [3]])
    assert main(["immanant", "--shape", "1,1", ragged]) == 2


# ---------------------------------------------------------------- character

def test_character_single_value(capsys):
    code, out = run_cli(
        capsys, "character", "--shape", "2,1", "--cycle-type", "3"
    )
    assert code == 0
    assert json.loads(out)["value"] == -1


def test_character_full_table(capsys):
    code, out = run_cli(capsys, "character", "--k", "3")
    assert code == 0
    table = json.loads(out)["table"]
    assert table["2,1|1,1,1"] == 2
    assert len(table) == 9


def test_character_arg_validation(capsys):
    assert main(["character"]) == 2
    assert main(["character", "--shape", "2,1"]) == 2
    assert main(["character", "--shape", "2,1", "--cycle-type", "2,2"]) == 2


# ------------------------------------------------------------------- kostka

def test_kostka_cli(capsys):
    code, out = run_cli(capsys, "kostka", "--shape", "2,1", "--weight", "1,1,1")
    assert code == 0
    assert json.loads(out)["value"] == 2
    code, out = run_cli(
        capsys, "kostka", "--shape", "2,1", "--weight", "1,1,1", "--inverse"
    )
    assert code == 0
    assert json.loads(out)["value"] == -2


def test_kostka_size_mismatch(capsys):
    assert main(["kostka", "--shape", "2,1", "--weight", "1,1"]) == 2


# ------------------------------------------------------------------- verify

def test_verify_identities_suite(capsys):
    code, out = run_cli(capsys, "verify", "identities", "--seed", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_negative_control(capsys):
    code, out = run_cli(
        capsys, "verify", "weingarten", "--mc", "2000", "--seed", "7",
        "--inject-wg-error",
    )
    assert code == 1
    assert "FAIL" in out


def test_verify_unknown_suite(capsys):
    assert main(["verify", "nope"]) == 2


def test_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "finfree", "zpoly", "--d", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pretty"] == "x^3 + 27/8*x"
