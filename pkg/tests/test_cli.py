import json

import pytest

from loosegeo.cli import main
from conftest import CORPUS


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_points_text(capsys):
    code, out, _ = run(capsys, "points", CORPUS / "toy.lg", "-q", 2)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["x", "y", "lx#1", "ly#1"]
    assert len(lines) == 8  # header plus 7 points


def test_points_json_extension(capsys):
    code, out, _ = run(capsys, "points", CORPUS / "toy.lg", "-q", 2, "--ext", 2, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {"q": 2, "ext": 2, "count": 29}


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", CORPUS / "k3.lg", "--json", "-q", 2, "-q", 3)
    assert code == 0
    payload = json.loads(out)
    assert payload["counts"] == {"2": 7, "3": 13}
    assert payload["polynomial"] == ["1", "1", "1"]


def test_aut_json(capsys):
    code, out, _ = run(capsys, "aut", CORPUS / "toy.lg", "-q", 2, "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["projective_order"] == 8
    assert payload["combinatorial_order"] == 8
    assert payload["equal"] is True


def test_lines_command(capsys):
    code, out, _ = run(capsys, "lines", CORPUS / "toy.lg", "-q", 2)
    assert code == 0
    assert "11 lines total" in out


def test_matrix_and_kernel(capsys):
    code, out, _ = run(capsys, "matrix", CORPUS / "morphism_contract.lgm", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["injective"] is False
    code, out, _ = run(capsys, "kernel", CORPUS / "morphism_contract.lgm", "-q", 2)
    assert code == 0
    assert "kernel points" in out


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "ddc", CORPUS / "toy.lg", "-q", 2)
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "igp", CORPUS / "gamma2.lg", "-q", 2,
                       "--expected", "true")
    assert code == 1 and out.startswith("FAIL")


def test_verify_skip_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "cenprod", CORPUS / "p3.lg", "-q", 2)
    assert code == 0 and out.startswith("SKIP")


def test_bad_input_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "points", "no_such_file.lg")
    assert exc.value.code == 2
    code, _, err = run(capsys, "verify", "ddc", CORPUS / "p4.lg", "-q", 2)
    assert code == 2 and "error" in err


def test_unknown_check_rejected_by_parser(capsys):
    with pytest.raises(SystemExit) as exc:
        run(capsys, "verify", "fermat", CORPUS / "toy.lg")
    assert exc.value.code == 2


def test_suite_on_mini_manifest(tmp_path, capsys):
    manifest = tmp_path / "mini.txt"
    manifest.write_text(f"graph {CORPUS / 'toy.lg'} ddc,decompose q=2\n")
    code, out, _ = run(capsys, "suite", manifest)
    assert code == 0
    assert "2 checks, 0 failed" in out
