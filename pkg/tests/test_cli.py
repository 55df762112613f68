import json

import pytest

from schubert_git.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_minimal_text(capsys):
    code, out, _ = run_cli(capsys, "minimal", "--type", "A", "--rank", "4", "--r", "2", "--s", "2")
    assert code == 0
    assert "2 1 3 2" in out and "-4/5" in out and "True" in out


def test_minimal_csv(capsys):
    code, out, _ = run_cli(
        capsys, "minimal", "--type", "C", "--rank", "3", "--r", "1", "--s", "3",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("type,rank,r,s,word")
    assert "3 2 1" in lines[1] and "-1/2" in lines[1]


def test_analyze_fixture_json(capsys):
    code, out, _ = run_cli(
        capsys, "analyze", "--type", "A", "--rank", "4", "--chi", "0,2,2,5",
        "--s", "2", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["chi_root_coords"] == ["3", "6", "7", "6"]
    assert payload["J"] == [1]
    got = {row["word"]: row["pairing"] for row in payload["minimal_admitting"]}
    assert got == {"2 3 4": "-3", "2 1 3 2": "0"}
    assert payload["ss_eq_s_whole_space"] is False
    assert json.dumps(payload, indent=2) + "\n" == out


def test_quotient_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "quotient", "--type", "A", "--rank", "4", "--r", "2", "--s", "2",
        "--d-max", "2", "--k-deg", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "MatrixProj"
    assert payload["rows"] == 2 and payload["cols"] == 2 and payload["a"] == 4
    assert payload["hilbert"] == [1, 35, 165]
    assert len(payload["decomposition"]) == 3
    # canonical serialization round-trips byte-identically
    assert json.dumps(payload, indent=2) + "\n" == out


def test_quotient_point_case(capsys):
    code, out, _ = run_cli(
        capsys, "quotient", "--type", "A", "--rank", "3", "--r", "2", "--s", "2"
    )
    assert code == 0
    assert "a single point" in out


def test_decompose_table(capsys):
    code, out, _ = run_cli(
        capsys, "decompose", "--type", "A", "--rank", "4", "--r", "2", "--s", "2",
        "--k-deg", "1",
    )
    assert code == 0
    assert "total dimension: 35" in out
    code, out, _ = run_cli(
        capsys, "decompose", "--type", "B", "--rank", "3", "--r", "3", "--s", "3",
        "--k-deg", "1",
    )
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--type", "E6", "--rank", "6", "--r", "6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["size"] == 27
    assert payload["elements"][0] == {"word": "e", "length": 0}
    code, out, _ = run_cli(
        capsys, "enumerate", "--type", "A", "--rank", "3", "--j", "1,3"
    )
    assert code == 0
    assert "6 elements" in out


def test_enumerate_guard_exit(capsys):
    code, _, err = run_cli(
        capsys, "enumerate", "--type", "E7", "--rank", "7", "--j", "", "--guard", "100"
    )
    assert code == 2
    assert "guard" in err


def test_bad_flags_exit_two(capsys):
    code, _, err = run_cli(capsys, "minimal", "--type", "A", "--rank", "4", "--r", "9", "--s", "2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["minimal", "--type", "Z", "--rank", "4", "--r", "1", "--s", "1"])
    assert exc.value.code == 2


def test_verify_selected_criteria(capsys):
    code, out, _ = run_cli(capsys, "verify", "--criteria", "2,4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [entry["criterion"] for entry in payload] == [2, 4]
    assert all(entry["passed"] for entry in payload)
    code, out, _ = run_cli(capsys, "verify", "--criteria", "2")
    assert code == 0
    assert out.startswith("criterion  2: PASS")
