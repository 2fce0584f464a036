import io
import json
import subprocess
import sys

import pytest

from halve2.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_halve_worked_example(capsys):
    code, out, _ = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["halvable"] is True
    assert {"x": "6", "y": "-6"} in [h["Q"] for h in doc["halves"]]
    assert doc["halves"][0]["tangent"] == {"l": "-3", "m": "12"}


def test_divisible_negative_witness(capsys):
    code, out, _ = run_cli(
        capsys, "divisible", "--field", "Q", "--roots", "0,3,4", "--point", "6,-6"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["halvable"] is False
    assert [w["difference"] for w in doc["witness"]] == ["6", "3", "2"]
    assert all(w["is_square"] is False for w in doc["witness"])


def test_text_format(capsys):
    code, out, _ = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0",
        "--format", "text",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "halvable: yes"
    assert "Q = (6, -6)   triple (2, 1, 0)   tangent y = -3*x + 12" in lines


def test_rational_literals_with_fractions(capsys):
    # 2P for P = (10,-6) on the (9,6,1) curve has fractional coordinates
    code, out, _ = run_cli(
        capsys, "divisible", "--field", "Q", "--roots", "9,6,1",
        "--point", "1825/144,29233/1728",
    )
    assert code == 0
    assert json.loads(out)["halvable"] is True


def test_repeated_roots_rejected(capsys):
    code, _, err = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,0,1", "--point", "1,1"
    )
    assert code == 1
    assert "distinct" in err


def test_point_off_curve_rejected(capsys):
    code, _, err = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,3,4", "--point", "1,1"
    )
    assert code == 1
    assert "does not satisfy" in err


def test_infinity_input_rejected(capsys):
    code, _, err = run_cli(
        capsys, "divisible", "--field", "Q", "--roots", "0,3,4", "--point", "inf"
    )
    assert code == 1
    assert "2-torsion" in err


def test_bad_field_spec(capsys):
    code, _, err = run_cli(
        capsys, "halve", "--field", "Fp:6", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 1
    assert "not prime" in err


def test_usage_errors_exit_1(capsys):
    assert run_cli(capsys, "bogus")[0] == 1
    assert run_cli(capsys, "halve", "--field", "Q")[0] == 1
    assert run_cli(capsys, "tower", "--field", "Q", "--roots", "0,3,4",
                   "--point", "4,0", "--max-depth", "0")[0] == 1


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0


def test_tower_output(capsys):
    code, out, _ = run_cli(
        capsys, "tower", "--field", "Q", "--roots", "0,3,4", "--point", "4,0",
        "--max-depth", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "base": {"x": "4", "y": "0"},
        "links": [{"x": "6", "y": "-6"}],
        "depth": 1,
    }


def test_order4_output(capsys):
    code, out, _ = run_cli(
        capsys, "order4", "--field", "Q", "--roots", "0,3,4", "--index", "3"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["base"] == {"x": "4", "y": "0"}
    assert [e["Q"] for e in doc["points"]] == [
        {"x": "6", "y": "-6"}, {"x": "6", "y": "6"},
        {"x": "2", "y": "2"}, {"x": "2", "y": "-2"},
    ]
    assert all(e["confirmed_order_4"] for e in doc["points"])


def test_order4_without_square_roots(capsys):
    code, _, err = run_cli(
        capsys, "order4", "--field", "Q", "--roots", "0,1,2", "--index", "3"
    )
    assert code == 1
    assert "not a square" in err


def test_oracle_jsonl(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--field", "Fp:7", "--roots", "0,3,4")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 8
    assert rows[0]["point"] == "inf"
    assert len(rows[0]["preimages"]) == 4
    four = [r for r in rows if r["point"] == {"x": "4", "y": "0"}]
    assert len(four) == 1
    assert {"x": "6", "y": "1"} in four[0]["preimages"]


def test_oracle_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("HALVE2_PRIME_BOUND", "5")
    code, _, err = run_cli(capsys, "oracle", "--field", "Fp:7", "--roots", "0,3,4")
    assert code == 1
    assert "bound" in err

    monkeypatch.setenv("HALVE2_PRIME_BOUND", "not-a-number")
    code, _, err = run_cli(capsys, "oracle", "--field", "Fp:7", "--roots", "0,3,4")
    assert code == 1


def test_verify_accepts_own_report(capsys, monkeypatch):
    code, report, _ = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(report))
    code, out, _ = run_cli(
        capsys, "verify", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert len(doc["checks"]) == 4
    assert all(
        row["cubic_identity"] and row["moebius"] and row["vieta"]
        for row in doc["checks"]
    )


def test_verify_flags_tampered_report(capsys, monkeypatch):
    code, report, _ = run_cli(
        capsys, "halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    doc = json.loads(report)
    doc["halves"][0]["tangent"]["m"] = "11"
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(doc)))
    code, out, _ = run_cli(
        capsys, "verify", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 0, "a failed audit is still a valid answer"
    result = json.loads(out)
    assert result["all_pass"] is False
    assert result["checks"][0]["moebius"] is False


def test_verify_rejects_garbage_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("{not json"))
    code, _, err = run_cli(
        capsys, "verify", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"
    )
    assert code == 1


def _run_subprocess(args, stdin=b""):
    return subprocess.run(
        [sys.executable, "-m", "halve2", *args],
        input=stdin, capture_output=True, timeout=120,
    )


def test_cli_byte_determinism_subprocess():
    invocations = [
        ["halve", "--field", "Q", "--roots", "0,3,4", "--point", "4,0"],
        ["halve", "--field", "Fp:31", "--roots", "0,3,4", "--point", "4,0",
         "--format", "text"],
        ["oracle", "--field", "Fp:13", "--roots", "0,3,4"],
    ]
    for args in invocations:
        first = _run_subprocess(args)
        second = _run_subprocess(args)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stderr == second.stderr == b""
