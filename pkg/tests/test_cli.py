import json

import pytest

from censym import cli
from censym.paths import LatticePath
from censym.perms import parse_permutation
from censym.verify import Check, SuiteReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi_figure(capsys):
    code, out, err = run(
        capsys, "phi", "11 16 15 9 7 14 13 12 5 4 3 10 8 2 1 6"
    )
    assert code == 0
    assert out == "UUUUUUDDDUUDUDDD\n"
    assert err == ""


def test_phi_inv_figure(capsys):
    code, out, _ = run(capsys, "phi-inv", "UUUDDUUUUUUDDUUD")
    assert code == 0
    assert out == "14 16 8 15 13 7 6 12 5 11 10 4 2 9 1 3\n"


def test_phi_invalid_input(capsys):
    code, out, err = run(capsys, "phi", "1 3 2")
    assert code == 3
    assert out == ""
    assert "not centrosymmetric of even length" in err


def test_phi_inv_bad_path(capsys):
    code, _, err = run(capsys, "phi-inv", "DDU")
    assert code == 3
    assert "dips below the x-axis" in err


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "table", "--family", "zz", "--max-n", "2")[0] == 2
    assert run(capsys, "enumerate")[0] == 2


def test_perm_stats_json(capsys):
    code, out, _ = run(capsys, "perm-stats", "4 2 3 1")
    assert code == 0
    record = json.loads(out)
    assert record == {
        "n": 4,
        "centrosymmetric": True,
        "descents": [1, 3],
        "des": 2,
        "ltr_minima": [4, 2, 1],
        "tiny_minima": [2],
        "right_components": 3,
    }


def test_perm_stats_rejects_garbage(capsys):
    assert run(capsys, "perm-stats", "1 1")[0] == 3
    assert run(capsys, "perm-stats", "0 1")[0] == 3
    assert run(capsys, "perm-stats", "nope")[0] == 3


def test_enumerate_lines(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--len", "4", "--centro", "--avoid", "123"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines == [
        "2 1 4 3",
        "2 4 1 3",
        "3 1 4 2",
        "3 4 1 2",
        "4 2 3 1",
        "4 3 2 1",
    ]
    for line in lines:
        assert str(parse_permutation(line)) == line


def test_enumerate_json_and_csv(capsys):
    code, out, _ = run(
        capsys,
        "enumerate",
        "--len",
        "4",
        "--centro",
        "--avoid",
        "123",
        "--subclass",
        "k",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert payload["members"] == ["3 4 1 2", "4 3 2 1"]

    code, out, _ = run(
        capsys,
        "enumerate",
        "--len",
        "3",
        "--centro",
        "--avoid",
        "123",
        "--format",
        "csv",
    )
    assert code == 0
    assert out == "3,2,1\n"


def test_enumerate_bad_pattern(capsys):
    code, _, err = run(capsys, "enumerate", "--len", "4", "--avoid", "122")
    assert code == 3
    assert "not a pattern" in err


def test_enumerate_cap(capsys):
    code, _, err = run(capsys, "enumerate", "--len", "12")
    assert code == 3
    assert "cap" in err


def test_table_csv(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--family",
        "t",
        "--max-n",
        "5",
        "--source",
        "recurrence",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("n\\d,0,1,")
    assert lines[-1] == "5,0,0,0,0,10,50,85,75,31,1"


def test_table_sources_agree(capsys):
    outputs = []
    for source in ("recurrence", "series", "oracle"):
        code, out, _ = run(
            capsys,
            "table",
            "--family",
            "t",
            "--max-n",
            "3",
            "--source",
            source,
            "--format",
            "csv",
        )
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1] == outputs[2]


def test_table_json_cells_are_strings(capsys):
    code, out, _ = run(
        capsys,
        "table",
        "--family",
        "q",
        "--max-n",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rows"][2] == ["1", "1", "1", "1"]


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--name", "T", "--order", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["name"] == "T"
    assert payload["order"] == 3
    assert payload["coeffs"] == [
        ["1"],
        ["1", "1"],
        ["0", "2", "3", "1"],
        ["0", "0", "3", "9", "7", "1"],
    ]


def test_series_negative_order(capsys):
    assert run(capsys, "series", "--name", "K", "--order", "-1")[0] == 3


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "path", "--max-n", "2")
    assert code == 0
    assert "PASS" in out
    assert "all suites passed" in out


def test_verify_reports_failure(monkeypatch, capsys):
    bad = SuiteReport("path", 2, checks=[Check("doomed", False, 1, "boom")])
    monkeypatch.setattr(cli.verify, "run_suite", lambda *a, **k: [bad])
    code, out, _ = run(capsys, "verify", "--suite", "path", "--max-n", "2")
    assert code == 1
    assert "FAIL doomed" in out
    assert "verification FAILED" in out


def test_verify_rejects_negative(capsys):
    assert run(capsys, "verify", "--suite", "path", "--max-n", "-1")[0] == 3


def test_output_determinism(capsys):
    first = run(capsys, "enumerate", "--len", "6", "--centro", "--avoid", "132")
    second = run(capsys, "enumerate", "--len", "6", "--centro", "--avoid", "132")
    assert first == second
    emitted = first[1].strip().split("\n")
    assert emitted == sorted(emitted, key=lambda s: parse_permutation(s).values)


def test_emitted_paths_reparse(capsys):
    code, out, _ = run(capsys, "phi", "3 4 1 2")
    assert code == 0
    assert LatticePath(out.strip()).steps == "UUDD"
