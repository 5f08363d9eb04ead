"""End-to-end CLI tests driven through subprocess.

The binary path arrives in PARTHODGE_CLI (set by the test registration).
"""

import json
import os
import subprocess

CLI = os.environ["PARTHODGE_CLI"]


def run(*args, env_extra=None):
    env = os.environ.copy()
    env.pop("PARTHODGE_ORDER", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_no_subcommand_is_usage_error():
    assert run().returncode == 2


def test_help_exits_zero():
    result = run("--help")
    assert result.returncode == 0
    for name in ("enumerate", "apply", "harmonics", "hodge", "verify", "euler-char"):
        assert name in result.stdout


def test_enumerate_distinct():
    result = run("enumerate", "--kind", "distinct", "--n", "5")
    assert result.returncode == 0
    assert result.stdout.split() == ["5", "4,1", "3,2"]


def test_enumerate_ordinary_slice():
    result = run("enumerate", "--kind", "ordinary", "--n", "4", "--ell", "2")
    assert result.returncode == 0
    assert result.stdout.split() == ["3,1", "2^2"]


def test_enumerate_empty_slice_is_fine():
    result = run("enumerate", "--kind", "distinct", "--n", "5", "--ell", "4")
    assert result.returncode == 0
    assert result.stdout == ""


def test_enumerate_rejects_weight_zero():
    assert run("enumerate", "--kind", "distinct", "--n", "0").returncode == 2


def test_enumerate_json():
    result = run("enumerate", "--kind", "distinct", "--n", "5", "--format", "json")
    assert json.loads(result.stdout) == [
        {"kind": "distinct", "parts": [5]},
        {"kind": "distinct", "parts": [4, 1]},
        {"kind": "distinct", "parts": [3, 2]},
    ]


def test_apply_text():
    assert run("apply", "delta", "--kind", "distinct", "4,2").stdout.strip() == "3,2,1"
    assert run("apply", "delta", "--kind", "ordinary", "2^2").stdout.strip() == "0"
    assert run("apply", "delta-star", "--kind", "ordinary", "3,1").stdout.strip() == "4"


def test_apply_json():
    result = run("apply", "delta", "--kind", "distinct", "4,2", "--format", "json")
    payload = json.loads(result.stdout)
    assert payload["op"] == "delta"
    assert payload["input"] == {"kind": "distinct", "parts": [4, 2]}
    assert payload["result"] == {"kind": "distinct", "parts": [3, 2, 1]}
    vanished = json.loads(run("apply", "delta", "--kind", "ordinary", "2^2",
                              "--format", "json").stdout)
    assert vanished["result"] is None


def test_apply_parse_error():
    result = run("apply", "delta", "--kind", "distinct", "2,2")
    assert result.returncode == 2
    assert result.stderr != ""


def test_harmonics_single_weight():
    result = run("harmonics", "--kind", "ordinary", "--n", "16")
    assert result.returncode == 0
    assert result.stdout.split() == ["4^4", "2^8", "2^6,1^4", "2^4,1^8", "2^2,1^12"]

    empty = run("harmonics", "--kind", "ordinary", "--n", "2")
    assert empty.returncode == 0
    assert empty.stdout == ""

    assert run("harmonics", "--kind", "distinct", "--n", "7").stdout.split() == ["4,3"]


def test_harmonics_sweep():
    result = run("harmonics", "--kind", "distinct", "--max-n", "7")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "n=1: 1"
    assert lines[2] == "n=3:"
    assert lines[6] == "n=7: 4,3"

    table = json.loads(run("harmonics", "--kind", "distinct", "--max-n", "7",
                           "--format", "json").stdout)
    assert table["5"] == ["3,2"]
    assert table["3"] == []


def test_hodge_text():
    result = run("hodge", "--kind", "ordinary", "--n", "4")
    assert result.returncode == 0
    assert "chi: 1" in result.stdout
    assert "harmonic length 2: 2^2" in result.stdout
    assert "pair: 4 -> 3,1" in result.stdout


def test_hodge_json():
    report = json.loads(run("hodge", "--kind", "ordinary", "--n", "4",
                            "--format", "json").stdout)
    assert report["chi"] == 1
    assert report["harmonic"] == {"2": ["2^2"]}
    assert report["pairs"] == [["4", "3,1"], ["2,1^2", "1^4"]]
    assert report["counts"] == {"1": 1, "2": 2, "3": 1, "4": 1}


def test_hodge_distinct_weight_three():
    report = json.loads(run("hodge", "--kind", "distinct", "--n", "3",
                            "--format", "json").stdout)
    assert report["chi"] == 0
    assert report["harmonic"] == {}
    assert report["pairs"] == [["3", "2,1"]]


def test_hodge_oracle():
    result = run("hodge", "--kind", "ordinary", "--n", "4", "--oracle")
    assert result.returncode == 0
    assert "oracle: kernel dimensions match harmonic counts" in result.stdout


def test_hodge_oracle_limited():
    assert run("hodge", "--kind", "ordinary", "--n", "21", "--oracle").returncode == 2


def test_verify_identities():
    result = run("verify", "pentagonal", "--order", "120")
    assert result.returncode == 0
    assert "equal up to q^120" in result.stdout
    for name in ("bosonic", "euler-odd", "odd-reciprocal"):
        assert run("verify", name, "--order", "100").returncode == 0


def test_verify_unknown_identity():
    assert run("verify", "nonsense").returncode == 2


def test_verify_order_precedence():
    from_env = run("verify", "pentagonal", env_extra={"PARTHODGE_ORDER": "64"})
    assert "q^64" in from_env.stdout
    flag_wins = run("verify", "pentagonal", "--order", "32",
                    env_extra={"PARTHODGE_ORDER": "64"})
    assert "q^32" in flag_wins.stdout
    default = run("verify", "pentagonal")
    assert "q^500" in default.stdout


def test_verify_json():
    payload = json.loads(run("verify", "bosonic", "--order", "40",
                             "--format", "json").stdout)
    assert payload == {
        "identity": "bosonic",
        "order": 40,
        "verified": True,
        "mismatch_degree": None,
    }


def test_euler_char_agreement():
    rows = json.loads(run("euler-char", "--kind", "distinct", "--max-n", "15",
                          "--format", "json").stdout)
    assert len(rows) == 15
    assert all(row["agree"] for row in rows)
    assert all(row["signed"] == row["harmonic"] == int(row["series"]) for row in rows)
    assert [row["n"] for row in rows if row["series"] != "0"] == [1, 2, 5, 7, 12, 15]


def test_euler_char_text():
    result = run("euler-char", "--kind", "ordinary", "--max-n", "8")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 9  # header + one row per weight
    assert all(line.endswith("yes") for line in lines[1:])


def test_euler_char_warns_on_large_sweeps():
    result = run("euler-char", "--kind", "ordinary", "--max-n", "41")
    assert result.returncode == 0
    assert "warning" in result.stderr
