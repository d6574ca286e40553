import io
import json
import subprocess
import sys

import pytest

from dupcode.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


def test_sidon_verify():
    out = run_json("sidon", "verify", "--factors", "7", "--elements", "1;3", "--t", "2")
    assert out["sidon"] is True
    out = run_json("sidon", "verify", "--factors", "7", "--elements", "1;2;3", "--t", "2")
    assert out["sidon"] is False and "witness" in out
    out = run_json("sidon", "verify", "--factors", "3,3", "--elements", "1,0;0,1", "--t", "2")
    assert out["sidon"] is True


def test_sidon_greedy_and_bose_chowla():
    assert run_json("sidon", "greedy", "--w", "2", "--t", "2")["factors"] == [7]
    bc = run_json("sidon", "bose-chowla", "--prime-power", "3", "--t", "2")
    assert bc["factors"] == [8] and bc["exact_only"] and len(bc["elements"]) == 3
    aug = run_json("sidon", "bose-chowla", "--prime-power", "3", "--t", "2", "--augment")
    assert aug["factors"] == [8, 3] and not aug["exact_only"]


def test_code_build_list_encode_decode(tmp_path):
    path = tmp_path / "code.json"
    built = run_json("code", "build", "--q", "2", "--n", "5", "--w", "2", "--t", "1", "--k", "1", "--out", str(path))
    assert built["size"] == 4
    listed = run_json("code", "list", "--code-file", str(path))
    assert listed["codewords"] == built["codewords"]
    enc = run_json("code", "encode", "--code-file", str(path), "--index", "2")
    assert enc["codeword"] == built["codewords"][2]
    x = enc["codeword"]
    y = "0" + x
    dec = run_json("code", "decode", "--code-file", str(path), "--word", y)
    assert dec["codeword"] == x and sum(dec["pattern"]) == 1
    assert run("code", "decode", "--code-file", str(path), "--word", "001001")[0] == 1


def test_code_duplication_domain(tmp_path):
    path = tmp_path / "code.json"
    run_json("code", "build", "--q", "3", "--n", "6", "--w", "3", "--t", "1", "--k", "2", "--out", str(path))
    x = run_json("code", "encode", "--code-file", str(path), "--index", "0", "--domain", "duplication")["codeword"]
    y = x[:2] + x[:2] + x[2:]  # tandem duplication of the first two symbols
    dec = run_json("code", "decode", "--code-file", str(path), "--word", y, "--domain", "duplication")
    assert dec["codeword"] == x


def test_simulate_is_seeded():
    argv = ["simulate", "--q", "3", "--k", "3", "--t-ins", "2", "--t-del", "1", "--seed", "7", "--word", "000112212011"]
    a, b = run(*argv), run(*argv)
    assert a == b and a[0] == 0
    out = json.loads(a[1])
    assert out["output_length"] == 15
    assert out["zero_domain_weight_in"] == out["zero_domain_weight_out"] == 8


def test_simulate_duplication_rejects_deletions():
    code, _ = run("simulate", "--q", "2", "--k", "1", "--t-del", "1", "--seed", "1", "--word", "0101", "--domain", "duplication")
    assert code == 1


def test_verify_command(tmp_path):
    path = tmp_path / "code.json"
    run_json("code", "build", "--q", "2", "--n", "6", "--w", "3", "--t", "2", "--k", "1", "--out", str(path))
    for mode in ("ins", "del", "indel"):
        assert run_json("verify", "--code-file", str(path), "--mode", mode)["disjoint"] is True
    bad = tmp_path / "bad.json"
    obj = json.loads(path.read_text())
    obj["codewords"] = ["110000", "101000"]
    bad.write_text(json.dumps(obj))
    assert run_json("verify", "--code-file", str(bad), "--t", "1")["disjoint"] is False


def test_bounds_and_table():
    out = run_json("bounds", "--q", "2", "--k", "1", "--t", "3", "--n", "20")
    assert out["s_opt"] == 1
    code, text = run("bounds", "--q", "2", "--k", "1", "--t", "1", "--table", "10..12", "--format", "csv")
    assert code == 0 and len(text.strip().splitlines()) == 4


def test_oracle_and_stats():
    assert run_json("oracle", "--n", "3", "--q", "2", "--t", "1", "--k", "1")["size"] == 5
    a = run("stats", "--n", "100", "--q", "2", "--k", "1", "--samples", "50", "--seed", "3")
    b = run("stats", "--n", "100", "--q", "2", "--k", "1", "--samples", "50", "--seed", "3")
    assert a == b and a[0] == 0


def test_text_format():
    code, text = run("bounds", "--q", "2", "--k", "1", "--t", "2", "--format", "text")
    assert code == 0 and "s_opt=" in text


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate", "--q", "2", "--k", "1", "--word", "01"],  # no seed
        ["bounds", "--q", "1", "--k", "1", "--t", "1"],
        ["nonsense"],
        ["code", "build", "--q", "2"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate", "--q", "2", "--k", "1", "--seed", "1", "--word", "0121"],
        ["simulate", "--q", "2", "--k", "2", "--t-del", "1", "--seed", "1", "--word", "1111"],
        ["code", "list", "--code-file", "/nonexistent/code.json"],
        ["oracle", "--n", "30", "--q", "2", "--t", "1", "--k", "1"],
    ],
)
def test_domain_errors(argv):
    assert run(*argv)[0] == 1


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "dupcode.cli", "bounds", "--q", "2", "--k", "1", "--t", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["s_opt"] == 0
