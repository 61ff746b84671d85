import csv
import io
import json

import pytest

from kla2 import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kl(capsys, no_cache):
    assert run(capsys, "kl", "e", "rst")[1].strip() == "P = 1, mu = 0, gap = 3"
    assert run(capsys, "kl", "sts", "sts")[1].startswith("P = 1,")
    assert "mu = 1" in run(capsys, "kl", "trt", "rstrst")[1]


def test_mu_methods(capsys, no_cache):
    assert run(capsys, "mu", "trt", "rstrst", "--method", "closed")[1].strip() == "mu = 1 (T5.12)"
    assert run(capsys, "mu", "trt", "rstrst", "--method", "direct")[1].strip() == "mu = 1"
    code, out, _ = run(capsys, "mu", "rtsr", "rstrstr")
    assert code == 1 and "match = False" in out


def test_mu_table(capsys, tmp_path, no_cache):
    out = tmp_path / "mu.csv"
    assert cli.main(["mu-table", "--max-len", "6", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert {"u": "rtr", "w": "rstrst", "gap": "3", "mu_closed": "1", "rule": "T5.12",
            "mu_direct": "1", "match": "1"} in rows
    code, text, _ = run(capsys, "mu-table", "--max-len", "3")
    pairs = {(r["u"], r["w"], r["mu_direct"]) for r in csv.DictReader(io.StringIO(text))}
    assert {("e", "r", "1"), ("e", "s", "1"), ("e", "t", "1")} <= pairs
    code, text, _ = run(capsys, "mu-table", "--max-len", "2")
    assert all(r["gap"] != "3" for r in csv.DictReader(io.StringIO(text)))
    # the length-7 exceptions make the table report a mismatch
    assert cli.main(["mu-table", "--max-len", "7", "--out", str(out)]) == 1


def test_cells_and_enum(capsys, no_cache):
    code, text, _ = run(capsys, "cells", "--max-len", "3")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0] == {"word": "e", "length": "0", "two_sided": "c_e", "left_cell": "C_empty"}
    assert {"word": "sts", "length": "3", "two_sided": "c_0", "left_cell": "A_st"} in rows
    code, text, _ = run(capsys, "--format", "json", "enum", "--max-len", "2")
    assert len(json.loads(text)) == 1 + 3 + 6


def test_b_table(capsys, no_cache):
    code, text, _ = run(capsys, "b-table", "--lambda", "0,4")
    rows = {(r["lambda_m"], r["lambda_n"]): r["coeffs"] for r in csv.DictReader(io.StringIO(text))}
    assert rows[("1", "2")] == "-3:1 -1:1"
    assert rows[("0", "1")] == "-4:1"
    assert rows[("0", "4")] == "0:1"


def test_verify(capsys, no_cache):
    code, out, _ = run(capsys, "verify", "4.2")
    assert code == 0 and out.startswith("[PASS] 4.2")
    code, out, _ = run(capsys, "verify", "4.4")
    assert code == 1 and "[FAIL] 4.4" in out


@pytest.mark.parametrize("argv", [
    ["kl", "x", "y"],
    ["verify", "9.9"],
    ["enum", "--max-len", "25"],
    ["b-table", "--lambda=-1,2"],
    ["b-table", "--lambda", "oops"],
    ["mu", "rst", "r", "--method", "closed"],
])
def test_usage_errors(capsys, no_cache, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["nope"])
    assert exc.value.code == 2


def test_config_and_cache(capsys, tmp_path, monkeypatch):
    cache = tmp_path / "cache"
    conf = tmp_path / "kla2.conf"
    conf.write_text("# test config\nmax_len = 4\noutput_format = json\njobs = 1\n")
    monkeypatch.setenv("KLA2_CACHE", str(cache))
    code, text, _ = run(capsys, "--config", str(conf), "mu-table")
    assert code == 0 and json.loads(text)
    assert (cache / "kl_6.tsv").exists()
    # a second run reads the cache and gives identical output
    assert run(capsys, "--config", str(conf), "mu-table")[1] == text
    conf.write_text("max_len = many\n")
    assert run(capsys, "--config", str(conf), "enum")[0] == 2
    conf.write_text("colour = blue\n")
    assert run(capsys, "--config", str(conf), "enum")[0] == 2
