import json
import os
import subprocess
import sys

import pytest

from carlitz.cli import main

GOLDEN_1811 = {
    "p": 3,
    "s": 1,
    "field_modulus": None,
    "prime": "T^2+1",
    "h": 2,
    "primitive_root": "T+1",
    "group_order": "8",
    "n": "1811",
    "method": "fast",
    "counts": [
        {"exponent": "0", "residue": "1", "count": "72"},
        {"exponent": "4", "residue": "2", "count": "18"},
        {"exponent": "6", "residue": "T", "count": "90"},
    ],
    "zero_count": "1632",
}

BASE = ["dist", "-p", "3", "--prime", "T^2+1", "--primitive-root", "T+1"]


@pytest.fixture(autouse=True)
def _no_ambient_cache(monkeypatch):
    monkeypatch.delenv("CARLITZ_CACHE_DIR", raising=False)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_dist_golden_json(capsys):
    code, out, err = run(BASE + ["-n", "1811"], capsys)
    assert code == 0
    assert err == ""
    assert json.loads(out) == GOLDEN_1811


def test_dist_deterministic_bytes(capsys):
    _, out1, _ = run(BASE + ["-n", "1811"], capsys)
    _, out2, _ = run(BASE + ["-n", "1811"], capsys)
    assert out1 == out2


def test_dist_default_root_searches(capsys):
    # Omitting --primitive-root finds T+1, the first primitive element.
    code, out, _ = run(["dist", "-p", "3", "--prime", "T^2+1", "-n", "1811"], capsys)
    assert code == 0
    assert json.loads(out) == GOLDEN_1811


def test_dist_n_zero(capsys):
    code, out, _ = run(BASE + ["-n", "0"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["counts"] == [{"exponent": "0", "residue": "1", "count": "1"}]
    assert doc["zero_count"] == "0"


def test_dist_huge_n(capsys):
    code, out, _ = run(BASE + ["-n", str(10**40)], capsys)
    assert code == 0
    doc = json.loads(out)
    total = sum(int(e["count"]) for e in doc["counts"]) + int(doc["zero_count"])
    assert total == 10**40 + 1


def test_dist_brute_method_agrees(capsys):
    _, fast_out, _ = run(BASE + ["-n", "500"], capsys)
    code, brute_out, _ = run(BASE + ["-n", "500", "--method", "brute"], capsys)
    assert code == 0
    fast, brute = json.loads(fast_out), json.loads(brute_out)
    assert brute["method"] == "brute"
    assert fast["counts"] == brute["counts"]
    assert fast["zero_count"] == brute["zero_count"]


def test_dist_csv(capsys):
    code, out, _ = run(BASE + ["-n", "1811", "--output", "csv"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "exponent,residue,count",
        "0,1,72",
        "4,2,18",
        "6,T,90",
        "zero_count,,1632",
    ]


def test_dist_table(capsys):
    code, out, _ = run(BASE + ["-n", "1811", "--output", "table"], capsys)
    assert code == 0
    assert "n = 1811" in out
    assert "prime = T^2+1   (h = 2)" in out
    assert "primitive root = T+1   group order = 8" in out
    lines = [ln.split() for ln in out.splitlines() if ln.strip()]
    assert ["0", "1", "72"] in lines
    assert ["6", "T", "90"] in lines
    assert ["zero", "1632"] in lines


def test_dist_prime_degree(capsys):
    # --prime-degree 2 picks the canonical degree-2 irreducible, T^2+1.
    code, out, _ = run(
        ["dist", "-p", "3", "--prime-degree", "2", "-n", "1811"], capsys
    )
    assert code == 0
    assert json.loads(out) == GOLDEN_1811


def test_dist_extension_field(capsys):
    code, out, _ = run(
        ["dist", "-p", "2", "-s", "2", "--prime", "T+u", "-n", "20"], capsys
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["field_modulus"] == "u^2+u+1"
    assert doc["group_order"] == "3"
    total = sum(int(e["count"]) for e in doc["counts"]) + int(doc["zero_count"])
    assert total == 21


def test_check_ok(capsys):
    code, out, _ = run(["check", "-p", "3", "--prime", "T^2+1", "--max-n", "100"], capsys)
    assert code == 0
    assert out == "OK 101 cases\n"


def test_check_extension(capsys):
    code, out, _ = run(
        ["check", "-p", "2", "-s", "2", "--prime", "T+u", "--max-n", "50"], capsys
    )
    assert code == 0
    assert out == "OK 51 cases\n"


# -- exit codes -----------------------------------------------------------------


def test_exit_usage_reducible_prime(capsys):
    code, out, err = run(["dist", "-p", "3", "--prime", "T^2+2", "-n", "5"], capsys)
    assert code == 2
    assert "error:" in err


def test_exit_usage_bad_root(capsys):
    code, _, err = run(
        ["dist", "-p", "3", "--prime", "T^2+1", "--primitive-root", "2", "-n", "5"],
        capsys,
    )
    assert code == 2
    assert "not" in err  # explains the order mismatch


def test_exit_usage_bad_n(capsys):
    assert run(BASE + ["-n", "abc"], capsys)[0] == 2
    assert run(BASE + ["-n", "-5"], capsys)[0] == 2
    assert run(BASE + ["-n", "0x10"], capsys)[0] == 2


def test_exit_usage_prime_spec(capsys):
    code, _, err = run(["dist", "-p", "3", "-n", "5"], capsys)
    assert code == 2
    assert "--prime" in err
    code, _, _ = run(
        ["dist", "-p", "3", "--prime", "T^2+1", "--prime-degree", "2", "-n", "5"],
        capsys,
    )
    assert code == 2


def test_exit_usage_field_modulus_on_prime_field(capsys):
    code, _, _ = run(
        ["dist", "-p", "3", "--field-modulus", "u+1", "--prime", "T^2+1", "-n", "5"],
        capsys,
    )
    assert code == 2


def test_exit_usage_parse_error(capsys):
    code, _, err = run(["dist", "-p", "3", "--prime", "T^2+u", "-n", "5"], capsys)
    assert code == 2
    assert "error:" in err


def test_exit_guardrail(capsys):
    code, _, err = run(
        BASE + ["-n", "1000000", "--method", "brute", "--enum-limit", "1000"], capsys
    )
    assert code == 3
    assert "exceeds" in err
    code, _, _ = run(
        ["binom", "-p", "3", "-n", str(10**9), "-m", "5", "--exact"], capsys
    )
    assert code == 3
    code, _, _ = run(["factorial", "-p", "3", "-n", str(10**9)], capsys)
    assert code == 3


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as e:
        main([])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["dist", "-p", "3", "--prime", "T^2+1", "-n", "5", "--method", "magic"])
    assert e.value.code == 2


# -- the base-table cache --------------------------------------------------------


def test_cache_cold_and_warm(tmp_path, capsys):
    args = BASE + ["-n", "1811", "--cache", str(tmp_path)]
    code, cold, _ = run(args, capsys)
    assert code == 0
    path = tmp_path / "base_tables.json"
    assert path.exists()
    saved = json.loads(path.read_text())
    key = "p=3;s=1;modulus=;prime=T^2+1;root=T+1"
    assert key in saved
    assert saved[key]["3"] == [2, 0, 0, 0, 0, 0, 2, 0]
    code, warm, _ = run(args, capsys)
    assert code == 0
    assert warm == cold


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("CARLITZ_CACHE_DIR", str(tmp_path))
    code, out, _ = run(BASE + ["-n", "1811"], capsys)
    assert code == 0
    assert json.loads(out) == GOLDEN_1811
    assert (tmp_path / "base_tables.json").exists()


def test_cache_corrupt_file_is_ignored(tmp_path, capsys):
    path = tmp_path / "base_tables.json"
    path.write_text("{ not json at all")
    code, out, _ = run(BASE + ["-n", "1811", "--cache", str(tmp_path)], capsys)
    assert code == 0
    assert json.loads(out) == GOLDEN_1811
    assert json.loads(path.read_text())  # rebuilt cleanly


def test_cache_invalid_entries_are_ignored(tmp_path, capsys):
    key = "p=3;s=1;modulus=;prime=T^2+1;root=T+1"
    # Wrong length, negative counts, bad mass, junk keys: all skipped.
    path = tmp_path / "base_tables.json"
    path.write_text(json.dumps({key: {
        "2": [3, 0, 0, 0],
        "3": [4, 0, 0, 0, 0, 0, -2, 0],
        "4": [9, 0, 0, 0, 0, 0, 0, 0],
        "x": [1, 0, 0, 0, 0, 0, 0, 0],
    }}))
    code, out, _ = run(BASE + ["-n", "1811", "--cache", str(tmp_path)], capsys)
    assert code == 0
    assert json.loads(out) == GOLDEN_1811


def test_cache_poisoned_entry_caught_by_check(tmp_path, capsys):
    # A wrong table entry with plausible shape passes the cheap validation,
    # but check recomputes every class from scratch and flags it.
    key = "p=3;s=1;modulus=;prime=T^2+1;root=T+1"
    path = tmp_path / "base_tables.json"
    path.write_text(json.dumps({key: {"3": [2, 0, 2, 0, 0, 0, 0, 0]}}))
    code, out, _ = run(
        ["check", "-p", "3", "--prime", "T^2+1", "--primitive-root", "T+1",
         "--max-n", "10", "--cache", str(tmp_path)],
        capsys,
    )
    assert code == 1
    assert "MISMATCH at n = 3" in out
    assert "fast : 2 + 2x^2" in out
    assert "brute: 2 + 2x^6" in out


def test_cache_two_rings_coexist(tmp_path, capsys):
    run(BASE + ["-n", "100", "--cache", str(tmp_path)], capsys)
    code, out, _ = run(
        ["dist", "-p", "2", "--prime", "T^3+T+1", "-n", "100", "--cache", str(tmp_path)],
        capsys,
    )
    assert code == 0
    saved = json.loads((tmp_path / "base_tables.json").read_text())
    assert len(saved) == 2
    # And the first ring still round-trips.
    code, out, _ = run(BASE + ["-n", "1811", "--cache", str(tmp_path)], capsys)
    assert json.loads(out) == GOLDEN_1811


# -- the small arithmetic commands -----------------------------------------------


def test_binom_command(capsys):
    code, out, _ = run(["binom", "-p", "3", "--prime", "T^2+1", "-n", "3", "-m", "1"], capsys)
    assert code == 0
    assert out == "T\n"
    code, out, _ = run(["binom", "-p", "3", "-n", "3", "-m", "1", "--exact"], capsys)
    assert code == 0
    assert out == "T^3+2*T\n"
    code, out, _ = run(["binom", "-p", "3", "--prime", "T^2+1", "-n", "1", "-m", "2"], capsys)
    assert out == "0\n"


def test_factorial_command(capsys):
    code, out, _ = run(["factorial", "-p", "3", "-n", "4"], capsys)
    assert code == 0
    assert out == "T^3+2*T\n"
    code, out, _ = run(["factorial", "-p", "3", "--prime", "T^2+1", "-n", "9"], capsys)
    assert out == "0\n"
    code, out, _ = run(
        ["factorial", "-p", "3", "--prime", "T^2+1", "-n", "9", "--exact"], capsys
    )
    assert out != "0\n" and "T" in out


def test_primroot_command(capsys):
    code, out, _ = run(["primroot", "-p", "3", "--prime", "T^2+1"], capsys)
    assert code == 0
    assert out == "T+1\n"
    code, out, _ = run(
        ["primroot", "-p", "3", "--prime", "T^2+1", "--primitive-root", "2*T+1"], capsys
    )
    assert code == 0
    assert out == "2*T+1\n"
    code, _, err = run(
        ["primroot", "-p", "3", "--prime", "T^2+1", "--primitive-root", "2"], capsys
    )
    assert code == 2


def test_irreducible_command(capsys):
    code, out, _ = run(["irreducible", "-p", "3", "--poly", "T^2+1"], capsys)
    assert code == 0 and out == "true\n"
    code, out, _ = run(["irreducible", "-p", "3", "--poly", "T^2+2"], capsys)
    assert code == 0 and out == "false\n"
    code, out, _ = run(["irreducible", "-p", "3", "--degree", "2"], capsys)
    assert code == 0 and out == "T^2+1\n"
    assert run(["irreducible", "-p", "3"], capsys)[0] == 2
    assert run(["irreducible", "-p", "3", "--poly", "T", "--degree", "1"], capsys)[0] == 2


def test_installed_entry_point(tmp_path):
    env = dict(os.environ)
    env.pop("CARLITZ_CACHE_DIR", None)
    proc = subprocess.run(
        [sys.executable, "-m", "carlitz.cli"] + BASE + ["-n", "1811"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == GOLDEN_1811
