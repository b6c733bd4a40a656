import random
import subprocess
import sys

import pytest

from dnacodes.cli import main

FLAGS = ["--n", "100", "--ell", "4", "--eps", "1/10"]


def run(*args):
    return subprocess.run([sys.executable, "-m", "dnacodes", *args], capture_output=True)


@pytest.fixture
def payload(tmp_path):
    path = tmp_path / "in.bin"
    path.write_bytes(random.Random(3).randbytes(2000))
    return path


@pytest.mark.parametrize("protect,kind", [("none", None), ("indel", "indel"), ("edit", "edit"), ("edit", "S")])
def test_encode_corrupt_decode(tmp_path, payload, protect, kind):
    dna, out = tmp_path / "s.dna", tmp_path / "out.bin"
    assert main(["encode", str(payload), "-o", str(dna), "--protect", protect, *FLAGS]) == 0
    lines = dna.read_text().splitlines()
    assert lines and set("".join(lines)) <= set("ACGT")
    if kind:
        bad = tmp_path / "bad.dna"
        assert main(["corrupt", str(dna), "-o", str(bad), "--kind", kind, "--seed", "5"]) == 0
        assert bad.read_text() != dna.read_text()
        dna = bad
    assert main(["decode", str(dna), "-o", str(out), "--protect", protect, *FLAGS]) == 0
    assert out.read_bytes() == payload.read_bytes()


def test_deterministic_output(tmp_path, payload):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["encode", str(payload), "-o", str(a), "--protect", "edit", *FLAGS])
    main(["encode", str(payload), "-o", str(b), "--protect", "edit", *FLAGS])
    assert a.read_bytes() == b.read_bytes()
    c, d = tmp_path / "c", tmp_path / "d"
    main(["corrupt", str(a), "-o", str(c), "--seed", "9"])
    main(["corrupt", str(a), "-o", str(d), "--seed", "9"])
    assert c.read_bytes() == d.read_bytes()


def test_empty_payload(tmp_path):
    src, dna, out = tmp_path / "e", tmp_path / "e.dna", tmp_path / "e.out"
    src.write_bytes(b"")
    assert main(["encode", str(src), "-o", str(dna)]) == 0
    assert dna.read_bytes() == b""
    assert main(["decode", str(dna), "-o", str(out)]) == 0
    assert out.read_bytes() == b""


def test_hex_format(tmp_path):
    src, dna, out = tmp_path / "h.txt", tmp_path / "h.dna", tmp_path / "o.txt"
    src.write_text("deadbeef00\n")
    assert main(["encode", str(src), "-o", str(dna), "--format", "hex", "--gc-mode", "d"]) == 0
    assert main(["decode", str(dna), "-o", str(out), "--format", "hex", "--gc-mode", "d"]) == 0
    assert out.read_text() == "deadbeef00\n"


def test_exit_codes(tmp_path, payload):
    assert run("encode", str(payload), "--n", "7").returncode == 1
    assert run("encode").returncode == 1
    assert run("bogus").returncode == 1
    assert run("encode", str(payload), "--eps", "abc").returncode == 1
    assert run("encode", str(tmp_path / "missing")).returncode == 1
    bad = tmp_path / "bad.dna"
    bad.write_text("ACGX\n")
    r = run("decode", str(bad))
    assert r.returncode == 2 and b"invalid nucleotide" in r.stderr
    bad.write_text("ACGT\n")
    assert run("decode", str(bad)).returncode == 2


def test_corrupt_reports_seed(tmp_path, payload):
    dna = tmp_path / "s.dna"
    main(["encode", str(payload), "-o", str(dna)])
    r = run("corrupt", str(dna), "--seed", "42", "-o", str(tmp_path / "x"))
    assert r.returncode == 0 and b"seed=42" in r.stderr


def test_tables(capsys):
    assert main(["tables"]) == 0
    out = capsys.readouterr().out
    for value in ("13", "50", "195", "772", "11", "39", "148", "581", "1.99542", "1.94"):
        assert value in out
    assert main(["tables", "--csv"]) == 0
    out = capsys.readouterr().out
    assert "3,50,34,39" in out


def test_verify_single_suite(capsys):
    assert main(["verify", "--suite", "rll", "--fast"]) == 0
    out = capsys.readouterr().out
    assert out.count("[PASS]") == 3 and "3/3" in out
