import csv
import re
import subprocess
import sys

import pytest

from dragon_crypto.cli import main
from dragon_crypto.codec import read_key


@pytest.fixture
def keyfile(tmp_path):
    path = tmp_path / "key.txt"
    assert main(["keygen", "--bits", "24", "--seed", "7", "-o", str(path)]) == 0
    return path


def test_keygen_writes_valid_key(keyfile):
    key = read_key(keyfile.read_text())
    assert key.d == 100 and key.mode == "per-char"
    assert key.p.bit_length() == 24


def test_keygen_seed_is_reproducible(tmp_path, keyfile):
    other = tmp_path / "again.txt"
    main(["keygen", "--bits", "24", "--seed", "7", "-o", str(other)])
    assert other.read_text() == keyfile.read_text()


def test_keygen_too_small(tmp_path, capsys):
    assert main(["keygen", "--bits", "8", "-o", str(tmp_path / "k")]) == 3
    assert "bits" in capsys.readouterr().err


def test_encrypt_decrypt_files(tmp_path, keyfile):
    plain = tmp_path / "plain.txt"
    plain.write_text("Dragon curves fold to the left!\n", encoding="utf-8")
    ct, out = tmp_path / "ct.txt", tmp_path / "out.txt"
    assert main(["encrypt", "-k", str(keyfile), "-i", str(plain), "-o", str(ct)]) == 0
    body = ct.read_text()
    assert body.endswith("\n") and body.count("\n") == 1
    assert main(["decrypt", "-k", str(keyfile), "-i", str(ct), "-o", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == plain.read_text(encoding="utf-8")


def test_empty_plaintext(tmp_path, keyfile):
    plain = tmp_path / "empty.txt"
    plain.write_text("")
    ct = tmp_path / "ct.txt"
    main(["encrypt", "-k", str(keyfile), "-i", str(plain), "-o", str(ct)])
    assert ct.read_text() == "XY\n"


def test_exit_codes(tmp_path, keyfile):
    plain = tmp_path / "p.txt"
    plain.write_text("secret")
    ct = tmp_path / "ct.txt"
    main(["encrypt", "-k", str(keyfile), "-i", str(plain), "-o", str(ct)])

    truncated = tmp_path / "trunc.txt"
    truncated.write_text(ct.read_text()[:40])
    assert main(["decrypt", "-k", str(keyfile), "-i", str(truncated)]) == 4

    wrong = tmp_path / "wrong.txt"
    text = keyfile.read_text()
    angle = int(re.search(r"angle_deg = (\d+)", text).group(1))
    wrong.write_text(text.replace(f"angle_deg = {angle}", f"angle_deg = {(angle + 90) % 360}"))
    assert main(["decrypt", "-k", str(wrong), "-i", str(ct)]) == 5

    bad_key = tmp_path / "bad.txt"
    bad_key.write_text("version = 9\n")
    assert main(["decrypt", "-k", str(bad_key), "-i", str(ct)]) == 3

    nul = tmp_path / "nul.txt"
    nul.write_text("a\x00b")
    assert main(["encrypt", "-k", str(keyfile), "-i", str(nul)]) == 6


def test_turns(capsys):
    main(["turns", "3"])
    assert capsys.readouterr().out == "FLFLFRFLFLFRFRFL\n"
    main(["turns", "--index", "6"])
    assert capsys.readouterr().out == "R\n"
    main(["turns", "--index", str(2**40)])
    assert capsys.readouterr().out == "L\n"


def test_turns_out_of_range():
    assert main(["turns", "27"]) == 3


def test_trace_csv(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["trace", "--size", "1", "--iterations", "1", "--csv", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows == [["x", "y"], ["0", "0"], ["1", "0"], ["1", "1"]]


def test_trace_svg_vertex_count(tmp_path):
    out = tmp_path / "t.svg"
    main(["trace", "--size", "2", "--iterations", "7", "--angle-deg", "30", "--svg", str(out)])
    svg = out.read_text()
    assert svg.count("<polyline") == 1
    points = re.search(r'points="([^"]*)"', svg).group(1).split()
    assert len(points) == 2**7 + 1
    assert all(re.fullmatch(r"-?\d+,-?\d+", p) for p in points)


def test_trace_from_key_and_text(tmp_path, keyfile):
    out = tmp_path / "t.csv"
    key = read_key(keyfile.read_text())
    assert main(["trace", "-k", str(keyfile), "--text", "A", "--iterations", "4", "--csv", str(out)]) == 0
    rows = out.read_text().splitlines()
    assert len(rows) == 1 + 2**4 + 1
    x0, y0 = rows[1].split(",")
    assert "." in x0 and len(x0.split(".")[1]) == key.precision


def test_trace_rejects_large_iteration():
    assert main(["trace", "--size", "1", "--iterations", "27"]) == 3


def test_bench_small(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--min-len", "10", "--max-len", "30", "--step", "10", "--trials", "1", "-o", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "plaintext_length,cycle_seconds"
    assert [int(line.split(",")[0]) for line in lines[1:]] == [10, 20, 30]
    assert all(float(line.split(",")[1]) > 0 for line in lines[1:])


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "dragon_crypto", "turns", "2"], capture_output=True, text=True, check=True
    )
    assert result.stdout == "FLFLFRFL\n"
