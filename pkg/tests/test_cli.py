import io
import json
import subprocess
import sys

import pytest

from spirale import analysis
from spirale.alphabet import EXTENDED, LETTERS
from spirale.cipher import build_stream, decrypt, encrypt, normalize_text
from spirale.cli import main
from spirale.table import build_ciphering_table

from conftest import WORKED_KEYS, WORKED_LONG_KEY, WORKED_STREAM_50_75

KEYS = ",".join(WORKED_KEYS)


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_permute(capsys):
    code, out, _ = run(capsys, "permute", "--key", "NVIKKIH")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "MQGVIYOWRDLUEPKNTJCAXBSZHF"
    assert lines[1].split()[:3] == ["20", "22", "19"]


def test_table_is_library_tsv(capsys):
    code, out, _ = run(capsys, "table", "--keys", "NVIKKIH,CTSQEOU")
    assert code == 0
    assert out == build_ciphering_table(LETTERS, "NVIKKIH", "CTSQEOU").to_tsv()


def test_keystream(capsys):
    code, out, _ = run(capsys, "keystream", "--keys", KEYS, "--length", "75")
    assert code == 0 and out.strip()[49:] == WORKED_STREAM_50_75
    code, out, _ = run(capsys, "keystream", "--keys", KEYS, "--dump-longkey")
    assert out.strip() == WORKED_LONG_KEY


def test_keystream_needs_length(capsys):
    code, _, err = run(capsys, "keystream", "--keys", KEYS)
    assert code == 2 and err.startswith("ERROR UsageError:")


def test_encrypt_decrypt_files(tmp_path, capsys):
    src = tmp_path / "plain.txt"
    src.write_text("We got into Milan early in the morning.\n")
    ct, back = tmp_path / "ct.txt", tmp_path / "back.txt"
    assert run(capsys, "encrypt", "--keys", KEYS, "--in", str(src), "--out", str(ct), "--group", "5")[0] == 0
    expected = encrypt(WORKED_KEYS, LETTERS, normalize_text(LETTERS, src.read_text()))
    assert ct.read_text().replace(" ", "").strip() == "".join(expected)
    assert run(capsys, "decrypt", "--keys", KEYS, "--in", str(ct), "--out", str(back))[0] == 0
    assert back.read_text() == "WEGOTINTOMILANEARLYINTHEMORNING\n"


def test_stdin_stdout(capsys, monkeypatch):
    code, out, _ = run(capsys, "encrypt", "--keys", KEYS, stdin="spirale", monkeypatch=monkeypatch)
    assert code == 0 and out == "".join(encrypt(WORKED_KEYS, LETTERS, "SPIRALE")) + "\n"


def test_extended_alphabet_keeps_spaces(capsys, monkeypatch):
    code, out, _ = run(capsys, "encrypt", "--alphabet", "extended", "--keys", "AB,CD,EF,GH",
                       stdin="PAY 100 $", monkeypatch=monkeypatch)
    assert code == 0
    assert decrypt("AB,CD,EF,GH", EXTENDED, out.rstrip("\n")) == list("PAY 100 $")


def test_alphabet_from_environment(capsys, monkeypatch, tmp_path):
    path = tmp_path / "abc.txt"
    path.write_text("ABCDE\n")
    monkeypatch.setenv("SPIRALE_ALPHABET", str(path))
    code, out, _ = run(capsys, "permute", "--key", "C")
    assert code == 0 and len(out.splitlines()[0]) == 5


def test_derive_keys(tmp_path, capsys):
    path = tmp_path / "extracts.txt"
    path.write_text("wegotin\ndedusin\nsaidthi\nhisneck\n")
    assert run(capsys, "derive-keys", "--extracts", str(path))[1] == "nnikiih ctsteou dngdise eaiwdsh\n"
    assert run(capsys, "derive-keys", "--extracts", str(path), "--correct")[1] == \
        "NVIKKIH CTSQEOU DNGDKSZ EAIWDSH\n"


def test_analyze_modes(tmp_path, capsys):
    path = tmp_path / "c.txt"
    text = analysis.load_challenge(2)
    path.write_text(text)
    tokens = list(text)
    assert float(run(capsys, "analyze", "--mode", "ic", "--in", str(path))[1]) == \
        pytest.approx(analysis.index_of_coincidence(tokens), abs=1e-6)
    out = run(capsys, "analyze", "--mode", "chi2", "--in", str(path))[1]
    assert float(out) == pytest.approx(
        analysis.chi_square_uniform(analysis.frequency_histogram(LETTERS, tokens)), abs=1e-6)
    freq = run(capsys, "analyze", "--mode", "freq", "--in", str(path))[1].splitlines()
    assert len(freq) == 26 and sum(int(x.split("\t")[1]) for x in freq) == len(tokens)
    out = run(capsys, "analyze", "--mode", "autocorr", "--lag", "3", "--in", str(path))[1]
    assert float(out) == pytest.approx(analysis.autocorrelation_coincidence(tokens, 3), abs=1e-6)
    rows = [json.loads(x) for x in run(capsys, "analyze", "--mode", "ngrams", "--in", str(path))[1].splitlines()]
    assert rows == sorted(rows, key=lambda r: (r["positions"][0], r["ngram"]))
    assert all(len(r["positions"]) > 1 for r in rows)


def test_analyze_errprop(capsys):
    code, out, _ = run(capsys, "analyze", "--mode", "errprop", "--keys", KEYS, "--flip", "3", "--horizon", "120")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "k=49 d=24 flip=3 horizon=120"
    _, gen = build_stream(WORKED_KEYS, LETTERS)
    assert lines[1].split()[1:] == [str(p) for p in sorted(analysis.error_propagation_profile(gen, 3, 120))]


@pytest.mark.parametrize("argv, code, tag", [
    (["permute"], 2, "UsageError"),
    (["bogus"], 2, "UsageError"),
    (["keystream", "--keys", "A,B,C"], 2, "UsageError"),
    (["permute", "--key", "ab1"], 1, "NotInAlphabet"),
    (["keystream", "--keys", "AB,C,D,E", "--length", "3"], 1, "KeyLengthMismatch"),
    (["keystream", "--keys", KEYS, "--length", "3", "--lag", "0"], 1, "InvalidLag"),
    (["encrypt", "--keys", KEYS, "--in", "/nonexistent/x"], 1, "FileNotFoundError"),
    (["analyze", "--mode", "errprop"], 2, "UsageError"),
])
def test_errors(capsys, argv, code, tag):
    got, out, err = run(capsys, *argv)
    assert got == code and out == ""
    assert err.splitlines()[-1].startswith(f"ERROR {tag}:")


def test_empty_plaintext(capsys, monkeypatch):
    code, _, err = run(capsys, "encrypt", "--keys", KEYS, stdin="123 ...", monkeypatch=monkeypatch)
    assert code == 1 and err.startswith("ERROR ResultEmpty:")


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spirale.cli", "permute", "--key", "BHMAY"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("YQDCZWNVUK")
