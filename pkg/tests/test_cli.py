import csv
import random

import numpy as np
import pytest

from rsw.cli import main
from rsw.code import GrsCode
from rsw.gf import Field


@pytest.fixture(scope="module")
def rs63():
    return GrsCode.reed_solomon(Field(6), 63, 31)


def write_word_file(path, m, n, k, word, eta=None):
    lines = [f"{m} {n} {k}", " ".join(str(s) for s in word)]
    if eta is not None:
        lines.append(" ".join(f"{v:.6f}" for v in eta))
    path.write_text("\n".join(lines) + "\n")


def plant(code, rng, weight):
    info = [rng.randrange(code.field.q) for _ in range(code.k)]
    c = code.encode(info)
    pos = rng.sample(range(code.n), weight)
    r = list(c)
    for p in pos:
        r[p] ^= rng.randrange(1, code.field.q)
    return c, r, pos


def test_decode_codeword_exit_zero(tmp_path, capsys, rs63):
    c = rs63.encode([5] * 31)
    f = tmp_path / "word.txt"
    write_word_file(f, 6, 63, 31, c)
    assert main(["decode", str(f)]) == 0
    out = capsys.readouterr().out
    assert "outcome: unique" in out


def test_decode_hard_list(tmp_path, capsys, rs63):
    rng = random.Random(1)
    c, r, _ = plant(rs63, rng, 19)
    f = tmp_path / "word.txt"
    write_word_file(f, 6, 63, 31, r)
    rc = main(["decode", str(f), "--tau", "19"])
    out = capsys.readouterr().out
    assert rc == 0
    assert " ".join(str(s) for s in c) in out


def test_decode_reduced_with_eta(tmp_path, capsys, rs63):
    rng = random.Random(2)
    c, r, pos = plant(rs63, rng, 17)
    eta = 1.0 + np.arange(63) / 63.0
    for p in pos:
        eta[p] = 0.0
    f = tmp_path / "word.txt"
    write_word_file(f, 6, 63, 31, r, eta)
    rc = main(["decode", str(f), "--tau", "19", "--L", "25"])
    out = capsys.readouterr().out
    assert rc == 0
    assert " ".join(str(s) for s in c) in out


def test_decode_fail_exit_one(tmp_path, rs63):
    rng = random.Random(3)
    c, r, pos = plant(rs63, rng, 19)
    eta = 1.0 + np.arange(63) / 63.0
    for p in pos:
        eta[p] = 2.0  # errors ranked most reliable: window misses them
    f = tmp_path / "word.txt"
    write_word_file(f, 6, 63, 31, r, eta)
    assert main(["decode", str(f), "--tau", "19", "--L", "15"]) == 1


def test_decode_garbage_exit_two(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("6 63\n1 2 3\n")
    assert main(["decode", str(f)]) == 2
    assert "line 1" in capsys.readouterr().err

    f2 = tmp_path / "bad2.txt"
    f2.write_text("6 63 31\n" + " ".join(["1"] * 62) + "\n")
    assert main(["decode", str(f2)]) == 2

    f3 = tmp_path / "bad3.txt"
    f3.write_text("6 63 31\n" + " ".join(["99"] * 63) + "\n")
    assert main(["decode", str(f3)]) == 2


def test_decode_reduced_requires_window(tmp_path, rs63):
    c = rs63.encode([1] * 31)
    f = tmp_path / "word.txt"
    write_word_file(f, 6, 63, 31, c, np.ones(63))
    assert main(["decode", str(f)]) == 2


def test_sweep_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    rc = main([
        "sweep", "--snr-from", "5.5", "--snr-to", "5.5", "--trials", "30",
        "--L", "15", "--L", "25", "--seed", "4", "--threads", "1",
        "--out", str(out),
    ])
    assert rc == 0
    rows = list(csv.DictReader(open(out)))
    assert len(rows) == 2
    assert {r["L"] for r in rows} == {"15", "25"}
    assert all(int(r["failures_classical"]) <= 30 for r in rows)


def test_sweep_rejects_zero_trials(tmp_path):
    with pytest.raises(SystemExit):
        main(["sweep", "--trials"])  # argparse error
    rc = main(["sweep", "--trials", "0", "--snr-from", "5.5", "--snr-to", "5.5"])
    assert rc == 2


def test_catch_csv(tmp_path):
    out = tmp_path / "catch.csv"
    rc = main([
        "catch", "--snr-from", "5.0", "--snr-to", "5.0", "--trials", "200",
        "--L", "10", "--L", "15", "--seed", "5", "--threads", "1",
        "--out", str(out),
    ])
    assert rc == 0
    rows = list(csv.DictReader(open(out)))
    assert [r["L"] for r in rows] == ["10", "15"]
    b10 = float(rows[0]["bound"])
    assert b10 == pytest.approx((10 * 5) ** 0.5, abs=1e-9)


def test_tau_l_override_flag(tmp_path):
    out = tmp_path / "sweep.csv"
    rc = main([
        "sweep", "--snr-from", "6.0", "--snr-to", "6.0", "--trials", "10",
        "--L", "25", "--tau-l-override", "13", "--seed", "6", "--out", str(out),
    ])
    assert rc == 0
    rows = list(csv.DictReader(open(out)))
    assert rows[0]["tau_L"] == "13"


def test_tau_l_override_below_existence_bound_errors(tmp_path):
    # forcing tau_L = 12 at L = 45 violates the existence bound and is
    # rejected with an explanatory error instead of silently running
    rc = main([
        "sweep", "--snr-from", "6.0", "--snr-to", "6.0", "--trials", "5",
        "--L", "45", "--tau-l-override", "12", "--seed", "7",
    ])
    assert rc == 2
