import io
import random
import subprocess
import sys

import pytest

import exactla.charpoly as cpm
from exactla.charpoly import CharPoly
from exactla.cli import main
from exactla.errors import FieldMismatch, ParseError
from exactla.field import GF, Q
from exactla.matrix import identity, scale
from exactla.poly import Poly
from exactla.sampling import random_matrix
from exactla.serialize import format_matrix, parse_matrix

from conftest import M


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def test_parse_examples():
    assert parse_matrix(b"2 2\n1 0\n0 1", "plain", Q) == identity(Q, 2)
    from fractions import Fraction
    assert parse_matrix(b"1 2\n1/2 -3").data == ((Fraction(1, 2), Fraction(-3)),)
    with pytest.raises(ParseError, match="line 3"):
        parse_matrix(b"2 2\n1 0\n0")
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix(b"two 2\n")
    with pytest.raises(ParseError, match="column 2"):
        parse_matrix(b"1 2\n1 x\n")


def test_json_field_mismatch():
    text = format_matrix(identity(GF(5), 2), "json")
    assert parse_matrix(text, "json") == identity(GF(5), 2)
    with pytest.raises(FieldMismatch):
        parse_matrix(text, "json", GF(7))


@pytest.mark.parametrize("fmt", ["plain", "json"])
def test_round_trip(fmt):
    rng = random.Random(23)
    for F in (Q, GF(2), GF(101)):
        for _ in range(50):
            A = random_matrix(F, rng.randint(1, 5), rng.randint(1, 5), rng)
            if F == Q and rng.random() < 0.5:
                A = scale(Q.parse("3/7"), A)
            assert parse_matrix(format_matrix(A, fmt).encode(), fmt, F) == A


def test_compute_examples():
    assert run(["compute", "charpoly", "--alg", "berkowitz"], "2 2\n2 1\n0 3\n") == (0, "[6, -5, 1]\n", "")
    assert run(["compute", "det"], "3 3\n1 0 0\n0 1 0\n0 0 1\n")[:2] == (0, "1\n")
    code, out, err = run(["compute", "charpoly", "--alg", "csanky", "--field", "gf:2"], "2 2\n1 0\n1 1\n")
    assert code == 2 and "CharacteristicTooSmall" in err and out == ""


def test_compute_all_and_inverse():
    code, out, _ = run(["compute", "inv", "--alg", "all"], "2 2\n2 0\n0 4\n")
    assert code == 0 and out == "2 2\n1/2 0\n0 1/4\n"
    code, _, err = run(["compute", "inv"], "2 2\n1 2\n2 4\n")
    assert code == 2 and "Singular" in err
    code, out, _ = run(["compute", "adj", "--format", "json"],
                       '{"field": "Q", "rows": 2, "cols": 2, "entries": [[1, 2], [3, 4]]}')
    assert code == 0 and parse_matrix(out, "json") == M([[4, -2], [-3, 1]])
    assert run(["compute", "charpoly", "--field", "gf:2", "--alg", "all"], "2 2\n1 1\n0 1\n")[:2] == (0, "[1, 0, 1]\n")


def test_usage_errors():
    assert run(["compute", "det"], "2 2\n1 0\n0\n")[0] == 2
    assert run(["compute", "det"], "1 2\n1 2\n")[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["verify", "--field", "gf:4"])[0] == 2
    assert run(["compute", "det", "--in", "/nonexistent/file"])[0] == 2
    assert run(["bench", "--sizes", "a,b"])[0] == 2


def test_in_flag(tmp_path):
    p = tmp_path / "a.txt"
    p.write_text("2 2\n2 1\n0 3\n")
    assert run(["compute", "charpoly", "--in", str(p)])[:2] == (0, "[6, -5, 1]\n")


def test_witness_examples():
    code, out, _ = run(["witness", "invzero"], "2 2\n0 0\n0 0\n")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "ZeroDivisor" and lines[1:4] == ["2 2", "1 0", "0 1"]
    assert "A*B = 0 verified" in lines[-1]
    code, out, _ = run(["witness", "annihilator"], "2 2\n1 0\n0 2\n")
    assert code == 0 and out.splitlines() == ["[2, -3, 1]", "p(A) = 0 verified"]
    code, out, _ = run(["witness", "krylov", "--index", "2"], "2 2\n0 1\n0 0\n")
    assert code == 0 and out.splitlines()[0] == "k=2, g=[0, 0, 1]"
    code, out, _ = run(["witness", "powers", "--m", "3"], "2 2\n0 1\n0 0\n")
    assert code == 0 and out.splitlines()[-1].endswith("verified")
    assert "A^2:\n2 2\n0 0\n0 0" in out


def test_witness_steinitz(tmp_path):
    e = tmp_path / "e.txt"
    e.write_text("2 1\n1\n1\n")
    code, out, _ = run(["witness", "steinitz", "--other", str(e)], "2 2\n1 0\n0 1\n")
    assert code == 0 and out.splitlines()[0] == "F = {1}"
    assert run(["witness", "steinitz"], "2 2\n1 0\n0 1\n")[0] == 2
    e.write_text("2 1\n0\n0\n")
    code, _, err = run(["witness", "steinitz", "--other", str(e)], "2 2\n1 0\n0 1\n")
    assert code == 2 and "NotIndependent" in err


def test_witness_failing_check_exits_1(monkeypatch):
    import exactla.cli as cli
    monkeypatch.setattr(cli, "annihilating_poly", lambda A: Poly(A.field, [1, 1]))
    code, out, err = run(["witness", "annihilator"], "2 2\n1 0\n0 2\n")
    assert code == 1 and "verified" not in out and "witness failed" in err


def test_verify_passes_and_is_deterministic():
    first = run(["verify", "--seed", "1", "--count", "20"])
    second = run(["verify", "--seed", "1", "--count", "20"])
    assert first == second
    code, out, _ = first
    assert code == 0
    assert out.splitlines()[-1] == "summary: 18 passed, 0 failed, 0 skipped"


def test_verify_gf2_skips_csanky():
    code, out, _ = run(["verify", "--field", "gf:2", "--count", "10"])
    assert code == 0
    lines = out.splitlines()
    skipped = [ln for ln in lines if ln.startswith("SKIPPED")]
    assert skipped and all("csanky" in ln for ln in skipped)
    assert all(ln.startswith("PASS") for ln in lines if "berkowitz" in ln)


def test_verify_mutation_hook(monkeypatch):
    real = cpm.berkowitz

    def corrupted(A, mode="sequential", parallel=False):
        cp = real(A, mode, parallel)
        if A.rows < 2:
            return cp
        cs = list(cp.coeffs)
        cs[0] = cs[0] + A.field.one
        return CharPoly(Poly(A.field, cs), cp.n, "berkowitz")

    monkeypatch.setattr(cpm, "berkowitz", corrupted)
    code, out, _ = run(["verify", "--count", "20", "--alg", "berkowitz"])
    assert code == 1
    assert "FAIL cayley_hamilton[berkowitz]" in out
    dump = next(ln for ln in out.splitlines() if ln.startswith("  counterexample: "))
    A = parse_matrix(dump.split(": ", 1)[1], "json")
    assert A.rows >= 2


def test_verify_subprocess_bytes():
    cmd = [sys.executable, "-m", "exactla", "verify", "--seed", "1", "--count", "5"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.startswith(b"verify field=Q")


def test_bench_rows():
    code, out, _ = run(["bench", "--sizes", "4,8,16"])
    assert code == 0
    rows = [ln.split(",") for ln in out.splitlines()]
    assert rows[0] == ["algorithm", "n", "mode", "wall_time_s", "scalar_mults", "status"]
    assert len(rows) - 1 >= 6
    assert ["oracle", "16", "sequential", "", "", "skipped: TooLarge"] in rows
    assert any(r[0] == "berkowitz" and r[2] == "tree" and r[5] == "ok" for r in rows)


def test_bench_oracle_large_and_parallel():
    code, out, _ = run(["bench", "--sizes", "64", "--alg", "oracle"])
    assert code == 0 and "oracle,64,sequential,,,skipped: TooLarge" in out
    assert run(["bench", "--sizes", "5", "--parallel"])[0] == 0


def test_bench_gf_small_characteristic():
    code, out, _ = run(["bench", "--sizes", "4", "--field", "gf:3"])
    assert code == 0 and "csanky,4,tree,,,skipped: CharacteristicTooSmall" in out


def test_bench_mode_mismatch_exits_1(monkeypatch):
    real = cpm.berkowitz

    def flaky(A, mode="sequential", parallel=False):
        cp = real(A, mode, parallel)
        if mode == "tree":
            cs = list(cp.coeffs)
            cs[0] = cs[0] + A.field.one
            return CharPoly(Poly(A.field, cs), cp.n, "berkowitz")
        return cp

    monkeypatch.setattr(cpm, "berkowitz", flaky)
    code, _, err = run(["bench", "--sizes", "3", "--alg", "berkowitz"])
    assert code == 1 and "mode mismatch" in err


def test_parallel_compute_matches():
    rng = random.Random(29)
    for _ in range(10):
        n = rng.randint(1, 16)
        text = format_matrix(random_matrix(Q, n, n, rng))
        seq = run(["compute", "charpoly", "--alg", "berkowitz"], text)
        par = run(["compute", "charpoly", "--alg", "berkowitz", "--parallel"], text)
        assert seq == par and seq[0] == 0
