import pytest

from codimlab.algfile import data_path
from codimlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_cache(monkeypatch):
    monkeypatch.delenv("CODIMLAB_CACHE", raising=False)


@pytest.fixture
def mutated(tmp_path):
    text = data_path("paper_L.alg").read_text().replace("bracket u0 t0 = 2*t0", "bracket u0 t0 = 3*t0")
    p = tmp_path / "bad.alg"
    p.write_text(text)
    return str(p)


def rows(out):
    lines = out.strip().splitlines()
    assert lines[0].startswith("# ")
    return [l.split("\t") for l in lines[1:]]


def test_check(capsys, mutated):
    code, out, _ = run(capsys, "check")
    assert code == 0 and rows(out) == []
    code, out, _ = run(capsys, "check", "--algebra", mutated)
    assert code == 1 and rows(out)


def test_codim(capsys):
    code, out, _ = run(capsys, "codim", "--n", "4", "--jobs", "1")
    assert code == 0
    assert [r[1] for r in rows(out)] == ["2", "4", "16", "89"]
    assert out.startswith("# n\tc_n\tmethod\tcertified\n")


def test_codim_sl2(capsys):
    code, out, _ = run(capsys, "codim", "--n", "5", "--algebra", str(data_path("sl2.alg")))
    assert code == 0 and [r[1] for r in rows(out)] == ["1", "1", "2", "6", "14"]


def test_cochar(capsys):
    code, out, _ = run(capsys, "cochar", "--n", "3", "--rank", "modular")
    assert code == 0
    assert {r[0]: r[1] for r in rows(out)} == {"3": "2", "2,1": "6", "1,1,1": "2"}


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--n", "3")
    assert code == 0 and rows(out)[2][1] == "16"


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--lambda", "2,2,2,1,1")
    assert code == 0
    kv = dict(rows(out))
    assert kv["case"] == "f''" and kv["value"] == "-512,0,0,0,0"
    code, out2, _ = run(capsys, "witness", "--beta", "1,0,1,0,0,0,0,0")
    assert code == 0 and out2 == out
    code, out, _ = run(capsys, "witness", "--lambda", "2,1,1,1,1", "--rows")
    assert code == 0 and len(rows(out)) == 120


def test_witness_errors(capsys):
    assert run(capsys, "witness")[0] == 2
    assert run(capsys, "witness", "--lambda", "1,1,1,1")[0] == 2
    assert run(capsys, "witness", "--beta", "0,0,0,0,0,0,0,0")[0] == 2
    assert run(capsys, "witness", "--lambda", "x")[0] == 2


def test_ado(capsys):
    code, out, _ = run(capsys, "ado")
    assert code == 0
    r = {row[0]: row for row in rows(out)}
    assert r["u0"][2] == "0<-0;0<-1" and r["uu"][2] == "0<-0;1<-1"


def test_regev(capsys):
    code, out, _ = run(capsys, "regev", "--t", "2", "--random", "3", "--seed", "4")
    assert code == 0 and len(rows(out)) == 3
    assert run(capsys, "regev", "--t", "3", "--sweep")[0] == 2
    assert run(capsys, "regev", "--t", "2")[0] == 2


def test_usage_errors(capsys, tmp_path):
    assert run(capsys)[0] == 2
    assert run(capsys, "codim")[0] == 2
    assert run(capsys, "codim", "--n", "0")[0] == 2
    assert run(capsys, "codim", "--n", "9")[0] == 2
    assert run(capsys, "codim", "--n", "2", "--rank", "fast")[0] == 2
    bad = tmp_path / "x.alg"
    bad.write_text("semigroup two\n")
    code, _, err = run(capsys, "codim", "--n", "2", "--algebra", str(bad))
    assert code == 2 and "error" in err
    assert run(capsys, "codim", "--n", "2", "--algebra", str(tmp_path / "missing.alg"))[0] == 2


def test_invalid_algebra_is_a_math_failure(capsys, mutated):
    code, _, err = run(capsys, "codim", "--n", "2", "--algebra", mutated)
    assert code == 1 and "invalid algebra" in err


def test_deterministic_output(capsys):
    a = run(capsys, "cochar", "--n", "4", "--seed", "3", "--jobs", "1")
    b = run(capsys, "cochar", "--n", "4", "--seed", "3", "--jobs", "4")
    assert a[:2] == b[:2]


def test_cache(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("CODIMLAB_CACHE", str(tmp_path / "cache"))
    cold = run(capsys, "codim", "--n", "5")
    assert len(list((tmp_path / "cache").glob("*.json"))) == 1
    warm = run(capsys, "codim", "--n", "5")
    assert cold == warm
    run(capsys, "codim", "--n", "5", "--seed", "1")
    assert len(list((tmp_path / "cache").glob("*.json"))) == 2


def test_unusable_cache_dir(capsys, monkeypatch, tmp_path):
    f = tmp_path / "file"
    f.write_text("")
    monkeypatch.setenv("CODIMLAB_CACHE", str(f))
    assert run(capsys, "codim", "--n", "2")[0] == 0


def test_verify_quick_and_mutation(capsys, mutated):
    code, out, _ = run(capsys, "verify-paper", "--level", "quick")
    pristine = {r[0]: r[1] for r in rows(out)}
    # only the unattainable spin claim is red on the shipped algebra
    assert code == 1 and [k for k, v in pristine.items() if v == "FAIL"] == ["structure.spins_L"]
    code, out, _ = run(capsys, "verify-paper", "--level", "quick", "--algebra", mutated)
    broken = {r[0]: r[1] for r in rows(out)}
    assert code == 1
    newly = [k for k, v in broken.items() if v == "FAIL" and pristine[k] == "PASS"]
    assert "algebra.valid" in newly
