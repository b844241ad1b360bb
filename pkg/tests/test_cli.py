import pytest

from revfa.cli import main
from revfa.io import emit, load
from revfa.witnesses import witness


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, k in [("even-or-a", None), ("even-or-a-mrfa", None), ("sigma-star-a", None),
                    ("Lk-srfa", 2), ("Lk-union", 2)]:
        p = tmp_path / f"{name}.rfa"
        p.write_text(emit(witness(name, k).machine))
        out[name] = str(p)
    return out


def test_run(files, capsys):
    assert main(["run", files["even-or-a"], "a"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "accept" and "passes: 3" in out
    assert main(["run", files["even-or-a"], "aaa"]) == 1
    assert "reject_undefined" in capsys.readouterr().out
    assert main(["run", files["even-or-a"], "", "--trace"]) == 0
    assert "p0 @ 0" in capsys.readouterr().out
    assert main(["run", files["Lk-union"], "abab", "--trace"]) == 0
    assert "-- from u1_0" in capsys.readouterr().out


def test_run_bad_symbol(files, capsys):
    assert main(["run", files["even-or-a"], "b"]) == 2
    assert "error:" in capsys.readouterr().err


def test_equiv(files, capsys):
    assert main(["equiv", files["even-or-a"], files["even-or-a-mrfa"], "--exact"]) == 0
    assert capsys.readouterr().out.startswith("equivalent")
    assert main(["equiv", files["even-or-a"], files["even-or-a-mrfa"], "--max-len", "9"]) == 0
    assert main(["equiv", files["Lk-srfa"], files["Lk-union"]]) == 1
    assert "counterexample: ''" in capsys.readouterr().out


def test_pin_check(files, capsys):
    assert main(["pin-check", files["sigma-star-a"]]) == 1
    assert capsys.readouterr().out.strip() == "violation: x='' y='a' z=''"
    assert main(["pin-check", files["Lk-union"], "--reps", "auto"]) == 0
    assert main(["pin-check", files["Lk-union"], "--reps", "0"]) == 2


def test_validate(files, tmp_path, capsys):
    assert main(["validate", files["even-or-a"]]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "valid"
    bad = tmp_path / "bad.rfa"
    bad.write_text("@kind 1rfa\n@alphabet a\n@states s t\n@initial s\n"
                   "@trans a s -> t\n@trans a t -> t\n")
    assert main(["validate", str(bad)]) == 1
    out = capsys.readouterr().out
    assert "V-INJ" in out and "inferred: 1dfa" in out


def test_transform_roundtrip(files, tmp_path, capsys):
    for to in ("mrfa", "three-pass", "dfa", "min-dfa", "one-side"):
        out = tmp_path / f"{to}.rfa"
        assert main(["transform", files["even-or-a"], "--to", to, "-o", str(out)]) == 0
        assert main(["equiv", files["even-or-a"], str(out)]) == 0
    out = tmp_path / "u.rfa"
    assert main(["transform", files["even-or-a-mrfa"], "--to", "unary-srfa", "-o", str(out)]) == 0
    assert load(str(out)).acceptance_mode.value == "both_sides"
    assert main(["transform", files["Lk-union"], "--to", "unary-srfa"]) == 2


def test_enumerate(files, capsys):
    assert main(["enumerate", files["even-or-a"], "--max-len", "4"]) == 0
    assert capsys.readouterr().out.split() == ["ε", "a", "aa", "aaaa"]


def test_witness_and_dot(tmp_path, capsys):
    assert main(["witness", "Lk-union", "--k", "3"]) == 0
    assert capsys.readouterr().out.startswith("@kind mrfa")
    out = tmp_path / "w.rfa"
    assert main(["witness", "even-or-a", "-o", str(out)]) == 0
    assert main(["dot", str(out)]) == 0
    first = capsys.readouterr().out
    assert main(["dot", str(out)]) == 0
    assert capsys.readouterr().out == first
    assert main(["witness", "Lk-union", "--k", "9"]) == 2


def test_search(files, capsys):
    assert main(["search", "--class", "1rfa", "--max-states", "4", "--alphabet", "a",
                 "--target", files["even-or-a"], "--max-len", "10"]) == 1
    out = capsys.readouterr().out
    assert "result: exhausted" in out and "evidence: bounded" in out
    assert main(["search", "--class", "mrfa", "--max-states", "4", "--alphabet", "a",
                 "--target", files["even-or-a"], "--max-len", "10", "--max-initials", "2"]) == 0
    assert "@kind mrfa" in capsys.readouterr().out
    assert main(["search", "--class", "mrfa", "--max-states", "9", "--alphabet", "ab",
                 "--target", files["Lk-union"], "--max-len", "8"]) == 2
    assert main(["search", "--class", "1rfa", "--max-states", "2", "--alphabet", "ab",
                 "--target", files["even-or-a"], "--max-len", "3"]) == 2


def test_usage_errors(files):
    assert main(["transform", files["even-or-a"], "--to", "nowhere"]) == 2
    assert main([]) == 2
    assert main(["--help"]) == 0
    assert main(["run", "/nonexistent/file", "a"]) == 2
