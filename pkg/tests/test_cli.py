import json

import pytest

from gtesunion.cli import EXIT_INPUT, EXIT_NO, EXIT_YES, main
from gtesunion.problem import corpus_text


@pytest.fixture
def ex(tmp_path):
    def write(name, text=None):
        path = tmp_path / f"{name}.gtes"
        path.write_text(text if text is not None else corpus_text(name))
        return str(path)
    return write


def test_decide_yes_and_no(ex, capsys):
    assert main(["decide", ex("ex1")]) == EXIT_YES
    assert "yes (Unary)" in capsys.readouterr().out
    assert main(["decide", ex("ex2")]) == EXIT_NO
    assert "no (Unary)" in capsys.readouterr().out


def test_json_report(ex, capsys):
    assert main(["decide", ex("ex5"), "--json", "--oracle-check", "--max-height", "2"]) == EXIT_NO
    r = json.loads(capsys.readouterr().out)
    assert r["verdict"] is False and r["main_case"] == "OneTotalHigherArity"
    assert r["which_total"] == "E" and r["total"] == {"E": True, "F": False, "union": True}
    assert r["oracle"]["counterexample"] == ["#", "$"] and r["oracle"]["agrees"]
    assert r["witness"] is None
    assert set(r) == {"verdict", "main_case", "which_total", "n", "classes", "total",
                      "diagnostics", "witness", "oracle", "millis"}


def test_explain_and_dump(ex, capsys):
    assert main(["decide", ex("ex6"), "--explain", "--dump-aux"]) == EXIT_YES
    out = capsys.readouterr().out
    assert "total E=True F=False" in out
    assert "$ 1 0 1 0 -> #,$" in out


def test_input_errors(ex, tmp_path, capsys):
    assert main(["decide", str(tmp_path / "missing.gtes")]) == EXIT_INPUT
    assert main(["decide", ex("bad", "signature\n f 1\n")]) == EXIT_INPUT
    assert main(["decide", ex("bad2", "signature\n # 0\nequations E\n g(#) = #\n")]) == EXIT_INPUT
    assert "line 4" in capsys.readouterr().err


def test_duplicate_warning(ex, capsys):
    text = "signature\n # 0\n f 1\nequations E\n f(#) = #\n f(#) = #\n"
    assert main(["decide", ex("dup", text)]) == EXIT_YES
    assert "1 duplicate" in capsys.readouterr().err


def test_corpus(capsys):
    assert main(["corpus", "--oracle-check", "--max-height", "2"]) == 0
    out = capsys.readouterr().out
    assert "8/8 match" in out and "0 oracle disagreements" in out


def test_fuzz(capsys):
    assert main(["fuzz", "--seed", "5", "--count", "10"]) == 0
    assert "10 ok" in capsys.readouterr().out


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "gtesunion", "corpus"], capture_output=True, text=True)
    assert r.returncode == 0 and "8/8 match" in r.stdout
