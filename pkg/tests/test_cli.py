import json
import pathlib

import pytest

from qhom.cli import main
from qhom.cli.parser import Script, format_script, parse
from qhom.cli.runner import Options, Runner
from qhom.errors import ParseError

SCRIPTS = sorted((pathlib.Path(__file__).parent.parent / "scripts").glob("*.qh"))


def run_text(text, seed=0):
    return Runner(Options(seed=seed)).run(parse(text))


def test_empty_script():
    assert parse("") == Script([])
    assert parse("# only a comment\n") == Script([])
    assert format_script("") == ""


def test_parse_error_position():
    with pytest.raises(ParseError) as err:
        parse("ring R = poly(GF(101), [x, y]);\nmodule M = coker R [[x,,y]];")
    e = err.value
    assert (e.line, e.column) == (2, 24)
    assert "','" in str(e) and "identifier" in str(e)


def test_parse_error_at_end():
    with pytest.raises(ParseError) as err:
        parse("ring R = poly(GF(7), [x])")
    assert "end of input" in str(err.value)


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.name)
def test_fmt_is_idempotent(path):
    text = path.read_text()
    once = format_script(text)
    assert format_script(once) == once
    assert parse(once).format() == parse(text).format()


def test_fmt_normalizes_layout():
    out = format_script("ring R=poly(GF(7),[x,y])/ideal(y*x+x^2);")
    assert out == "ring R = poly(GF(7), [x, y]) / ideal(y*x + x^2);\n"


def test_runner_prints_invariants():
    out = run_text("ring R = poly(GF(101), [x, y, z]) / ideal(y^2, y*z, z^2);\n"
                   "print depth(R), dim(R), gorenstein(R);")
    assert out[1].text == ["depth(R) = 1", "dim(R) = 1", "gorenstein(R) = false"]


def test_runner_coker_module():
    out = run_text("ring R = poly(GF(101), [x, y]);\n"
                   "module M = coker R [[x, y]];\n"
                   "print hilbert(M);\ncheck qpd(M);")
    assert all(o.error is None for o in out)
    assert out[-1].record["status"] == "finite"


def test_runner_reports_unknown_names():
    out = run_text("print depth(R);")
    assert out[0].error and "R" in out[0].error


@pytest.mark.parametrize("path", SCRIPTS, ids=lambda p: p.name)
def test_scripts_run(path, capsys):
    assert main(["run", str(path)]) == 0
    assert capsys.readouterr().out


def test_run_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.qh"
    bad.write_text("ring R = ;")
    assert main(["run", str(bad)]) == 2
    broken = tmp_path / "broken.qh"
    broken.write_text("print depth(S);")
    assert main(["run", str(broken)]) == 1


def test_fmt_check(tmp_path):
    p = tmp_path / "a.qh"
    p.write_text("ring R=poly(QQ,[x]);")
    assert main(["fmt", str(p), "--check"]) == 1
    p.write_text(format_script(p.read_text()))
    assert main(["fmt", str(p), "--check"]) == 0


def test_run_json_is_deterministic(tmp_path):
    script = str(SCRIPTS[0])
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["run", script, "--seed", "3", "--json", str(a)]) == 0
    assert main(["run", script, "--seed", "3", "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    doc = json.loads(a.read_text())
    assert doc["seed"] == 3 and doc["command"] == "run"


def test_json_to_stdout_is_pure(capsys):
    assert main(["run", str(SCRIPTS[0]), "--json", "-"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["command"] == "run"
    assert "depth" in captured.err or "=" in captured.err
