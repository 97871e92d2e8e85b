import json
import subprocess
import sys

import pytest

from maskpipe.benchmarks.corpus import data_path
from maskpipe.cli import main

from helpers import VerilogSim


def run(*args):
    return main([str(a) for a in args])


def test_and2_dom_verilog_check(tmp_path, capsys):
    v = tmp_path / "out.v"
    rc = run("compile", data_path("and2"), "--gadget", "dom", "--emit-verilog", v, "--check")
    rep = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert (rep["total_regs"], rep["latency"], rep["equivalent"]) == (4, 1, True)
    assert rep["recombination"]["correct"]
    assert len(VerilogSim(v.read_text()).flops) == 4


def test_report_file_and_artifacts(tmp_path):
    rep_p, src, cons, dot = (tmp_path / n for n in ("r.json", "b.c", "c.txt", "m.dot"))
    rc = run("compile", data_path("domand_annotated"), "--report", rep_p, "--emit-source", src,
             "--dump-constraints", cons, "--dump-model", dot)
    assert rc == 0
    rep = json.loads(rep_p.read_text())
    assert rep["schema"] == "maskpipe-report" and rep["version"] == 1
    assert (rep["ann_regs"], rep["bal_regs"], rep["total_regs"]) == (2, 2, 4)
    assert rep["total_regs"] == rep["ann_regs"] + rep["bal_regs"]
    assert "runtime_s" in rep
    assert "p1 = reg(a0 * b0);" in src.read_text()
    assert "r(source) - r(sink) <= 1" in cons.read_text().splitlines()
    assert dot.read_text().startswith("digraph")


def test_shipped_name_resolves(capsys):
    assert run("compile", "present_dom_masked.c", "--no-runtime") == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ann_regs"] == 16


def test_naive_mode(capsys):
    assert run("compile", "motivating.c", "--naive", "--check") == 0
    rep = json.loads(capsys.readouterr().out)
    assert (rep["total_regs"], rep["latency"], rep["mode"]) == (12, 2, "naive")


def test_deterministic_report(tmp_path, monkeypatch):
    monkeypatch.setenv("MASKEDHLS_SEED", "7")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert run("compile", "aes.c", "--gadget", "dom", "--check", "--trials", "500", "--no-runtime",
                   "--report", p) == 0
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["seed"] == 7


@pytest.mark.parametrize("text,code", [
    ("int f(bool a, bool *y) { *y = a + a; }", 2),
    ("int f(bool a, bool *y) { *y = reg(~a); }", 0),
])
def test_exit_codes_for_sources(tmp_path, text, code):
    p = tmp_path / "x.c"
    p.write_text(text)
    assert run("compile", p) == code


def test_exit_code_missing_file(tmp_path):
    assert run("compile", tmp_path / "none.c") == 2


def test_exit_code_gadget_on_annotated():
    assert run("compile", data_path("domand_annotated"), "--gadget", "dom") == 3


def test_exit_code_invalid_json(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"name": "g", "inputs": ["a"], "outputs": [],
                             "nodes": [{"id": 0, "kind": "INPUT", "args": [], "name": "a"}]}))
    assert run("compile", p) == 3


def test_exit_code_check_failure(tmp_path, monkeypatch):
    import maskpipe.compiler as comp

    real = comp.check_equivalence

    def broken(net, golden, trials, seed):
        rep = real(net, golden, trials, seed)
        rep.equivalent = False
        return rep

    monkeypatch.setattr(comp, "check_equivalence", broken)
    assert run("compile", data_path("domand_annotated"), "--check") == 5


def test_exit_code_solver(monkeypatch):
    import maskpipe.compiler as comp
    from maskpipe.errors import NegativeCycle

    def boom(*a, **k):
        raise NegativeCycle("forced")

    monkeypatch.setattr(comp, "retime", boom)
    assert run("compile", data_path("domand_annotated")) == 4


def test_benchmarks_table(capsys):
    assert run("benchmarks", "--only", "present") == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split()[0] == "benchmark" and len(out) == 5


def test_corpus_export(tmp_path):
    assert run("corpus", tmp_path) == 0
    assert (tmp_path / "present_comar_masked.c").exists()


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "maskpipe.cli", "--version"], capture_output=True, text=True)
    assert out.returncode == 0 and "maskpipe" in out.stdout
