"""End-to-end tests for the command-line front end.

Each test drives `cutsim.cli.main` in-process (capsys picks up the
output); one test at the bottom goes through a real subprocess to cover
the installed entry points.  Any derivation the tool prints must re-parse
as a problem file, so several tests feed the output straight back in.
"""

import os
import random
import re
import shutil
import subprocess
import sys

import pytest

from cutsim import GB, Const, O, check_derivation, leibniz, nodes_equal
from cutsim.calculus import calculus_by_name
from cutsim.cli import main
from cutsim.syntax import DerivationDecl, SourceProblem, parse_problem, print_problem

import dgen

GOLDEN = os.path.join(os.path.dirname(__file__), os.pardir, "golden")


def _golden(name):
    return os.path.join(GOLDEN, name)


def _run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def _stripped_problem(out):
    """Drop the metric lines so the rest parses as a problem file."""
    keep = [ln for ln in out.splitlines()
            if not re.match(r"(extra=|proved |d=\d|NotFound)", ln)]
    return parse_problem("\n".join(keep) + "\n")


# ---------------------------------------- check

def test_check_accepts_the_whole_golden_corpus(capsys):
    for fname in sorted(os.listdir(GOLDEN)):
        rc, out, err = _run(capsys, "check", _golden(fname))
        assert rc == 0, (fname, err)
        for line in out.splitlines():
            assert re.fullmatch(r"\S+: ok steps=\d+", line), (fname, line)


def test_check_reports_bad_derivations(tmp_path, capsys):
    bad = tmp_path / "bad.prob"
    bad.write_text("const a : o.\n"
                   "derivation broken gb\n"
                   "(init :concl {a})\n")
    rc, out, _ = _run(capsys, "check", str(bad))
    assert rc == 1
    assert "broken: FAIL" in out and "shape-mismatch" in out


def test_check_exit_codes_for_unusable_input(tmp_path, capsys):
    empty = tmp_path / "empty.prob"
    empty.write_text("const a : o.\n")
    rc, _, err = _run(capsys, "check", str(empty))
    assert rc == 2 and "no derivations" in err

    mangled = tmp_path / "mangled.prob"
    mangled.write_text("const a o.\n")
    rc, _, err = _run(capsys, "check", str(mangled))
    assert rc == 2 and err.startswith("parse error:")

    rc, _, err = _run(capsys, "check", _golden("leib_refl.prob"),
                      "--calculus", "bogus")
    assert rc == 2 and err.startswith("error:")


def test_check_against_an_overriding_calculus(tmp_path, capsys):
    # the base rules are a subset of the equation calculus, so this passes
    rc, out, _ = _run(capsys, "check", _golden("leib_refl.prob"),
                      "--calculus", "gbfb")
    assert rc == 0 and "ok steps=3" in out

    # a tree using cut cannot be forced into the cut-free calculus
    rng = random.Random(11)
    a, b = Const("a", O), Const("b", O)
    d = dgen.gbcut_derivation(rng, leibniz(a, b, O), steps=6, cuts=1)
    prob = SourceProblem()
    prob.derivations.append(DerivationDecl("withcut", "gbcut", None, d))
    path = tmp_path / "withcut.prob"
    path.write_text(print_problem(prob))
    rc, out, _ = _run(capsys, "check", str(path))
    assert rc == 0
    rc, out, _ = _run(capsys, "check", str(path), "--calculus", "gb")
    assert rc == 1 and "rule-not-in-calculus" in out


# ---------------------------------------- schema

def test_schema_command_prints_a_reparsable_derivation(capsys):
    rc, out, _ = _run(capsys, "schema", "leibniz@o",
                      "--context", "{~ (a == b @ o)}", "--cutformula", "a")
    assert rc == 0
    assert out.rstrip().splitlines()[-1] == "extra=3"
    back = _stripped_problem(out)
    d = back.derivations[0]
    assert d.name == "realized" and d.calc_name == "gb"


def test_schema_command_with_premise_files(tmp_path, capsys):
    left = tmp_path / "left.drv"
    left.write_text("(init :concl {~x, x, y})\n")
    right = tmp_path / "right.drv"
    right.write_text("(init :concl {~x, x, ~y})\n")
    rc, out, _ = _run(capsys, "schema", "trivial",
                      "--context", "{x, ~x}", "--cutformula", "y",
                      "--left", str(left), "--right", str(right))
    assert rc == 0
    assert out.rstrip().splitlines()[-1] == "extra=3"
    # with honest premises the printed result is a complete, checkable proof
    root = _stripped_problem(out).derivations[0].root
    assert check_derivation(root, GB) == root.size() == 5


def test_schema_command_error_codes(capsys):
    rc, _, err = _run(capsys, "schema", "nosuch",
                      "--context", "{a}", "--cutformula", "a")
    assert rc == 2 and err.startswith("error:")
    # the plain schemas take no type argument
    rc, _, err = _run(capsys, "schema", "trivial@o",
                      "--context", "{a}", "--cutformula", "a")
    assert rc == 2 and err.startswith("error:")
    # a cut formula with a redex never forms a valid premise sequent
    rc, _, err = _run(capsys, "schema", "trivial",
                      "--context", "{a}", "--cutformula", r"(\v:o. v) a")
    assert rc == 2 and "normal form" in err


def test_schema_command_rejects_mismatched_premises(tmp_path, capsys):
    left = tmp_path / "left.drv"
    left.write_text("(init :concl {x, y})\n")  # missing the ~x of the context
    rc, _, err = _run(capsys, "schema", "trivial",
                      "--context", "{x, ~x}", "--cutformula", "y",
                      "--left", str(left))
    assert rc == 1 and err.startswith("error:")


# ---------------------------------------- simulate

def test_simulate_reports_the_bound_and_emits_cut_free_output(tmp_path, capsys):
    rng = random.Random(77)
    a, b = Const("a", O), Const("b", O)
    realizer = leibniz(a, b, O)
    prob = SourceProblem()
    for i in range(3):
        d = dgen.gbcut_derivation(rng, realizer, steps=7, cuts=1 + i % 2)
        prob.derivations.append(
            DerivationDecl("demo%d" % i, "gbcut", None, d))
    path = tmp_path / "cuts.prob"
    path.write_text(print_problem(prob))

    rc, out, _ = _run(capsys, "simulate", str(path), "--realizer", "leibniz@o")
    assert rc == 0
    metrics = [ln for ln in out.splitlines() if ln.startswith("d=")]
    assert len(metrics) == 3
    for line in metrics:
        m = re.fullmatch(r"d=(\d+) n=(\d+) k=3 out=(\d+) bound-ok=true", line)
        assert m, line
        d0, n, outn = map(int, m.groups())
        assert outn <= d0 + 3 * n
    back = _stripped_problem(out)
    assert [d.name for d in back.derivations] == \
        ["demo0_cutfree", "demo1_cutfree", "demo2_cutfree"]
    for d in back.derivations:
        check_derivation(d.root, GB)


def test_simulate_needs_derivations(tmp_path, capsys):
    path = tmp_path / "none.prob"
    path.write_text("const a : o.\n")
    rc, _, err = _run(capsys, "simulate", str(path), "--realizer", "trivial")
    assert rc == 2 and "no derivations" in err


# ---------------------------------------- prove

def test_prove_finds_the_golden_goal(capsys):
    rc, out, _ = _run(capsys, "prove", _golden("eq_dichotomy.prob"),
                      "--goal", "goal", "--calculus", "gbfb")
    assert rc == 0
    assert out.rstrip().splitlines()[-1] == "proved nodes=5"
    d = _stripped_problem(out).derivations[0]
    assert d.root.size() == 5
    check_derivation(d.root, calculus_by_name("gbfb"))
    # an extra pool seed is accepted and does not disturb the result
    rc, out2, _ = _run(capsys, "prove", _golden("eq_dichotomy.prob"),
                       "--goal", "goal", "--calculus", "gbfb",
                       "--witness", "q a")
    assert rc == 0 and "proved nodes=5" in out2


def test_prove_failure_paths(capsys):
    rc, out, _ = _run(capsys, "prove", _golden("eq_dichotomy.prob"),
                      "--goal", "goal", "--calculus", "gbfbminus")
    assert rc == 1 and out.rstrip() == "NotFound bound=6"
    rc, _, err = _run(capsys, "prove", _golden("eq_dichotomy.prob"),
                      "--goal", "nope")
    assert rc == 2 and "no sequent named" in err


# ---------------------------------------- bench

def test_bench_stdout_is_stable(capsys):
    rc, out, _ = _run(capsys, "bench", "defchain", "--sizes", "1")
    assert rc == 0
    assert out == "family=defchain n=1 cutfree=7 withcut=7 gap=0\n"
    rc, out, _ = _run(capsys, "bench", "defchain", "--sizes", "1",
                      "--without-cut")
    assert rc == 0
    assert out == "family=defchain n=1 cutfree=7\n"


def test_bench_writes_artifacts(tmp_path, capsys):
    out_dir = tmp_path / "artifacts"
    rc, out, _ = _run(capsys, "bench", "defchain", "--sizes", "1,2",
                      "--max-nodes", "14", "--out-dir", str(out_dir))
    assert rc == 0
    assert len(out.splitlines()) == 2
    tsv = (out_dir / "bench.tsv").read_text().splitlines()
    assert tsv[0].split("\t") == ["family", "n", "calculus",
                                  "max_nodes", "minimal", "seconds"]
    assert len(tsv) == 1 + 4  # two sizes, two calculi each
    for row in tsv[1:]:
        family, n, calc, cap, minimal, _ = row.split("\t")
        assert family == "defchain" and calc in ("gb", "gbcut")
        assert int(minimal) <= int(cap)
    png = out_dir / "bench_defchain.png"
    assert png.is_file() and png.stat().st_size > 0


# ---------------------------------------- installed entry points

def test_module_and_script_entry_points():
    cmd = [sys.executable, "-m", "cutsim", "check", _golden("leib_refl.prob")]
    done = subprocess.run(cmd, capture_output=True, text=True)
    assert done.returncode == 0 and "ok steps=3" in done.stdout

    script = shutil.which("cutsim")
    if script is None:
        pytest.skip("console script not on PATH")
    done = subprocess.run([script, "check", _golden("leib_refl.prob")],
                          capture_output=True, text=True)
    assert done.returncode == 0 and "ok steps=3" in done.stdout
