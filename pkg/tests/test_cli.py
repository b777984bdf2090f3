import io
import json
import subprocess
import sys

import pytest

from signless.cli import build_parser, main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin.encode())))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


def test_check_family_certified(capsys):
    code, out, _ = run(capsys, "check", "--family", "u1(3,2)", "--k", "all", "--mode", "certified")
    r = rows(out)
    assert code == 0 and [x["k"] for x in r] == list(range(1, 9))
    assert all(x["outcome"].startswith("Holds") for x in r)


def test_check_graph6_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "check", "--graph6", "-", "--k", "2", stdin="A_\n",
                       monkeypatch=monkeypatch)
    (r,) = rows(out)
    assert code == 0 and r["rhs"] == 4 and r["s_plus"] == pytest.approx(2) and r["margin"] == pytest.approx(2)


def test_check_complete4_clique_equality(capsys):
    code, out, _ = run(capsys, "check", "--family", "complete(4)", "--k", "2")
    (r,) = rows(out)
    assert r["tightest"] == "clique"
    clique = next(b for b in r["bounds"] if b["name"] == "clique")
    assert clique["value"] == pytest.approx(r["s_plus"], abs=1e-9)


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5", "--class", "unicyclic")
    assert code == 0 and len(out.split()) == 5


def test_poly(capsys):
    from signless.charpoly import infinity_prime_poly
    code, out, _ = run(capsys, "poly", "--family", "infinityprime(11)")
    assert code == 0 and out.strip() == infinity_prime_poly(11).to_text()
    code, out, _ = run(capsys, "poly", "--lemma", "u1quintic", "--n", "7", "--a", "2")
    assert out.split() == ["-4", "29", "-64", "46", "-12", "1"]
    code, _, err = run(capsys, "poly", "--lemma", "u1quintic", "--n", "7")
    assert code == 1 and "--a" in err


def test_sweep_enumerate_certified(capsys):
    code, out, _ = run(capsys, "sweep", "--enumerate", "7", "--checks", "conjecture",
                       "--mode", "certified", "--summary")
    (rep,) = rows(out)
    assert code == 0 and rep["counts"]["graphs_checked"] == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert rep["violations"] == []


def test_sweep_is_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path, jobs in ((a, "1"), (b, "2")):
        assert main(["sweep", "--enumerate", "5", "--checks", "all", "--mode", "certified",
                     "--jobs", jobs, "--no-timing", "--output", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_lemma(capsys):
    code, out, _ = run(capsys, "sweep", "--lemma", "u2", "--n-min", "9", "--n-max", "10", "--summary")
    (rep,) = rows(out)
    assert code == 0 and rep["verdict_histogram"]["u2_q3"] == {"HoldsCertified": 3 + 4}
    code, _, err = run(capsys, "sweep", "--lemma", "u1", "--family", "cycle(5)")
    assert code == 1


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "cycle(5)", "--k", "2")
    (r,) = rows(out)
    assert code == 0 and r["rhs"] == 8 and r["k"] == 2


@pytest.mark.parametrize("argv", [
    ["check", "--family", "cycle(5)", "--bogus"],
    ["check"],
    ["check", "--family", "cycle(5)", "--graph6", "-"],
    ["check", "--family", "cycle(5)", "--k", "0"],
    ["check", "--family", "nope(3)"],
    ["check", "--family", "cycle(2)"],
    ["sweep", "--enumerate", "9"],
    ["check", "--graph6", "/nonexistent/file.g6"],
])
def test_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_help_lists_flags():
    ap = build_parser()
    sub = ap._subparsers._group_actions[0].choices
    helptext = sub["sweep"].format_help()
    for flag in ("--family", "--graph6", "--enumerate", "--class", "--k", "--mode", "--checks",
                 "--jobs", "--output", "--summary"):
        assert flag in helptext


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "signless", "check", "--family", "cycle(3)",
                          "--k", "1"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["rhs"] == 4
