import json

import pytest

from unorthodox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "-a", "A1", "-t", "0 -> 1")
    assert code == 0 and out.strip() == "2"


def test_eval_with_valuation(capsys):
    code, out, _ = run(capsys, "eval", "-a", "A5", "-t", "x*", "-v", "x=2")
    assert code == 0 and out.strip() == "3"


def test_check_id_fail_prints_counterexample(capsys):
    code, out, _ = run(capsys, "check-id", "-a", "A2",
                       "-e", "(0 -> 1) -> 1 = 1")
    assert code == 1 and "LHS=2" in out


def test_check_id_holds(capsys):
    code, out, _ = run(capsys, "check-id", "-a", "A2", "-e", "x -> x = 1")
    assert code == 0 and out.strip() == "holds"


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "eval", "-a", "A1", "-t", "0 ->")
    assert code == 2 and "parse error" in err


def test_malformed_algebra_exit_3(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x"}')
    code, _, err = run(capsys, "algebra", "show", str(bad))
    assert code == 3 and "input error" in err


def test_profile(capsys):
    code, out, _ = run(capsys, "profile", "-e", "(0->1)* = 0")
    assert code == 0 and out.strip() == "1234"


def test_algebra_validate_json(capsys):
    code, out, _ = run(capsys, "--json", "algebra", "validate", "A4")
    assert code == 0
    doc = json.loads(out)
    assert doc["in_variety"] and all(v["holds"] for v in doc["axioms"].values())


def test_algebra_show_round_trips(tmp_path, capsys):
    code, out, _ = run(capsys, "algebra", "show", "A3")
    assert code == 0
    f = tmp_path / "a3.json"
    f.write_text(out)
    code, out2, _ = run(capsys, "algebra", "show", str(f))
    assert code == 0 and out2 == out


def test_structure_subcommands(capsys):
    for action, expected in [("simple", 0), ("sc", 0), ("disc", 0),
                             ("primal", 0), ("height", 0)]:
        code, _, _ = run(capsys, "structure", action, "-a", "A4")
        assert code == expected, action
    code, out, _ = run(capsys, "structure", "height", "-a", "A5")
    assert out.strip() == "2"
    code, out, _ = run(capsys, "structure", "con", "-a", "A1")
    assert code == 0 and len(out.strip().splitlines()) == 2


def test_product_decompose_pipeline(tmp_path, capsys):
    code, out, _ = run(capsys, "product", "A1", "A3")
    assert code == 0
    f = tmp_path / "p.json"
    f.write_text(out)
    code, out, _ = run(capsys, "decompose", str(f))
    assert code == 0 and sorted(out.split(" x ")) == ["A1", "A3\n"]
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0 and out.strip() == "13"


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--max-size", "3")
    assert code == 0
    assert sorted(line.split()[0] for line in out.strip().splitlines()) == \
        ["A1", "A2", "A3", "A4"]


def test_variety_commands(capsys):
    code, out, _ = run(capsys, "variety", "verify")
    assert code == 0 and "30/30 bases exact" in out
    code, out, _ = run(capsys, "variety", "base", "1234")
    assert code == 0 and out.strip() == "(0 -> 1)* = 0"
    code, out, _ = run(capsys, "variety", "lattice")
    assert code == 0 and out.startswith("digraph")
    code, _, _ = run(capsys, "variety", "base", "9")
    assert code == 2


def test_logic_commands(tmp_path, capsys):
    code, out, _ = run(capsys, "logic", "decide", "top")
    assert code == 0 and out.strip() == "theorem"
    code, out, _ = run(capsys, "logic", "decide", "@alpha -> top", "-S", "1")
    assert code == 0
    code, out, _ = run(capsys, "logic", "decide", "@alpha -> top", "-S", "2")
    assert code == 1 and "not a theorem" in out
    code, out, _ = run(capsys, "logic", "axioms")
    assert code == 0 and len(out.strip().splitlines()) == 18
    code, out, _ = run(capsys, "logic", "translate", "bot -> top")
    assert code == 0 and out.strip() == "0 -> 1 = 1"

    proof = tmp_path / "proof.json"
    proof.write_text(json.dumps([
        {"formula": "p", "just": "assume"},
        {"formula": "p ->h q", "just": "assume"},
        {"formula": "q", "just": {"smp": [1, 2]}},
    ]))
    code, out, _ = run(capsys, "logic", "prove-check", str(proof))
    assert code == 0 and out.strip() == "ok"

    bad = tmp_path / "bad.json"
    bad.write_text("[42]")
    code, _, err = run(capsys, "logic", "prove-check", str(bad))
    assert code == 3

    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps([
        {"formula": "q", "just": {"smp": [1, 1]}},
    ]))
    code, out, _ = run(capsys, "logic", "prove-check", str(broken))
    assert code == 1 and "step 1" in out


def test_report_deterministic(tmp_path, capsys):
    out1, out2 = tmp_path / "r1", tmp_path / "r2"
    assert run(capsys, "report", "--out", str(out1))[0] == 0
    assert run(capsys, "report", "--out", str(out2))[0] == 0
    files1 = sorted(p.name for p in out1.iterdir())
    files2 = sorted(p.name for p in out2.iterdir())
    assert files1 == files2 and files1
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes(), name
