import json

import pytest

from unorthodox import logic as lg
from unorthodox.algebra import builtin
from unorthodox.terms import ParseError, parse_equation


def F(s):
    return lg.parse_formula(s)


def test_parse_basics():
    assert F("bot -> top") == lg.Imp(lg.Bot, lg.Top)
    assert F("!x") == lg.Neg(lg.PVar("x"))
    assert lg.desugar(F("!x")) == lg.Imp(lg.PVar("x"), lg.Bot)
    assert F("~x") == lg.Dneg(lg.PVar("x"))
    assert F("@alpha") == lg.Imp(lg.Bot, lg.Top)
    assert F("@beta") == lg.Imp(lg.Bot, lg.Imp(lg.Bot, lg.Top))
    assert F("p ->h q") == lg.ImpH(lg.PVar("p"), lg.PVar("q"))
    assert F("p <->h q") == lg.IffH(lg.PVar("p"), lg.PVar("q"))
    with pytest.raises(ParseError):
        F("p ->")
    with pytest.raises(ParseError):
        F("@delta")


def test_parse_print_round_trip():
    samples = list(lg.AXIOM_SCHEMAS.values()) + [
        "~(bot -> top) <->h (bot -> top)",
        "!!p \\/ ~~q /\\ r",
        "((p -> q) -> p) <->h q",
    ]
    for s in samples:
        f = F(s)
        assert F(lg.formula_to_text(f)) == f, s


def test_axiom_instance():
    assert lg.axiom_instance(lg.Top)[0] == 6
    got = lg.axiom_instance(lg.ImpH(lg.Bot, lg.PVar("p")))
    assert got[0] == 7 and got[1] == {"alpha": lg.PVar("p")}
    assert lg.axiom_instance(lg.PVar("p")) is None
    # axiom 16 is closed
    assert lg.axiom_instance(F("~(bot -> top) <->h (bot -> top)"))[0] == 16
    # instance written without sugar still matches (desugared comparison)
    raw = lg.Imp(lg.Bot, lg.And(lg.Bot, lg.PVar("q")))
    assert lg.axiom_instance(raw)[0] == 7
    # explicit schema id
    assert lg.axiom_instance(F("(p /\\ q) ->h p"), 4) is not None
    assert lg.axiom_instance(F("(p /\\ q) ->h p"), 5) is None


def test_check_proof_ok():
    doc = [
        {"formula": "p", "just": "assume"},
        {"formula": "p ->h q", "just": "assume"},
        {"formula": "q", "just": {"smp": [1, 2]}},
        {"formula": "~q ->h ~p", "just": {"scp": 2}},
        {"formula": "top", "just": {"axiom": 6}},
        {"formula": "bot ->h r", "just": {"axiom": 7, "subst": {"alpha": "r"}}},
    ]
    proof = lg.proof_from_json(json.dumps(doc))
    res = lg.check_proof(proof)
    assert res.ok
    assert proof.assumptions == (lg.PVar("p"), F("p ->h q"))
    assert proof.conclusion == F("bot ->h r")


def test_check_proof_bad_steps():
    # SMP citing a non-ImpH step
    doc = [
        {"formula": "p", "just": "assume"},
        {"formula": "q", "just": "assume"},
        {"formula": "r", "just": {"smp": [1, 2]}},
    ]
    res = lg.check_proof(lg.proof_from_json(json.dumps(doc)))
    assert not res.ok and res.first_bad_step == 3
    # forward reference
    doc = [{"formula": "q", "just": {"smp": [1, 2]}}]
    res = lg.check_proof(lg.proof_from_json(json.dumps(doc)))
    assert not res.ok and res.first_bad_step == 1
    # wrong substitution
    doc = [{"formula": "bot ->h r", "just": {"axiom": 7, "subst": {"alpha": "s"}}}]
    res = lg.check_proof(lg.proof_from_json(json.dumps(doc)))
    assert not res.ok
    # bad axiom claim without subst
    doc = [{"formula": "p", "just": {"axiom": 6}}]
    res = lg.check_proof(lg.proof_from_json(json.dumps(doc)))
    assert not res.ok


def test_proof_from_json_malformed():
    with pytest.raises(lg.MalformedProof):
        lg.proof_from_json('{"nope": 1}')
    with pytest.raises(lg.MalformedProof):
        lg.proof_from_json('[{"formula": "p ->", "just": "assume"}]')
    with pytest.raises(lg.MalformedProof):
        lg.proof_from_json('[{"formula": "p", "just": {"weird": 1}}]')


def test_is_valid_and_theorem():
    assert lg.is_theorem(lg.Top)
    v = lg.is_valid(F("x \\/ ~x"), lg.Matrix(builtin("A1")))
    assert not v.valid and v.counter_valuation == {"x": 2}
    assert lg.is_theorem(F("~(bot -> top) <->h (bot -> top)"))


def test_proof_soundness_for_samples():
    """check_proof ok implies matrix consequence of the conclusion."""
    samples = [
        [
            {"formula": "p", "just": "assume"},
            {"formula": "p ->h q", "just": "assume"},
            {"formula": "q", "just": {"smp": [1, 2]}},
        ],
        [
            {"formula": "(p /\\ q) ->h p", "just": {"axiom": 4}},
            {"formula": "~p ->h ~(p /\\ q)", "just": {"scp": 1}},
        ],
        [
            {"formula": "top", "just": {"axiom": 6}},
            {"formula": "p ->h (p \\/ q)", "just": {"axiom": 1}},
            {"formula": "~(p \\/ q) ->h ~p", "just": {"scp": 2}},
        ],
    ]
    for doc in samples:
        proof = lg.proof_from_json(json.dumps(doc))
        assert lg.check_proof(proof).ok
        assert lg.consequence(proof.assumptions, proof.conclusion)


def test_consequence():
    assert lg.consequence([F("p"), F("p ->h q")], F("q"))
    assert lg.consequence([F("p ->h q")], F("~q ->h ~p"))
    assert not lg.consequence([], F("x"))


def test_tau_rho():
    assert str(lg.tau(lg.Top)) == "1 = 1"
    assert str(lg.tau(F("bot -> top"))) == "0 -> 1 = 1"
    f1, f2 = lg.rho(parse_equation("x = y"))
    assert lg.formula_to_text(f1) == "x ->h y"
    assert lg.formula_to_text(f2) == "y ->h x"
    # sugar in the equation desugars through the translation
    f1, _ = lg.rho(parse_equation("x* = x'"))
    assert lg.formula_to_text(f1) == "(x -> bot) ->h ~x"


def test_extensions():
    exts = lg.extensions()
    assert len(exts) == 32
    ids = {e.id for e in exts}
    assert frozenset() in ids and frozenset({1, 2, 3, 4, 5}) in ids


def test_decide_in_extension():
    assert lg.decide_in_extension(F("@alpha -> top"), {1})
    assert not lg.decide_in_extension(F("@alpha -> top"), {2})
    assert lg.decide_in_extension(lg.Top, frozenset())
    assert lg.decide_in_extension(F("bot"), frozenset())  # inconsistent ext
    # theoremhood == validity over the full set
    for s in ("top", "p ->h (p \\/ q)", "x \\/ ~x", "p"):
        assert lg.is_theorem(F(s)) == lg.decide_in_extension(F(s), {1, 2, 3, 4, 5})


def test_antitonicity_on_samples():
    # validity over more matrices is stronger: T ⊇ S and valid-on-T ⇒ valid-on-S
    samples = [F(s) for s in ("@alpha -> top", "!@alpha <->h bot",
                              "((p -> q) -> p) <->h q", "top", "@beta")]
    sets = [frozenset(c) for c in
            [(1,), (1, 3), (1, 2, 3), (1, 2, 3, 4), (1, 2, 3, 4, 5)]]
    for f in samples:
        for s in sets:
            for t in sets:
                if s <= t and lg.decide_in_extension(f, t):
                    assert lg.decide_in_extension(f, s)


def test_verify_extension_bases():
    vers = lg.verify_extension_bases()
    assert len(vers) == 30
    assert all(v.ok for v in vers), [
        (sorted(v.id), v.failures) for v in vers if not v.ok]


def test_soundness_report():
    rep = lg.soundness_report()
    assert rep.ok
    assert all(rep.schema_results[10].values())
    assert rep.smp_sound["A3"] and rep.scp_sound["A1"]


def test_cross_check_algebraizability():
    axioms = [F(s) for s in lg.AXIOM_SCHEMAS.values()]
    non_thms = [F("p"), F("p \\/ ~p")]
    res = lg.cross_check_algebraizability(
        axioms + non_thms,
        [parse_equation("x -> x = 1"), parse_equation("x = y"),
         parse_equation("x /\\ (x -> y) = x /\\ y")])
    assert res.ok
    # the two non-theorems really are non-theorems on both sides
    tail = res.alg1_details[-2:]
    assert all(not thm and not via for _, thm, via in tail)
