import json

import pytest

from unorthodox.algebra import (
    AXIOM_NAMES, BUILTIN_NAMES, BoundsError, NotALattice, ShapeError,
    UnknownName, axiom_profile, builtin, builtins, from_json, height,
    in_variety, trivial, validate,
)


def test_builtins_load_and_validate():
    for name in BUILTIN_NAMES:
        a = builtin(name)
        assert a.name == name
        assert a.zero == 0 and a.one == 1
    assert builtin("A5").size == 4
    assert builtin("A1").size == 3


def test_unknown_builtin():
    with pytest.raises(UnknownName):
        builtin("A6")


def test_tables_from_source():
    # implication tables pinned to the published values
    assert builtin("A1").imp == ((1, 2, 1), (0, 1, 2), (0, 1, 1))
    assert builtin("A2").imp == ((1, 2, 1), (0, 1, 2), (0, 2, 1))
    assert builtin("A3").imp == ((1, 2, 2), (0, 1, 2), (0, 1, 1))
    assert builtin("A4").imp == ((1, 2, 2), (0, 1, 2), (0, 2, 1))
    assert builtin("A5").imp == ((1, 2, 1, 2), (0, 1, 2, 3),
                                 (3, 2, 1, 0), (2, 1, 2, 1))
    for n in BUILTIN_NAMES:
        assert builtin(n).neg[:3] == (1, 0, 2)


def test_order_and_derived_ops():
    a1 = builtin("A1")
    assert a1.leq(0, 2) and a1.leq(2, 1) and not a1.leq(1, 2)
    # 0 -> 1 is the negation fixed point
    fix = a1.imp[0][1]
    assert fix == 2 and a1.neg[fix] == fix
    a5 = builtin("A5")
    assert a5.star(2) == 3  # 2 -> 0 in A5
    assert a1.plus(2) == 1  # (2'*)' = (2*)' = 0' = 1


def test_validate_rejects_ragged():
    with pytest.raises(ShapeError):
        validate("bad", ["0", "1"], ((0, 1), (1,)), ((0, 0), (0, 1)),
                 ((1, 1), (0, 1)), (1, 0), 0, 1)


def test_validate_rejects_non_lattice():
    # join not idempotent
    with pytest.raises(NotALattice):
        validate("bad", ["0", "1"], ((1, 1), (1, 1)), ((0, 0), (0, 1)),
                 ((1, 1), (0, 1)), (1, 0), 0, 1)


def test_validate_rejects_bad_bounds():
    join = ((0, 1), (1, 1))
    meet = ((0, 0), (0, 1))
    imp = ((1, 1), (0, 1))
    with pytest.raises(BoundsError):
        validate("bad", ["0", "1"], join, meet, imp, (1, 0), 1, 0)


def test_json_round_trip():
    a = builtin("A3")
    doc = json.loads(a.dumps())
    b = from_json(doc)
    assert b.imp == a.imp and b.neg == a.neg and b.name == a.name


def test_from_json_missing_field():
    with pytest.raises(ShapeError):
        from_json({"name": "x", "labels": ["0"]})


def test_axiom_profile_builtins_all_hold():
    for a in builtins():
        prof = axiom_profile(a)
        assert set(prof) == set(AXIOM_NAMES)
        assert all(c.holds for c in prof.values()), a.name
        assert in_variety(a)


def test_axiom_profile_counterexample():
    # Boolean 2-element algebra: classical -> fails UNORTHODOX (0->1 = 1, 1' = 0)
    two = validate("two", ["0", "1"], ((0, 1), (1, 1)), ((0, 0), (0, 1)),
                   ((1, 1), (0, 1)), (1, 0), 0, 1)
    prof = axiom_profile(two)
    assert not prof["UNORTHODOX"].holds
    assert prof["SH2"].holds and prof["DM"].holds


def test_height():
    assert height(builtin("A1")) == 2
    assert height(builtin("A5")) == 2
    assert height(trivial()) == 0
