import pytest

from unorthodox.algebra import builtin
from unorthodox.structure import direct_product, power
from unorthodox.varieties import (
    BadSubvarietyId, base_of, classify, complement, corollary_check,
    format_subvariety_id, join, lattice, lattice_dot, lattice_is_boolean,
    meet, parse_subvariety_id, verify_bases,
)


def test_subvariety_id_round_trip():
    assert parse_subvariety_id("135") == frozenset({1, 3, 5})
    assert parse_subvariety_id("0") == frozenset()
    assert format_subvariety_id(frozenset({2, 5})) == "25"
    assert format_subvariety_id(frozenset()) == "0"
    with pytest.raises(BadSubvarietyId):
        parse_subvariety_id("16")


def test_lattice_shape():
    infos = lattice()
    assert len(infos) == 32
    assert lattice_is_boolean()
    assert join({1}, {3}) == {1, 3}
    assert complement({1, 2}) == {3, 4, 5}
    assert meet({1, 2, 3}, {3, 4, 5}) == {3}


def test_base_endpoints():
    bottom = base_of(frozenset())
    assert [str(e) for e in bottom.base] == ["x = y"]
    top = base_of(frozenset({1, 2, 3, 4, 5}))
    assert top.base == ()
    assert base_of(frozenset({4})).base  # singleton base nonempty
    assert str(base_of(frozenset({1, 2, 3, 4})).base[0]) == "(0 -> 1)* = 0"


def test_verify_bases_all_exact():
    rep = verify_bases()
    assert len(rep.results) == 30
    assert rep.ok, [format_subvariety_id(r.id) for r in rep.errata]
    # spot checks pinned by the acceptance criteria
    by_id = {r.id: r for r in rep.results}
    for k in range(1, 6):
        assert by_id[frozenset({k})].exact
    for k in range(1, 6):
        quad = frozenset({1, 2, 3, 4, 5}) - {k}
        assert by_id[quad].exact


def test_classify():
    for i in range(1, 6):
        assert classify(builtin(f"A{i}")) == {i}
    p = direct_product([builtin("A1"), builtin("A3")])
    assert classify(p) == {1, 3}
    assert classify(power(builtin("A5"), 2)) == {5}


def test_classify_respects_products():
    import itertools
    for i, j in itertools.combinations(range(1, 6), 2):
        p = direct_product([builtin(f"A{i}"), builtin(f"A{j}")])
        assert classify(p) == {i, j}


def test_corollary_check():
    assert corollary_check()


def test_dot_output():
    dot = lattice_dot()
    assert dot.startswith("digraph")
    assert dot.count("->") == 80  # covers of the Boolean lattice 2^5: 5 * 2^4
