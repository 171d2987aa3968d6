import pytest

from unorthodox.algebra import axiom_profile, builtin, builtins, height, \
    in_variety, trivial
from unorthodox.structure import (
    NotApplicable, NotInVariety, SizeLimit, automorphisms, congruences,
    decompose, direct_product, discriminator_check, discriminator_term,
    enumerate_runo1, is_primal, is_si, is_simple, iso, power, quotient,
    sc_check, subalgebras,
)
from unorthodox.terms import eval_term


def test_no_proper_subalgebras_or_automorphisms():
    for a in builtins():
        assert subalgebras(a) == [frozenset(a.carrier)], a.name
        assert automorphisms(a) == [tuple(a.carrier)], a.name


def test_trivial_structure():
    t = trivial()
    assert subalgebras(t) == [frozenset({0})]
    assert automorphisms(t) == [(0,)]
    assert len(congruences(t)) == 1


def test_product_has_proper_subalgebra_and_swap_automorphism():
    p = power(builtin("A1"), 2)
    assert len(subalgebras(p)) > 1  # the diagonal, at least
    autos = automorphisms(p)
    assert len(autos) == 2  # identity and the factor swap


def test_congruences_builtin_and_product():
    for a in builtins():
        assert len(congruences(a)) == 2, a.name
    p = direct_product([builtin("A1"), builtin("A3")])
    lat = congruences(p)
    assert len(lat) == 4
    assert len(lat.atoms()) == 2
    assert len(lat.coatoms()) == 2


def test_sc_check():
    for a in builtins():
        assert sc_check(a).ok
    res = sc_check(power(builtin("A1"), 2))
    assert not res.ok and res.witness is not None


def test_simple_and_si():
    for a in builtins():
        assert is_simple(a) and is_si(a)
    p = direct_product([builtin("A1"), builtin("A2")])
    assert not is_simple(p) and not is_si(p)
    with pytest.raises(NotApplicable):
        is_simple(trivial())


def test_discriminator_on_all_builtins():
    T = discriminator_term()
    for a in builtins():
        rep = discriminator_check(a, T)
        assert rep.ok, (a.name, rep.failing_triple)
    # spot values
    a1, a5 = builtin("A1"), builtin("A5")
    assert eval_term(a1, T, {"x": 1, "y": 1, "z": 0}) == 0
    assert eval_term(a5, T, {"x": 2, "y": 3, "z": 0}) == 2


def test_discriminator_fails_on_product():
    p = power(builtin("A1"), 2)
    assert not discriminator_check(p).ok


def test_primality():
    for a in builtins():
        rep = is_primal(a)
        assert rep.primal, a.name
        if a.size == 3:
            assert rep.clone_binary_count == 19683
    assert not is_primal(power(builtin("A1"), 2), oracle="never").primal
    assert not is_primal(trivial()).primal


def test_products():
    p = power(builtin("A1"), 2)
    assert p.size == 9 and in_variety(p)
    q = direct_product([builtin("A1"), builtin("A5")])
    assert q.size == 12 and not is_simple(q)
    assert iso(direct_product([builtin("A1")]), builtin("A1"))
    with pytest.raises(SizeLimit):
        power(builtin("A5"), 7)


def test_quotient_by_factor_kernel():
    p = direct_product([builtin("A2"), builtin("A4")])
    lat = congruences(p)
    for co in lat.coatoms():
        q = quotient(p, co)
        assert q.size == 3
        assert any(iso(q, b) for b in builtins())


def test_iso():
    assert iso(builtin("A1"), builtin("A1")) == (0, 1, 2)
    for i, a in enumerate(builtins()):
        for j, b in enumerate(builtins()):
            assert (iso(a, b) is not None) == (i == j)
    # relabeled A5: swap the atoms
    a5 = builtin("A5")
    perm = (0, 1, 3, 2)
    from unorthodox.algebra import validate
    relabeled = validate(
        "A5r", ["0", "1", "2", "3"],
        tuple(tuple(perm[a5.join[perm[x]][perm[y]]] for y in range(4)) for x in range(4)),
        tuple(tuple(perm[a5.meet[perm[x]][perm[y]]] for y in range(4)) for x in range(4)),
        tuple(tuple(perm[a5.imp[perm[x]][perm[y]]] for y in range(4)) for x in range(4)),
        tuple(perm[a5.neg[perm[x]]] for x in range(4)), 0, 1)
    assert iso(a5, relabeled) is not None


def test_decompose():
    a3 = builtin("A3")
    facs = decompose(a3)
    assert len(facs) == 1 and iso(facs[0], a3)
    facs = decompose(direct_product([builtin("A1"), builtin("A5")]))
    matched = sorted(
        next(b.name for b in builtins() if iso(f, b)) for f in facs)
    assert matched == ["A1", "A5"]
    facs = decompose(power(builtin("A2"), 2))
    assert [f.size for f in facs] == [3, 3]
    assert all(iso(f, builtin("A2")) for f in facs)
    assert decompose(trivial()) == []
    two_imp = ((1, 1), (0, 1))
    from unorthodox.algebra import validate
    boolean2 = validate("two", ["0", "1"], ((0, 1), (1, 1)), ((0, 0), (0, 1)),
                        two_imp, (1, 0), 0, 1)
    with pytest.raises(NotInVariety):
        decompose(boolean2)


def test_enumerate_sizes():
    assert enumerate_runo1(2) == []
    names3 = sorted(m.name for m in enumerate_runo1(3))
    assert names3 == ["A1", "A2", "A3", "A4"]
    models = enumerate_runo1(4)
    assert sorted(m.name for m in models) == ["A1", "A2", "A3", "A4", "A5"]
    with pytest.raises(NotApplicable):
        enumerate_runo1(5)


def test_enumerated_models_are_simple_and_low():
    for m in enumerate_runo1(4):
        assert in_variety(m)
        assert sc_check(m).ok
        assert is_simple(m) and is_si(m)
        assert height(m) <= 2


def test_axiom_profile_closed_under_products():
    for a in builtins():
        for b in builtins():
            p = direct_product([a, b])
            assert in_variety(p), (a.name, b.name)
