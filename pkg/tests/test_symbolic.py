import itertools

import pytest

from semirings import SymbolicNat, SymbolicTriple, nat_model, nn_triple_model

from oracles import expand_triple_product


@pytest.fixture(scope="module")
def nat():
    return nat_model()


@pytest.fixture(scope="module")
def triples():
    return nn_triple_model()


# ------------------------------------------------------------------ triples

def test_closed_form_product_matches_term_expansion(triples):
    coeffs = range(6)
    for u in itertools.product(coeffs, repeat=3):
        for v in itertools.product(coeffs, repeat=3):
            got = triples.mul(SymbolicTriple(*u), SymbolicTriple(*v))
            assert (got.a, got.b, got.c) == expand_triple_product(u, v)


def test_generator_products(triples):
    assert triples.mul(triples.x, triples.y) == triples.x
    assert triples.mul(triples.y, triples.x) == triples.y
    assert triples.mul(triples.x, triples.x) == triples.x
    assert triples.mul(triples.y, triples.y) == triples.y


def test_triples_not_commutative(triples):
    u, v = triples.noncommuting_pair()
    assert triples.mul(u, v) != triples.mul(v, u)


def test_triple_idempotents_match_window_sweep(triples):
    expected = {triples.zero, triples.one, triples.x, triples.y}
    assert set(triples.idempotents()) == expected
    swept = {u for u in triples.elements_window(3) if triples.is_idempotent(u)}
    assert swept == expected


def test_triple_additive_certificates_reevaluate(triples):
    for u in triples.elements_window(10):
        cert = triples.additive_certificate(u)
        assert all(triples.is_idempotent(g) for g in cert)
        total = triples.zero
        for g in cert:
            total = triples.add(total, g)
        assert total == u


def test_no_complement_of_x_to_one(triples):
    assert triples.complement_to_one(triples.x) is None
    # windowed cross-check of the coefficient argument
    for f in triples.elements_window(10):
        assert triples.add(triples.x, f) != triples.one


def test_triple_complement_to_one_exact_cases(triples):
    assert triples.complement_to_one(triples.zero) == triples.one
    assert triples.complement_to_one(triples.one) == triples.zero
    assert triples.complement_to_one(SymbolicTriple(2, 0, 0)) is None


def test_triple_nilpotents(triples):
    assert triples.is_nilpotent(triples.zero)
    assert not triples.is_nilpotent(triples.x)
    assert triples.nilpotents_in_window(4) == [triples.zero]


def test_triple_not_boolean(triples):
    assert not triples.is_boolean()
    c = triples.boolean_counterexample()
    assert triples.mul(c, c) != c


def test_triple_labels(triples):
    assert triples.label(triples.zero) == "0"
    assert triples.label(SymbolicTriple(1, 2, 1)) == "1+2x+y"


def test_triple_rejects_negative_coefficients():
    with pytest.raises(ValueError):
        SymbolicTriple(1, -1, 0)


# --------------------------------------------------------------------- nat

def test_nat_additive_certificates(nat):
    five = SymbolicNat(5)
    cert = nat.additive_certificate(five)
    assert cert == (nat.one,) * 5
    total = nat.zero
    for g in cert:
        total = nat.add(total, g)
    assert total == five
    assert nat.additive_certificate(nat.zero) == ()


def test_nat_not_boolean(nat):
    assert not nat.is_boolean()
    two = nat.boolean_counterexample()
    assert nat.mul(two, two) == SymbolicNat(4) != two


def test_nat_idempotents_and_nilpotents(nat):
    assert nat.idempotents() == (nat.zero, nat.one)
    assert nat.is_nilpotent(nat.zero)
    assert not nat.is_nilpotent(SymbolicNat(3))
    assert [u for u in nat.elements_window(10) if nat.is_nilpotent(u)] == \
        [nat.zero]


def test_nat_complement_to_one(nat):
    assert nat.complement_to_one(nat.zero) == nat.one
    assert nat.complement_to_one(nat.one) == nat.zero
    assert nat.complement_to_one(SymbolicNat(2)) is None


def test_nat_is_commutative(nat):
    assert nat.is_commutative()
    for u in nat.elements_window(6):
        for v in nat.elements_window(6):
            assert nat.mul(u, v) == nat.mul(v, u)


def test_nat_rejects_negative():
    with pytest.raises(ValueError):
        SymbolicNat(-2)
