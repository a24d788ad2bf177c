import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from goodlrc.errors import (
    DivisionByZero, DlogOfZero, EvenCharacteristic, FieldMismatch,
    NonPrimeCharacteristic, OrderNotDividing, ReducibleModulus,
)
from goodlrc.gf import GF, field_create, is_irreducible, least_irreducible

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (17, 1), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)]


def naive_mul(F, a, b):
    """Schoolbook product of coefficient vectors reduced by the modulus."""
    p, s = F.p, F.s
    da, db = F.to_digits(a), F.to_digits(b)
    prod = [0] * (2 * s - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    mod = list(F.modulus)
    for top in range(len(prod) - 1, s - 1, -1):
        c = prod[top]
        if c:
            for i in range(s + 1):
                prod[top - s + i] = (prod[top - s + i] - c * mod[i]) % p
    return F.from_digits(prod[:s])


@pytest.fixture(params=FIELDS, ids=lambda f: f"GF({f[0]}^{f[1]})")
def field(request):
    return field_create(*request.param)


def test_default_modulus_gf27():
    F = field_create(3, 3)
    assert tuple(F.modulus) == (1, 2, 0, 1)
    assert F.generator == 3  # the code of x itself
    assert F.order(3) == 26


def test_default_modulus_is_least_irreducible_by_scan():
    # independent scan: cubics x^3 + c2 x^2 + c1 x + c0 with no root in GF(3)
    for c2, c1, c0 in itertools.product(range(3), repeat=3):
        if all((x ** 3 + c2 * x * x + c1 * x + c0) % 3 for x in range(3)):
            first = (c0, c1, c2, 1)
            break
    assert tuple(least_irreducible(3, 3)) == first


def test_prime_field_is_residues():
    F = field_create(17)
    assert F.q == 17
    assert F.elements() == list(range(17))
    assert F.pow(2, 4) == 16


def test_reducible_and_nonprime():
    with pytest.raises(ReducibleModulus):
        field_create(3, 3, [1, 0, 0, 1])
    with pytest.raises(NonPrimeCharacteristic):
        field_create(6, 1)
    assert not is_irreducible([1, 0, 0, 1], 3)


def test_minus_one_is_u13_in_gf27():
    F = field_create(3, 3)
    u13 = F.exp(13)
    assert F.mul(u13, u13) == 1
    assert u13 == F.neg(1)


def test_inverse_of_one_and_zero():
    F = field_create(5, 2)
    assert F.inv(1) == 1
    with pytest.raises(DivisionByZero):
        F.inv(0)


def test_elements_listing():
    assert field_create(5).elements() == [0, 1, 2, 3, 4]
    E = field_create(3, 3).elements()
    assert len(E) == 27 and E[0] == 0
    F4 = field_create(2, 2)
    assert all(F4.sub(a, b) for a in range(4) for b in range(4) if a != b)


def test_discrete_log(field):
    F = field
    if F.q > 2:  # in GF(2) the generator is 1 itself
        assert F.log(F.generator) == 1
    assert F.log(1) == 0
    for a in range(1, F.q):
        k = F.log(a)
        assert 0 <= k < F.q - 1 and F.pow(F.generator, k) == a
    with pytest.raises(DlogOfZero):
        F.log(0)


def test_dlog_of_power_gf27():
    F = field_create(3, 3)
    assert F.log(F.pow(F.generator, 6)) == 6


def test_generator_is_primitive(field):
    F = field
    seen = {F.pow(F.generator, k) for k in range(F.q - 1)}
    assert seen == set(range(1, F.q))


def test_quadratic_character():
    F = field_create(7)
    assert F.quadratic_character(0) == 0
    assert F.quadratic_character(1) == 1
    assert F.quadratic_character(3) == -1
    squares = {x * x % 7 for x in range(1, 7)}
    assert all(F.quadratic_character(c) == (1 if c in squares else -1) for c in range(1, 7))
    with pytest.raises(EvenCharacteristic):
        field_create(2, 3).quadratic_character(1)


@pytest.mark.parametrize("p,s", [(3, 1), (5, 1), (3, 2), (5, 2), (7, 2), (3, 3)])
def test_quadratic_character_multiplicative(p, s):
    F = field_create(p, s)
    for a in range(F.q):
        for b in range(F.q):
            assert F.quadratic_character(F.mul(a, b)) == \
                F.quadratic_character(a) * F.quadratic_character(b)


def test_roots_of_unity():
    F = field_create(17)
    assert F.roots_of_unity(1) == [1]
    assert sorted(F.roots_of_unity(4)) == [1, 4, 13, 16]
    assert all(F.pow(a, 4) == 1 for a in F.roots_of_unity(4))
    with pytest.raises(OrderNotDividing):
        field_create(7).roots_of_unity(4)


def test_fermat_exhaustive():
    for p, s in [(2, 1), (2, 6), (2, 12), (3, 5), (5, 3), (7, 3), (11, 2), (13, 3)]:
        F = field_create(p, s)
        assert F.q <= 2 ** 12
        a = np.arange(F.q)
        assert np.array_equal(F.vpow(a, F.q), a)


def test_multiplication_matches_schoolbook(field):
    rng = random.Random(1)
    for _ in range(300):
        a, b = rng.randrange(field.q), rng.randrange(field.q)
        assert field.mul(a, b) == naive_mul(field, a, b)


def test_axioms_random():
    rng = random.Random(2024)
    fields = [field_create(p, s) for p, s in FIELDS]
    for _ in range(10 ** 4):
        F = rng.choice(fields)
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        assert F.sub(F.add(a, b), b) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_vectorized_agrees_with_scalar(fs, data):
    F = field_create(*fs)
    xs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=1, max_size=20))
    ys = data.draw(st.lists(st.integers(0, F.q - 1), min_size=len(xs), max_size=len(xs)))
    a, b = np.array(xs), np.array(ys)
    assert F.vadd(a, b).tolist() == [F.add(x, y) for x, y in zip(xs, ys)]
    assert F.vsub(a, b).tolist() == [F.sub(x, y) for x, y in zip(xs, ys)]
    assert F.vmul(a, b).tolist() == [F.mul(x, y) for x, y in zip(xs, ys)]
    assert F.vneg(a).tolist() == [F.neg(x) for x in xs]


def test_field_elements_and_mismatch():
    F, K = field_create(5), field_create(7)
    x = F(3)
    assert int(x * F(2)) == 1
    assert int(x + 4) == 2
    with pytest.raises(FieldMismatch):
        _ = x + K(1)


def test_json_round_trip(field):
    assert GF.from_json(field.to_json()) == field


def test_subfield():
    F = field_create(3, 3)
    sub = F.subfield(1)
    assert sorted(sub) == sorted(a for a in range(27) if F.pow(a, 3) == a)
