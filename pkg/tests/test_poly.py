import random

import pytest
from hypothesis import given, settings, strategies as st

from goodlrc.errors import DivisionByZero, DuplicateAbscissa, FieldMismatch, ZeroPolynomial
from goodlrc.gf import field_create
from goodlrc.poly import MINUS_INFINITY, Poly, dickson, distinct_roots, interpolate, poly_gcd

F17 = field_create(17)
F27 = field_create(3, 3)
F8 = field_create(2, 3)
FIELDS = [field_create(5), F17, F8, field_create(3, 2), F27]


def polys(F, max_deg=6):
    return st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1).map(lambda c: Poly(F, c))


def f27_g():
    u = F27.exp
    X = Poly.x(F27)
    return X * X * (X - Poly.const(F27, u(1))) ** 2 * (X + Poly.const(F27, u(1))) ** 2


def test_zero_polynomial_degree():
    assert Poly.zero(F17).degree == MINUS_INFINITY
    assert Poly(F17, [0, 0]).coeffs == ()
    assert Poly.zero(F17)(5) == 0


def test_eval_examples():
    assert Poly.monomial(F17, 4)(2) == 16
    g = f27_g()
    u = F27.exp
    assert g(u(2)) == u(6)


def test_f27_g_matches_printed_terms():
    u = F27.exp
    assert f27_g().coeffs == (0, 0, u(4), 0, u(2), 0, 1)


def test_divmod_and_frobenius():
    X = Poly.x(F17)
    q, r = divmod(Poly.monomial(F17, 4), X)
    assert q == Poly.monomial(F17, 3) and r.is_zero()
    F3 = field_create(3)
    assert (Poly(F3, [2, 1]) ** 3) == Poly(F3, [2, 0, 0, 1])
    with pytest.raises(DivisionByZero):
        divmod(X, Poly.zero(F17))


def test_gcd_example():
    a = Poly(F17, [16, 0, 1])
    b = Poly(F17, [16, 1])
    assert poly_gcd(a, b) == Poly(F17, [16, 1])


def test_roots_examples():
    F7 = field_create(7)
    assert distinct_roots(Poly.monomial(F7, 3)) == [0]
    assert distinct_roots(Poly(F7, [1, 0, 1])) == []
    u = F27.exp
    assert set(distinct_roots(f27_g())) == {0, u(1), u(14)}
    with pytest.raises(ZeroPolynomial):
        distinct_roots(Poly.zero(F7))


def test_interpolation_examples():
    assert interpolate(F17, [(0, 5)]) == Poly.const(F17, 5)
    assert interpolate(F17, [(1, 1), (4, 4), (13, 13)]) == Poly.x(F17)
    with pytest.raises(DuplicateAbscissa):
        interpolate(F17, [(1, 1), (1, 2)])


def test_interpolation_round_trip():
    rng = random.Random(7)
    for F in FIELDS:
        for _ in range(50):
            f = Poly(F, [rng.randrange(F.q) for _ in range(4)])
            xs = rng.sample(range(F.q), 4)
            assert interpolate(F, [(x, f(x)) for x in xs]) == f


def test_dickson_small_cases():
    F = field_create(11)
    a = 3
    assert dickson(F, 0, a) == Poly.const(F, 2)
    assert dickson(F, 1, a) == Poly.x(F)
    assert dickson(F, 3, a) == Poly(F, [0, F.neg(F.mul(3, a)), 0, 1])


@pytest.mark.parametrize("F", [field_create(7), field_create(11), field_create(3, 2)], ids=str)
def test_dickson_functional_equation(F):
    # D_m(y + a/y, a) = y^m + (a/y)^m for every nonzero y
    for a in range(1, F.q):
        for m in range(6):
            D = dickson(F, m, a)
            for y in range(1, F.q):
                z = F.div(a, y)
                assert D(F.add(y, z)) == F.add(F.pow(y, m), F.pow(z, m))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        Poly.x(F17) + Poly.x(F27)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda F: st.tuples(polys(F), polys(F), polys(F))))
def test_ring_laws(triple):
    a, b, c = triple
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * 1 == a


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda F: st.tuples(polys(F, 8), polys(F, 4))))
def test_divmod_identity(pair):
    f, d = pair
    if d.is_zero():
        return
    q, r = divmod(f, d)
    assert q * d + r == f
    assert r.degree < d.degree


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda F: st.tuples(polys(F, 5), polys(F, 5))))
def test_gcd_divides_and_is_monic(pair):
    a, b = pair
    g = poly_gcd(a, b)
    if a.is_zero() and b.is_zero():
        assert g.is_zero()
        return
    assert g.lead == 1
    assert (a % g).is_zero() and (b % g).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS).flatmap(lambda F: polys(F)))
def test_eval_many_matches_horner(f):
    F = f.field
    assert f.eval_many(range(F.q)).tolist() == [f(x) for x in range(F.q)]


def test_json_round_trip():
    f = f27_g()
    assert Poly.from_json(F27, f.to_json()) == f
