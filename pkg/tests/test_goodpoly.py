import dataclasses
import itertools

import pytest

from goodlrc.errors import (
    BadSplit, DegreeTooSmall, DependentBasis, FieldTooLarge, NoGoodSets, NotSubspace,
    OrderNotDividing, PreconditionFailed,
)
from goodlrc.gf import field_create
from goodlrc.goodpoly import (
    GoodPolyCert, cert_from_poly, compute_G, compute_Nf, construct_additive,
    construct_cubic_shifted, construct_dickson, construct_multiplicative,
    construct_union_cosets, fibers, good_sets, verify_cert, with_split,
)
from goodlrc.poly import Poly


def literal_Nf(f):
    """N_f(i) straight from the definition: count t whose shift f + t has i roots."""
    F = f.field
    hist = {}
    for t in range(F.q):
        shifted = f + Poly.const(F, t)
        roots = sum(1 for x in range(F.q) if shifted(x) == 0)
        hist[roots] = hist.get(roots, 0) + 1
    return hist


def nonzero(hist):
    return {i: c for i, c in hist.items() if c}


SMALL = [field_create(p, s) for p, s in [(5, 1), (7, 1), (11, 1), (13, 1), (2, 3), (3, 2), (2, 4)]]


def test_nf_x_cubed_gf7():
    F = field_create(7)
    hist = compute_Nf(Poly.monomial(F, 3))
    assert nonzero(hist) == {0: 4, 1: 1, 3: 2}
    assert compute_G(Poly.monomial(F, 3)) == 2


@pytest.mark.parametrize("F", SMALL, ids=str)
def test_nf_matches_literal_definition(F):
    for coeffs in itertools.islice(itertools.product(range(F.q), repeat=3), 0, None, 7):
        f = Poly(F, list(coeffs) + [1])
        hist = compute_Nf(f)
        assert nonzero(hist) == literal_Nf(f)
        assert sum(hist.values()) == F.q


def test_g_examples():
    F11 = field_create(11)
    assert compute_G(Poly(F11, [0, 1, 0, 1])) == 2
    assert compute_Nf(Poly.monomial(field_create(17), 4))[4] == 4
    with pytest.raises(DegreeTooSmall):
        compute_G(Poly.x(F11))


def test_field_too_large(monkeypatch):
    from goodlrc import goodpoly
    monkeypatch.setattr(goodpoly, "MAX_EXHAUSTIVE_Q", 100)
    F = field_create(2, 7)
    with pytest.raises(FieldTooLarge):
        compute_Nf(Poly.monomial(F, 3))


def test_fibers_x4_gf17():
    F = field_create(17)
    g = Poly.monomial(F, 4)
    sets = good_sets(g)
    assert len(sets) == 4
    by_value = dict(sets)
    assert sorted(by_value[1]) == sorted(F.roots_of_unity(4)) == [1, 4, 13, 16]
    assert 0 not in by_value
    assert dict(fibers(g))[0] == [0]


def test_fibers_x2_gf5():
    g = Poly.monomial(field_create(5), 2)
    assert sorted(sorted(A) for _, A in good_sets(g)) == [[1, 4], [2, 3]]


def test_f27_cert():
    F = field_create(3, 3)
    u = F.exp
    g = Poly(F, [0, 0, u(4), 0, u(2), 0, 1])
    cert = cert_from_poly(g)
    assert cert.L == 4
    assert set(cert.constants) == {u(6), u(8), u(12), u(24)}
    assert set(cert.roots) == {0, u(1), u(14)}


def test_split_accepted_and_rejected():
    F = field_create(17)
    g = Poly.monomial(F, 4)
    cert = cert_from_poly(g, (Poly.x(F), Poly.monomial(F, 3)))
    assert cert.L == 4 and cert.roots == (0,)
    with pytest.raises(BadSplit):
        cert_from_poly(g, (Poly.x(F), Poly.monomial(F, 2)))
    with pytest.raises(BadSplit):
        with_split(cert, Poly(F, [1, 1]))


def test_no_good_sets():
    # cubing is a bijection of GF(5), so every fiber of x^3 has one element
    with pytest.raises(NoGoodSets):
        cert_from_poly(Poly.monomial(field_create(5), 3))


def test_multiplicative():
    assert construct_multiplicative(field_create(17), 4).L == 4
    assert construct_multiplicative(field_create(7, 2), 24).L == 2
    with pytest.raises(OrderNotDividing):
        construct_multiplicative(field_create(7), 4)


@pytest.mark.parametrize("q,m", [(q, m) for q in (9, 17, 25, 49)
                                 for m in range(2, q) if (q - 1) % m == 0])
def test_multiplicative_G_formula(q, m):
    p = {9: 3, 17: 17, 25: 5, 49: 7}[q]
    F = field_create(p, 1 if p == q else 2)
    assert compute_G(Poly.monomial(F, m)) == (q - 1) // m


def test_additive():
    F4 = field_create(2, 2)
    cert = construct_additive(F4, [1])
    assert cert.g == Poly(F4, [0, 1, 1])
    assert cert.L == 1 and sorted(cert.sets[0]) == [2, 3]
    F9 = field_create(3, 2)
    cert = construct_additive(F9, [1])
    assert cert.g == Poly(F9, [0, 2, 0, 1]) and cert.L == 2
    covered = set(cert.roots).union(*map(set, cert.sets))
    assert covered == set(range(9))
    with pytest.raises(DependentBasis):
        construct_additive(F9, [1, 2])


def test_union_cosets_gf27():
    F = field_create(3, 3)
    cert = construct_union_cosets(F, 1, [1], 2)
    assert cert.degree == 6 and cert.L == 4
    assert compute_G(cert.g) == 4
    assert compute_Nf(cert.g)[3] == 1


def test_union_cosets_general_formula():
    for (p, s, l, basis, m) in [(3, 3, 1, [1], 2), (2, 4, 2, None, 3), (3, 2, 1, [1], 2)]:
        F = field_create(p, s)
        if basis is None:
            sub = F.subfield(l)
            basis = [1, next(a for a in sub if a > 1)]
        cert = construct_union_cosets(F, l, basis, m)
        H = p ** len(basis)
        assert compute_G(cert.g) == (F.q - H) // (m * H)
    with pytest.raises(NotSubspace):
        construct_union_cosets(field_create(2, 4), 2, [1], 3)


def test_dickson_gf8():
    F = field_create(2, 3)
    cert = construct_dickson(F, 3, 1)
    assert cert.L == 8 // 6
    assert len(cert.roots) == 2
    with pytest.raises(PreconditionFailed):
        construct_dickson(field_create(2, 4), 3, 1)


@pytest.mark.parametrize("s,m", [(3, 3), (5, 3), (5, 11), (7, 3)])
def test_dickson_root_count(s, m):
    F = field_create(2, s)
    if (F.q + 1) % m:
        pytest.skip("q is not -1 mod m")
    for a in (1, 2, F.q - 1):
        cert = construct_dickson(F, m, a)
        assert len(cert.roots) == (m + 1) // 2
        assert cert.L == F.q // (2 * m)


def test_cubic_shifted():
    F = field_create(11)
    cert = construct_cubic_shifted(F, 1)
    assert cert.L == 2
    assert cert.g1.degree == 1 and cert.g2.degree == 2
    with pytest.raises(PreconditionFailed):
        construct_cubic_shifted(field_create(13), 1)
    with pytest.raises(PreconditionFailed):
        construct_cubic_shifted(F, 2)  # 2 is a non-square mod 11


def test_constructors_self_verify():
    certs = [
        construct_multiplicative(field_create(13), 3, 1),
        construct_additive(field_create(2, 3), [1, 2], 2),
        construct_union_cosets(field_create(3, 3), 1, [1], 2),
        construct_dickson(field_create(2, 3), 3, 5),
        construct_cubic_shifted(field_create(17), 4),
    ]
    for cert in certs:
        assert verify_cert(cert).ok
        assert GoodPolyCert.from_json(cert.to_json()).to_json() == cert.to_json()


def test_verify_detects_moved_element():
    cert = construct_multiplicative(field_create(17), 4)
    a, b = list(cert.sets[0]), list(cert.sets[1])
    a[0], b[0] = b[0], a[0]
    bad = dataclasses.replace(cert, sets=(tuple(a), tuple(b)) + cert.sets[2:])
    report = verify_cert(bad)
    assert not report.ok and report.violation == "SetsNotFibers"


def test_verify_detects_bad_root_and_split():
    F = field_create(17)
    cert = construct_multiplicative(F, 4, 1)
    assert verify_cert(dataclasses.replace(cert, roots=(1,))).violation in ("NotARoot", "RootInSet")
    bad = dataclasses.replace(cert, split=(Poly.x(F), Poly.monomial(F, 2)))
    assert verify_cert(bad).violation == "BadSplit"
