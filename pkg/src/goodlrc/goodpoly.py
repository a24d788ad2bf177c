"""Good polynomials: fiber structure, root-count statistics and certificates.

A polynomial g of degree m is *good* if it is constant on several pairwise
disjoint m-subsets of the field.  Those subsets are exactly the fibers
g^{-1}(c) of full size m; the nonzero-valued ones serve as the evaluation
groups of the codes in :mod:`goodlrc.lrc`.  A :class:`GoodPolyCert` bundles g
with those groups, its distinct roots and an optional factorization
g = g2 * g1, and is the precondition object consumed by the encoders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field, replace

import numpy as np

from .errors import (
    BadSplit,
    BadTowerDegree,
    DegreeTooSmall,
    DependentBasis,
    FieldTooLarge,
    NoGoodSets,
    NotSubspace,
    OrderNotDividing,
    PreconditionFailed,
)
from .gf import GF, MAX_EXHAUSTIVE_Q
from .poly import Poly, dickson, distinct_roots


def _require_budget(field):
    if field.q > MAX_EXHAUSTIVE_Q:
        raise FieldTooLarge(f"q = {field.q} exceeds the exhaustive limit {MAX_EXHAUSTIVE_Q}")


def fibers(g: Poly):
    """Partition of the field by the value of g.

    Returns ``[(value, [elements...]), ...]`` for every attained value, values
    ascending and elements ascending within each fiber.
    """
    if g.degree < 1:
        raise DegreeTooSmall("fibers of a constant polynomial are trivial")
    _require_budget(g.field)
    values = g.eval_many(np.arange(g.field.q))
    order = np.argsort(values, kind="stable")
    sorted_vals = values[order]
    cuts = np.flatnonzero(np.diff(sorted_vals)) + 1
    out = []
    for chunk in np.split(order, cuts):
        out.append((int(values[chunk[0]]), chunk.tolist()))
    return out


def good_sets(g: Poly):
    """The full nonzero fibers of g: ``[(value, elements), ...]``."""
    m = g.degree
    return [(c, els) for c, els in fibers(g) if c != 0 and len(els) == m]


def compute_Nf(f: Poly):
    """Histogram i -> N_f(i), the number of shifts t with |roots(f + t)| = i.

    The count for t equals the size of the fiber of f over -t, so the
    histogram is read off the fiber partition; values never attained
    contribute to N_f(0).
    """
    if f.degree < 2:
        raise DegreeTooSmall("N_f is defined for degree >= 2")
    _require_budget(f.field)
    hist = {i: 0 for i in range(f.degree + 1)}
    attained = 0
    for _, els in fibers(f):
        hist[len(els)] += 1
        attained += 1
    hist[0] += f.field.q - attained
    return hist


def compute_G(f: Poly):
    return compute_Nf(f)[f.degree]


@dataclass(frozen=True)
class GoodPolyCert:
    field: GF
    g: Poly
    sets: tuple
    constants: tuple
    roots: tuple
    split: tuple | None = None
    family: str = "user"
    notes: dict = dc_field(default_factory=dict, compare=False)

    @property
    def L(self):
        return len(self.sets)

    @property
    def degree(self):
        return self.g.degree

    @property
    def g1(self):
        return self.split[0] if self.split else None

    @property
    def g2(self):
        return self.split[1] if self.split else None

    def to_json(self):
        return {
            "field": self.field.to_json(),
            "family": self.family,
            "g": self.g.to_json(),
            "sets": [list(a) for a in self.sets],
            "constants": list(self.constants),
            "roots": list(self.roots),
            "split": None if self.split is None else {
                "g1": self.split[0].to_json(), "g2": self.split[1].to_json()},
        }

    @classmethod
    def from_json(cls, data, field=None):
        if field is None:
            field = GF.from_json(data["field"])
        split = data.get("split")
        if split:
            split = (Poly(field, split["g1"]), Poly(field, split["g2"]))
        return cls(
            field=field,
            g=Poly(field, data["g"]),
            sets=tuple(tuple(a) for a in data["sets"]),
            constants=tuple(data["constants"]),
            roots=tuple(data["roots"]),
            split=split or None,
            family=data.get("family", "user"),
        )


@dataclass
class CertReport:
    ok: bool
    violation: str | None = None
    location: str | None = None

    def __bool__(self):
        return self.ok


def verify_cert(cert: GoodPolyCert) -> CertReport:
    """Re-check every certificate invariant by direct evaluation.

    Returns the first violation found, with a short location string.
    """
    F, g = cert.field, cert.g
    m = g.degree
    if m < 2:
        return CertReport(False, "DegreeTooSmall", f"deg g = {m}")
    if len(cert.constants) != len(cert.sets):
        return CertReport(False, "ConstantsLength",
                          f"{len(cert.constants)} constants for {len(cert.sets)} sets")
    seen = set()
    for i, (A, c) in enumerate(zip(cert.sets, cert.constants)):
        if len(A) != m or len(set(A)) != m:
            return CertReport(False, "SetSizeMismatch", f"set {i} has {len(set(A))} elements")
        if seen & set(A):
            return CertReport(False, "SetsNotDisjoint", f"set {i}")
        seen |= set(A)
        if c == 0:
            return CertReport(False, "ZeroConstant", f"set {i}")
        for a in A:
            if g(a) != c:
                return CertReport(False, "SetsNotFibers", f"set {i}, element {a}")
    if len(set(cert.roots)) != len(cert.roots):
        return CertReport(False, "RootsNotDistinct", "roots")
    for b in cert.roots:
        if g(b) != 0:
            return CertReport(False, "NotARoot", f"root {b}")
        if b in seen:
            return CertReport(False, "RootInSet", f"root {b}")
    if cert.split is not None:
        g1, g2 = cert.split
        if g2 * g1 != g:
            return CertReport(False, "BadSplit", "g2 * g1 != g")
    return CertReport(True)


def _checked(cert):
    report = verify_cert(cert)
    if not report:  # pragma: no cover - constructors are self-consistent
        raise AssertionError(f"constructed certificate fails: {report}")
    return cert


def cert_from_poly(g: Poly, factor_split=None, family="user") -> GoodPolyCert:
    """Certificate for g built from its full nonzero fibers and distinct roots."""
    if g.degree < 2:
        raise DegreeTooSmall("a good polynomial has degree >= 2")
    found = good_sets(g)
    if not found:
        raise NoGoodSets("g has no full-size nonzero fiber")
    if factor_split is not None:
        g1, g2 = factor_split
        if g2 * g1 != g:
            raise BadSplit("g2 * g1 does not equal g")
        factor_split = (g1, g2)
    return _checked(GoodPolyCert(
        field=g.field,
        g=g,
        sets=tuple(tuple(els) for _, els in found),
        constants=tuple(c for c, _ in found),
        roots=tuple(distinct_roots(g)),
        split=factor_split,
        family=family,
    ))


def with_split(cert: GoodPolyCert, g1: Poly) -> GoodPolyCert:
    """Attach the factorization g = (g / g1) * g1."""
    g2, rem = divmod(cert.g, g1)
    if not rem.is_zero():
        raise BadSplit("g1 does not divide g")
    return replace(cert, split=(g1, g2))


def additive_span(field: GF, basis):
    """GF(p)-span of the given elements, ascending."""
    span = {0}
    for b in basis:
        b = field.check(b)
        multiples = [field.mul(field.from_int(c), b) for c in range(field.p)]
        span = {field.add(h, t) for h in span for t in multiples}
    return sorted(span)


# -- explicit families ----------------------------------------------------------

def construct_multiplicative(field: GF, m, g1_degree=None) -> GoodPolyCert:
    """g = x^m, constant on the cosets of the order-m subgroup of F_q^*.

    With ``g1_degree`` the split g1 = x^g1_degree, g2 = x^(m - g1_degree) is
    attached, as the replica construction needs.
    """
    if m < 2:
        raise PreconditionFailed("m >= 2", f"m = {m}")
    if (field.q - 1) % m:
        raise OrderNotDividing(f"{m} does not divide q - 1 = {field.q - 1}")
    g = Poly.monomial(field, m)
    split = None
    if g1_degree is not None:
        if not 0 <= g1_degree <= m:
            raise BadSplit(f"g1 degree {g1_degree} outside [0, {m}]")
        split = (Poly.monomial(field, g1_degree), Poly.monomial(field, m - g1_degree))
    return cert_from_poly(g, split, family="mult")


def construct_additive(field: GF, H_basis, g1_degree=None) -> GoodPolyCert:
    """g = prod_{h in H}(x - h) for the additive subgroup H spanned by the basis.

    g is constant on every coset of H; the nontrivial cosets are the sets and
    H itself is the root fiber.  With ``g1_degree`` the split takes g1 as the
    product over the first g1_degree elements of H.
    """
    H = additive_span(field, H_basis)
    if len(H) != field.p ** len(H_basis):
        raise DependentBasis(f"basis {list(H_basis)} is not GF({field.p})-independent")
    if not 2 <= len(H) < field.q:
        raise PreconditionFailed("2 <= |H| < q", f"|H| = {len(H)}")
    g = Poly.from_roots(field, H)
    split = None
    if g1_degree is not None:
        if not 0 <= g1_degree <= len(H):
            raise BadSplit(f"g1 degree {g1_degree} outside [0, {len(H)}]")
        g1 = Poly.from_roots(field, H[:g1_degree])
        split = (g1, Poly.from_roots(field, H[g1_degree:]))
    return cert_from_poly(g, split, family="add")


def construct_union_cosets(field: GF, l, H_basis, m) -> GoodPolyCert:
    """g = prod_i prod_{h in H}(x + h + alpha_i), alpha_i the m-th roots of unity.

    H must be closed under multiplication by the subfield GF(p^l).  g is
    constant on the unions of m cosets H + b*alpha_i (size m|H| when b is not
    in H) and on H itself; the returned polynomial is shifted by its value on
    H, so H becomes its root set.
    """
    p, s = field.p, field.s
    if l < 1 or s % l:
        raise BadTowerDegree(f"l = {l} does not divide s = {s}")
    if m < 2:
        raise PreconditionFailed("m >= 2", f"m = {m}")
    if (p ** l - 1) % m:
        raise OrderNotDividing(f"{m} does not divide p^l - 1 = {p ** l - 1}")
    H = additive_span(field, H_basis)
    if not 2 <= len(H) < field.q:
        raise PreconditionFailed("2 <= |H| < q", f"|H| = {len(H)}")
    Hset = set(H)
    for c in field.subfield(l):
        for h in H:
            if field.mul(c, h) not in Hset:
                raise NotSubspace(f"H is not closed under multiplication by GF({p}^{l})")
    alphas = field.roots_of_unity(m)
    g = Poly.const(field, 1)
    for a in alphas:
        g = g * Poly.from_roots(field, [field.neg(field.add(h, a)) for h in H])
    shifted = g - Poly.const(field, g(0))
    cert = cert_from_poly(shifted, family="union")
    cert.notes.update(H=H, unshifted=g.to_json(), shift=g(0))
    return cert


def construct_dickson(field: GF, m, a) -> GoodPolyCert:
    """f = D_m(x, a) - D_m(0, a) over a field of even order with q = -1 mod m."""
    q = field.q
    a = field.check(a)
    if q % 2:
        raise PreconditionFailed("q even", f"q = {q}")
    if m <= 2 or m % 2 == 0:
        raise PreconditionFailed("m > 2 odd", f"m = {m}")
    if math.gcd(m, q) != 1:
        raise PreconditionFailed("gcd(m, q) = 1", f"gcd = {math.gcd(m, q)}")
    if (q + 1) % m:
        raise PreconditionFailed("q = -1 mod m", f"q mod m = {q % m}")
    if a == 0:
        raise PreconditionFailed("a nonzero")
    D = dickson(field, m, a)
    f = D - Poly.const(field, D(0))
    return cert_from_poly(f, family="dickson")


def construct_cubic_shifted(field: GF, a1) -> GoodPolyCert:
    """Shifted cubic g = f - f(x0), f = x^3 + a1 x, split as (x - x0) * g2.

    x0 is the least element outside every size-3 fiber of f.
    """
    q = field.q
    a1 = field.check(a1)
    if q % 6 != 5:
        raise PreconditionFailed("q = 5 mod 6", f"q mod 6 = {q % 6}")
    if field.quadratic_character(a1) != 1:
        raise PreconditionFailed("a1 is a nonzero square", f"a1 = {a1}")
    f = Poly(field, [0, a1, 0, 1])
    covered = set()
    for _, els in fibers(f):
        if len(els) == 3:
            covered.update(els)
    x0 = next(x for x in range(q) if x not in covered)
    g = f - Poly.const(field, f(x0))
    g1 = Poly(field, [field.neg(x0), 1])
    g2, rem = divmod(g, g1)
    assert rem.is_zero()
    cert = cert_from_poly(g, (g1, g2), family="cubic")
    cert.notes.update(x0=x0)
    return cert

