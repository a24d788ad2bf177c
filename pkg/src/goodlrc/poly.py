"""Dense univariate polynomials over a :class:`~goodlrc.gf.GF`.

Coefficients are element codes stored low-to-high with trailing zeros
stripped, so the zero polynomial has an empty coefficient tuple and degree
``-inf``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DivisionByZero, DuplicateAbscissa, FieldMismatch, ZeroPolynomial
from .gf import GF

MINUS_INFINITY = -math.inf


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        c = [field.check(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def const(cls, field, c):
        return cls(field, [c])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field, n, c=1):
        return cls(field, [0] * n + [c])

    @classmethod
    def from_roots(cls, field, roots):
        """The monic polynomial prod (x - b) over the given roots."""
        out = cls.const(field, 1)
        for b in roots:
            out = out * cls(field, [field.neg(b), 1])
        return out

    # -- basic properties -------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field}, {list(self.coeffs)})"

    def format(self, symbol="u"):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = self.field.format(c, symbol)
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def to_json(self):
        return list(self.coeffs)

    @classmethod
    def from_json(cls, field, data):
        return cls(field, data)

    # -- ring operations --------------------------------------------------

    def _same(self, other):
        if isinstance(other, int):
            return Poly.const(self.field, self.field.from_int(other))
        if not isinstance(other, Poly):
            return None
        if other.field != self.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Poly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def scale(self, c):
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative polynomial power")
        out, base = Poly.const(self.field, 1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        other = self._same(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        inv_lead = F.inv(other.lead)
        quot = [0] * max(len(rem) - dlen + 1, 0)
        for shift in range(len(rem) - dlen, -1, -1):
            c = F.mul(rem[shift + dlen - 1], inv_lead)
            if c:
                quot[shift] = c
                for i, b in enumerate(other.coeffs):
                    rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        F = self.field
        x = F.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_many(self, xs):
        """Horner evaluation at every point of an array of element codes."""
        F = self.field
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(self.coeffs):
            acc = F.vadd(F.vmul(acc, xs), c)
        return acc

    def derivative(self):
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])


def poly_eval(f: Poly, x):
    return f(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def distinct_roots(f: Poly):
    """All a in the field with f(a) = 0, ascending, by exhaustive evaluation."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial vanishes everywhere")
    values = f.eval_many(np.arange(f.field.q))
    return np.flatnonzero(values == 0).tolist()


def interpolate(field: GF, points):
    """Lagrange interpolation through (x, y) pairs; degree < len(points)."""
    xs = [field.check(x) for x, _ in points]
    ys = [field.check(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation points must have distinct x values")
    out = Poly(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = Poly.const(field, 1)
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly(field, [field.neg(xj), 1])
                den = field.mul(den, field.sub(xi, xj))
        out = out + num.scale(field.div(yi, den))
    return out


def dickson(field: GF, m, a):
    """Dickson polynomial of the first kind D_m(x, a).

    D_0 = 2, D_1 = x, D_m = x D_{m-1} - a D_{m-2}.
    """
    if m < 0:
        raise ValueError("Dickson degree must be non-negative")
    a = field.check(a)
    prev = Poly.const(field, field.from_int(2))
    if m == 0:
        return prev
    cur = Poly.x(field)
    X = Poly.x(field)
    for _ in range(m - 1):
        prev, cur = cur, X * cur - prev.scale(a)
    return cur
