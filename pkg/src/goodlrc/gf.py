"""Arithmetic in GF(p^s).

Elements are plain integers in ``[0, q)``: the element
``c_0 + c_1 x + ... + c_{s-1} x^{s-1}`` (reduced modulo the field modulus) is
stored as ``c_0 + c_1 p + ... + c_{s-1} p^{s-1}``.  All scalar methods take and
return these integer codes; :class:`FieldElement` is a thin operator-friendly
wrapper for interactive use.

Multiplication goes through exp/log tables relative to the field generator,
so a field is fully built on construction and immutable afterwards.  The
``v*`` methods are numpy-vectorized versions used by the search routines.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DivisionByZero,
    DlogOfZero,
    EvenCharacteristic,
    FieldMismatch,
    NonPrimeCharacteristic,
    OrderNotDividing,
    ReducibleModulus,
)

# Exhaustive verifiers refuse fields larger than this.
MAX_EXHAUSTIVE_Q = 2 ** 20

_ADD_TABLE_MAX_Q = 1024


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- GF(p)[x] helpers, coefficient lists low-to-high ---------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(a, b, p):
    a = list(a)
    b = _trim(list(b))
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] * inv_lead % p
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
    return _trim(quot), a


def _pmulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _pdivmod(_trim(prod), m, p)[1]


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def is_irreducible(modulus, p):
    """Irreducibility over GF(p) of a monic polynomial (low-to-high coefficients).

    A degree-s polynomial is irreducible iff it has no factor of degree at most
    s // 2, i.e. iff gcd(f, x^(p^i) - x) = 1 for i = 1 .. s // 2.
    """
    f = _trim([c % p for c in modulus])
    s = len(f) - 1
    if s < 1:
        return False
    if s == 1:
        return True
    xpow = [0, 1]
    for _ in range(s // 2):
        # xpow <- xpow^p mod f
        base, acc, e = xpow, [1], p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, f, p)
            base = _pmulmod(base, base, f, p)
            e >>= 1
        xpow = acc
        diff = list(xpow) + [0] * max(0, 2 - len(xpow))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(f, _trim(diff), p)) > 1:
            return False
    return True


def least_irreducible(p, s):
    """Lexicographically least monic irreducible of degree s over GF(p).

    Candidates are scanned with the coefficient tuple (c_{s-1}, ..., c_0) in
    ascending order.
    """
    for n in range(p ** s):
        coeffs = [(n // p ** i) % p for i in range(s)]
        if is_irreducible(coeffs + [1], p):
            return tuple(coeffs + [1])
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The finite field GF(p^s) with a fixed modulus and generator."""

    def __init__(self, p, s=1, modulus=None, generator=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if s < 1:
            raise ValueError("extension degree must be at least 1")
        self.p = p
        self.s = s
        self.q = p ** s
        if s == 1:
            # placeholder modulus x; elements are residues mod p
            self.modulus = (0, 1)
        elif modulus is None:
            self.modulus = least_irreducible(p, s)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != s + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {s}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {list(modulus)} factors over GF({p})")
            self.modulus = modulus
        self._digits_pow = [p ** i for i in range(s)]
        if generator is None:
            generator = self._least_primitive()
        elif self._slow_order(generator) != self.q - 1:
            raise ValueError(f"{generator} is not a primitive element")
        self.generator = int(generator)
        self._build_tables()

    # -- construction helpers ---------------------------------------------

    def to_digits(self, a):
        return [(a // pw) % self.p for pw in self._digits_pow]

    def from_digits(self, digits):
        return sum((int(c) % self.p) * pw for c, pw in zip(digits, self._digits_pow))

    def _slow_mul(self, a, b):
        if self.s == 1:
            return a * b % self.p
        da = _trim(self.to_digits(a))
        db = _trim(self.to_digits(b))
        return self.from_digits(_pmulmod(da, db, list(self.modulus), self.p))

    def _slow_pow(self, a, e):
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return acc

    def _slow_order(self, a):
        if not 0 < a < self.q:
            return 0
        order = self.q - 1
        for f in prime_factors(self.q - 1):
            while order % f == 0 and self._slow_pow(a, order // f) == 1:
                order //= f
        return order

    def _least_primitive(self):
        start = self.p if self.s > 1 else 1
        for c in range(start, self.q):
            if self._slow_order(c) == self.q - 1:
                return c
        raise AssertionError("field has no primitive element")  # pragma: no cover

    def _build_tables(self):
        q = self.q
        n = q - 1
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        g, e = self.generator, 1
        for i in range(n):
            exp[i] = e
            log[e] = i
            e = self._slow_mul(e, g)
        exp[n:] = exp[:n]
        self.exp_table = exp
        self.log_table = log
        self._exp = exp.tolist()
        self._log = log.tolist()
        self._digit_array = None
        self.add_table = None
        if self.s > 1 and self.p != 2 and q <= _ADD_TABLE_MAX_Q:
            el = np.arange(q)
            self.add_table = self.vadd(el[:, None], el[None, :])
            self._add_list = self.add_table.tolist()

    # -- identity / serialization -------------------------------------------

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.s, self.modulus, self.generator) == (
            other.p, other.s, other.modulus, other.generator)

    def __hash__(self):
        return hash((self.p, self.s, self.modulus, self.generator))

    def __repr__(self):
        return f"GF({self.p}^{self.s})" if self.s > 1 else f"GF({self.p})"

    def to_json(self):
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus),
                "generator": self.generator}

    @classmethod
    def from_json(cls, data):
        return field_create(data["p"], data.get("s", 1), data.get("modulus"),
                            data.get("generator"))

    def __call__(self, value):
        return FieldElement(self, self.check(value))

    def check(self, a):
        if isinstance(a, FieldElement):
            if a.field != self:
                raise FieldMismatch(f"element of {a.field} used in {self}")
            return a.value
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element code of {self}")
        return a

    # -- scalar arithmetic on codes -----------------------------------------

    def add(self, a, b):
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self._add_list[a][b]
        p = self.p
        return sum(((a // pw + b // pw) % p) * pw for pw in self._digits_pow)

    def neg(self, a):
        if self.s == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        return sum((-(a // pw) % p) * pw for pw in self._digits_pow)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n):
        """Image of the integer n under Z -> GF(p)."""
        return n % self.p

    # -- structure ------------------------------------------------------------

    def elements(self):
        """All q elements in ascending code order (0 first)."""
        return list(range(self.q))

    def log(self, a):
        """Discrete logarithm to the base of the generator, in [0, q-1)."""
        if a == 0:
            raise DlogOfZero("discrete log of zero")
        return self._log[a]

    def exp(self, k):
        return self._exp[k % (self.q - 1)]

    def order(self, a):
        if a == 0:
            raise DlogOfZero("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(self._log[a], self.q - 1)

    def quadratic_character(self, c):
        if self.p == 2:
            raise EvenCharacteristic("quadratic character needs odd characteristic")
        if c == 0:
            return 0
        return 1 if self.pow(c, (self.q - 1) // 2) == 1 else -1

    def roots_of_unity(self, m):
        """The m solutions of x^m = 1, as powers of generator^((q-1)/m)."""
        if m < 1 or (self.q - 1) % m:
            raise OrderNotDividing(f"{m} does not divide q - 1 = {self.q - 1}")
        step = (self.q - 1) // m
        return [self._exp[i * step] for i in range(m)]

    def subfield(self, l):
        """Elements of the subfield GF(p^l), ascending."""
        ql = self.p ** l
        return [a for a in range(self.q) if self.pow(a, ql) == a]

    def format(self, a, symbol="u"):
        """Display an element as a generator power (0, 1, u, u^k)."""
        if a == 0:
            return "0"
        k = self._log[a]
        if k == 0:
            return "1"
        return symbol if k == 1 else f"{symbol}^{k}"

    # -- vectorized arithmetic ---------------------------------------------------

    def _digits_of(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // pw) % self.p for pw in self._digits_pow]

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.s == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if self.add_table is not None:
            return self.add_table[a, b]
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._digits_pow:
            out += (((a // pw) % self.p + (b // pw) % self.p) % self.p) * pw
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.s == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        out = np.zeros_like(a)
        for pw in self._digits_pow:
            out += ((-((a // pw) % self.p)) % self.p) * pw
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        a, b = np.broadcast_arrays(a, b)
        out = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def vpow(self, a, e):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if e < 0 and np.any(a == 0):
            raise DivisionByZero("negative power of zero")
        out = self.exp_table[(self.log_table[a] * e) % (self.q - 1)]
        return np.where(a == 0, 0, out)

    def vdot(self, coeffs, rows):
        """Field linear combination sum_i coeffs[i] * rows[i] of 1-d arrays."""
        acc = np.zeros(np.asarray(rows).shape[1:], dtype=np.int64)
        for c, row in zip(coeffs, rows):
            if c:
                acc = self.vadd(acc, self.vmul(c, row))
        return acc


@functools.lru_cache(maxsize=None)
def _cached_field(p, s, modulus, generator):
    return GF(p, s, modulus, generator)


def field_create(p, s=1, modulus=None, generator=None):
    """Build (or fetch the cached) field GF(p^s).

    Without a modulus the lexicographically least monic irreducible is used;
    without a generator the least primitive element (scanning upward from the
    code of x) is used.
    """
    if modulus is not None:
        modulus = tuple(int(c) for c in modulus)
        if s == 1 and modulus == (0, 1):
            modulus = None
    if modulus is None and s > 1:
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        modulus = least_irreducible(p, s)
    if generator is not None:
        generator = int(generator)
    return _cached_field(p, s, modulus, generator)


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field, with the usual operators."""

    field: GF
    value: int

    def _other(self, b):
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise FieldMismatch(f"cannot combine elements of {self.field} and {b.field}")
            return b.value
        if isinstance(b, int):
            return self.field.from_int(b)
        return NotImplemented

    def __add__(self, b):
        v = self._other(b)
        return FieldElement(self.field, self.field.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, b):
        v = self._other(b)
        return FieldElement(self.field, self.field.sub(self.value, v))

    def __rsub__(self, b):
        v = self._other(b)
        return FieldElement(self.field, self.field.sub(v, self.value))

    def __mul__(self, b):
        v = self._other(b)
        return FieldElement(self.field, self.field.mul(self.value, v))

    __rmul__ = __mul__

    def __truediv__(self, b):
        v = self._other(b)
        return FieldElement(self.field, self.field.div(self.value, v))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def log(self):
        return self.field.log(self.value)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field}({self.value})"
