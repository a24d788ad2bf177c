"""(r, delta)-locally repairable codes from good polynomials.

Three variants share one encoder:

``A``
    g = (x - b_1)...(x - b_s) g1 with s >= delta distinct roots.  Codeword is
    (S(b_1), ..., S(b_s); F(a) for a in A_1, ..., A_L) where S carries the
    first r - v message symbols and F = S g1 + sum I_ij x^i g^j.
``B``
    g = g2 g1 with deg g1 = r - 1, deg g2 = delta.  S is the constant I_0,
    repeated delta times in front of the F values, so n can exceed q.
``TB``
    The plain evaluation code (v = 0, g1 = 1, no extra block), kept as a
    baseline.

Messages are flat vectors of length k.  Their order is the head
(I_0, ..., I_{r-v-1}) followed by the I_ij with j-major ordering
(I_01, I_11, ..., I_{r-1,1}, I_02, ...).  Internally a message position is
the pair (i, j) with j = 0 for head symbols: it multiplies x^i g1 when
j = 0 and x^i g^j otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegreeMismatch,
    DeltaTooSmall,
    IndexOutOfRange,
    KTooLarge,
    KTooSmall,
    LengthMismatch,
    LOutOfRange,
    MissingSplit,
    RankDeficient,
    RTooSmall,
    ShapeMismatch,
    SplitDegreeMismatch,
    TooFewRoots,
    UnknownVariant,
    VOutOfRange,
)
from .gf import GF
from .goodpoly import GoodPolyCert
from .poly import Poly

VARIANTS = ("A", "B", "TB")

SINGLETON_OPTIMAL = "SingletonOptimal"
DISTANCE_OPTIMAL_ONLY = "DistanceOptimalOnly"


def ceil_div(a, b):
    return -(-a // b)


def xi(k, v, r, i):
    """Number of g-power levels carrying x^i, for dimension k and shift v."""
    if not 0 <= i < r:
        raise IndexOutOfRange(f"i = {i} outside [0, {r})")
    kp = k + v
    if kp < r:
        raise ShapeMismatch(f"k + v = {kp} is smaller than r = {r}")
    return kp // r if i < kp % r else kp // r - 1


def layout(k, v, r):
    """Message positions as (i, j) pairs in flat order."""
    if not 0 <= v < r:
        raise ShapeMismatch(f"v = {v} outside [0, {r})")
    head = [(i, 0) for i in range(r - v)]
    levels = [xi(k, v, r, i) for i in range(r)]
    body = [(i, j) for j in range(1, max(levels) + 1) for i in range(r) if levels[i] >= j]
    if len(head) + len(body) != k:
        raise ShapeMismatch(f"layout has {len(head) + len(body)} positions, expected {k}")
    return head + body


def singleton_bound(n, k, r, delta):
    return n - k - (ceil_div(k, r) - 1) * (delta - 1) + 1


def improved_bound(n, k, r, delta, v):
    """Distance bound for codes with one repair group short by v symbols."""
    return n - k - (ceil_div(k + v, r) - 1) * (delta - 1) + 1


def congruence_condition(n, k, r, delta):
    return 1 <= k % r <= (n + r) % (r + delta - 1)


@dataclass(frozen=True)
class LrcParams:
    field: GF
    variant: str
    r: int
    delta: int
    k: int
    cert: GoodPolyCert
    L: int
    s: int
    v: int
    n: int
    g1: Poly
    roots: tuple

    @property
    def k_prime(self):
        return self.k + self.v

    @property
    def local_size(self):
        return self.r + self.delta - 1

    @property
    def positions(self):
        return layout(self.k, self.v, self.r)

    @property
    def sets(self):
        return self.cert.sets[: self.L]

    @property
    def top_level(self):
        """Highest power of g that can occur in an evaluation polynomial."""
        return ceil_div(self.k_prime, self.r) - 1

    def to_json(self):
        return {"variant": self.variant, "r": self.r, "delta": self.delta,
                "k": self.k, "L": self.L, "cert": self.cert.to_json()}


def validate(field, variant, r, delta, k, cert, L=None) -> LrcParams:
    """Check every parameter inequality and derive s, v, n and g1."""
    if variant not in VARIANTS:
        raise UnknownVariant(f"variant {variant!r} not in {VARIANTS}")
    if cert.field != field:
        raise DegreeMismatch("certificate is over a different field")
    if r < 2:
        raise RTooSmall(f"r = {r} < 2")
    if delta < 2:
        raise DeltaTooSmall(f"delta = {delta} < 2")
    m = r + delta - 1
    if cert.g.degree != m:
        raise DegreeMismatch(f"deg g = {cert.g.degree} but r + delta - 1 = {m}")
    if L is None:
        L = cert.L
    if not 1 <= L <= cert.L:
        raise LOutOfRange(f"L = {L} outside [1, {cert.L}]")

    if variant == "A":
        roots = tuple(cert.roots)
        s = len(roots)
        if s < delta:
            raise TooFewRoots(f"g has {s} distinct roots, need at least delta = {delta}")
        v = m - s
        if not 1 <= v <= r - 1:
            raise VOutOfRange(f"v = r + delta - 1 - s = {v} outside [1, r - 1 = {r - 1}]")
        g1, rem = divmod(cert.g, Poly.from_roots(field, roots))
        assert rem.is_zero()
        kmax = L * r + s - delta + 1
        kmax_text = f"Lr + s - delta + 1 = {kmax}"
    elif variant == "B":
        if cert.split is None:
            raise MissingSplit("variant B needs a factor split g = g2 * g1")
        g1, g2 = cert.split
        if g1.degree != r - 1 or g2.degree != delta:
            raise SplitDegreeMismatch(
                f"split degrees ({g1.degree}, {g2.degree}), need (r - 1, delta) = ({r - 1}, {delta})")
        roots = ()
        s, v = delta, r - 1
        kmax = L * r + 1
        kmax_text = f"Lr + 1 = {kmax}"
    else:
        roots = ()
        s, v = 0, 0
        g1 = Poly.const(field, 1)
        kmax = L * r
        kmax_text = f"Lr = {kmax}"

    if k < r:
        raise KTooSmall(f"k = {k} < r = {r}")
    if k > kmax:
        raise KTooLarge(f"k = {k} exceeds {kmax_text}")
    return LrcParams(field=field, variant=variant, r=r, delta=delta, k=k, cert=cert,
                     L=L, s=s, v=v, n=L * m + s, g1=g1, roots=roots)


def basis_polys(params: LrcParams):
    """Evaluation polynomial of each unit message, in flat order."""
    F = params.field
    g = params.cert.g
    powers = [Poly.const(F, 1)]
    out = []
    for i, j in params.positions:
        while len(powers) <= j:
            powers.append(powers[-1] * g)
        base = params.g1 if j == 0 else powers[j]
        out.append(Poly.monomial(F, i) * base)
    return out


def _check_message(params, message):
    message = [params.field.check(c) for c in message]
    if len(message) != params.k:
        raise LengthMismatch(f"message has length {len(message)}, expected k = {params.k}")
    return message


def evaluation_poly(params: LrcParams, message) -> Poly:
    """F = S g1 + sum_ij I_ij x^i g^j for a flat message."""
    message = _check_message(params, message)
    F = params.field
    out = Poly(F)
    for c, b in zip(message, basis_polys(params)):
        if c:
            out = out + b.scale(c)
    return out


def head_poly(params: LrcParams, message) -> Poly:
    """S = I_0 + I_1 x + ... + I_{r-v-1} x^{r-v-1}."""
    message = _check_message(params, message)
    return Poly(params.field, message[: params.r - params.v])


def evaluation_points(params: LrcParams):
    """Field point behind each coordinate (None for the replica block)."""
    if params.variant == "A":
        head = list(params.roots)
    elif params.variant == "B":
        head = [None] * params.delta
    else:
        head = []
    return head + [a for A in params.sets for a in A]


def repair_groups(params: LrcParams):
    """Index sets of the L evaluation groups followed by the extra block."""
    m = params.local_size
    off = params.s
    groups = [list(range(off + t * m, off + (t + 1) * m)) for t in range(params.L)]
    if params.s:
        groups.append(list(range(params.s)))
    return groups


def encode(params: LrcParams, message):
    """Codeword of a flat length-k message, by direct polynomial evaluation."""
    message = _check_message(params, message)
    Fpoly = evaluation_poly(params, message)
    main = Fpoly.eval_many([a for A in params.sets for a in A]).tolist()
    if params.variant == "A":
        S = head_poly(params, message)
        head = [S(b) for b in params.roots]
    elif params.variant == "B":
        head = [message[0]] * params.delta
    else:
        head = []
    return head + main


def claimed_distance(params: LrcParams):
    return improved_bound(params.n, params.k, params.r, params.delta, params.v)


def optimality_class(params: LrcParams):
    """Classify by equality of the improved and Singleton-type bounds.

    Returns ``(class, congruence_holds)``; the congruence test is reported
    separately because it is only a sufficient condition.
    """
    n, k, r, d = params.n, params.k, params.r, params.delta
    improved = improved_bound(n, k, r, d, params.v)
    singleton = singleton_bound(n, k, r, d)
    assert improved <= singleton
    cls = SINGLETON_OPTIMAL if improved == singleton else DISTANCE_OPTIMAL_ONLY
    return cls, congruence_condition(n, k, r, d)


def matrix_rank(field: GF, rows):
    """Rank over the field by Gaussian elimination."""
    M = np.array(rows, dtype=np.int64, copy=True)
    if M.size == 0:
        return 0
    rank = 0
    nrows, ncols = M.shape
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if M[i, col]), None)
        if pivot is None:
            continue
        M[[rank, pivot]] = M[[pivot, rank]]
        M[rank] = field.vmul(field.inv(int(M[rank, col])), M[rank])
        for i in range(nrows):
            if i != rank and M[i, col]:
                factor = field.neg(int(M[i, col]))
                M[i] = field.vadd(M[i], field.vmul(factor, M[rank]))
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass
class CodeInstance:
    params: LrcParams
    genmatrix: np.ndarray
    groups: list
    points: list
    claimed_d: int
    provenance: str

    @property
    def field(self):
        return self.params.field

    @property
    def n(self):
        return self.genmatrix.shape[1]

    @property
    def k(self):
        return self.genmatrix.shape[0]

    def encode(self, message):
        """Codeword via the generator matrix."""
        message = _check_message(self.params, message)
        return self.field.vdot(message, self.genmatrix).tolist()

    def bounds(self):
        p = self.params
        return {
            "singleton": singleton_bound(p.n, p.k, p.r, p.delta),
            "improved": improved_bound(p.n, p.k, p.r, p.delta, p.v),
            "claimed": self.claimed_d,
        }

    def summary(self):
        cls, _ = optimality_class(self.params)
        return f"[{self.n},{self.k},{self.claimed_d}] {cls}"

    def to_json(self):
        cls, congruence = optimality_class(self.params)
        return {
            "params": self.params.to_json(),
            "n": self.n,
            "k": self.k,
            "s": self.params.s,
            "v": self.params.v,
            "genmatrix": self.genmatrix.tolist(),
            "groups": self.groups,
            "points": self.points,
            "claimed_d": self.claimed_d,
            "provenance": self.provenance,
            "bounds": self.bounds(),
            "optimality": cls,
            "congruence_condition": congruence,
        }

    @classmethod
    def from_json(cls, data):
        p = data["params"]
        cert = GoodPolyCert.from_json(p["cert"])
        params = validate(cert.field, p["variant"], p["r"], p["delta"], p["k"], cert, p["L"])
        return cls(params=params,
                   genmatrix=np.array(data["genmatrix"], dtype=np.int64).reshape(params.k, -1),
                   groups=[list(gr) for gr in data["groups"]],
                   points=list(data["points"]),
                   claimed_d=data["claimed_d"],
                   provenance=data.get("provenance", ""))

    def __eq__(self, other):
        if not isinstance(other, CodeInstance):
            return NotImplemented
        return (self.params.to_json() == other.params.to_json()
                and np.array_equal(self.genmatrix, other.genmatrix)
                and self.groups == other.groups and self.points == other.points
                and self.claimed_d == other.claimed_d)

    def format_matrix(self, symbol="u"):
        """Generator matrix in generator-power notation, blocks separated by |."""
        F = self.field
        cuts = {g[0] for g in self.groups if g and g[0] != 0}
        lines = []
        for row in self.genmatrix.tolist():
            cells = []
            for j, c in enumerate(row):
                if j in cuts:
                    cells.append("|")
                cells.append(F.format(c, symbol))
            lines.append(" ".join(cells))
        return "\n".join(lines)


_PROVENANCE = {
    "A": "distance formula of the root-augmented construction (v = r + delta - 1 - s)",
    "B": "distance formula of the replica construction (v = r - 1)",
    "TB": "Singleton-type bound attained by the plain evaluation code (v = 0)",
}


def generator_matrix(params: LrcParams) -> CodeInstance:
    """Rows are encodings of the unit messages in flat order; rank is verified."""
    k = params.k
    rows = []
    for t in range(k):
        e = [0] * k
        e[t] = 1
        rows.append(encode(params, e))
    G = np.array(rows, dtype=np.int64)
    if matrix_rank(params.field, G) != k:
        raise RankDeficient(f"generator matrix has rank below k = {k}")
    return CodeInstance(params=params, genmatrix=G, groups=repair_groups(params),
                        points=evaluation_points(params), claimed_d=claimed_distance(params),
                        provenance=_PROVENANCE[params.variant])


def construct(field, variant, r, delta, k, cert, L=None) -> CodeInstance:
    return generator_matrix(validate(field, variant, r, delta, k, cert, L))
