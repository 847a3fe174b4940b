"""Exact computations with quadric nets in P^6 and pencils of skew forms on a 5-space.

Nothing here uses floating point.  Intersection points of plane conics live in
number fields ``Q[x]/(p)`` and are stored by their minimal polynomial; one
record stands for all conjugate points at once, and every certificate is a
rank computation over that field, hence valid for each conjugate.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

import sympy

from .catalog import SCHEMA
from .linalg import congruence, matvec, nullspace, rank, rref, transpose
from .numfield import NumberField, NFElement

__all__ = [
    "QuadraticForm",
    "SkewPencil",
    "AlgebraicPoint",
    "NodeReport",
    "RulingPencil",
    "RulingReport",
    "TwoPlaneNodes",
    "SkewReport",
    "DegenerateInstance",
    "corank",
    "nodes_on_vertex_plane",
    "nodes_two_corank3",
    "ruling_pencils",
    "skew_pencil_classify",
    "random_symmetric",
    "random_corank3_net",
    "random_two_corank3_net",
    "random_skew",
    "wedge",
    "skew_pencil_instance",
    "MAX_RETRIES",
]

MAX_RETRIES = 8
COEFF_RANGE = 9


def _frac(x) -> Fraction:
    return Fraction(x)


def _matrix_to_json(m) -> list[list[str]]:
    return [[str(x) for x in row] for row in m]


class DegenerateInstance(RuntimeError):
    """Raised when seeded instance generation keeps producing degenerate data."""


@dataclass(frozen=True)
class QuadraticForm:
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(_frac(x) for x in row) for row in self.matrix)
        n = len(m)
        if any(len(row) != n for row in m):
            raise ValueError("quadratic form matrix must be square")
        if any(m[i][j] != m[j][i] for i in range(n) for j in range(n)):
            raise ValueError("quadratic form matrix must be symmetric")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def rank(self) -> int:
        return rank(self.matrix)

    @classmethod
    def diagonal(cls, entries: Sequence) -> "QuadraticForm":
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_monomials(cls, n: int, terms: dict[tuple[int, int], object]) -> "QuadraticForm":
        """Form ``sum c * x_i x_j`` in ``n`` variables, e.g. ``{(0, 1): 1}`` for ``x0 x1``."""
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), c in terms.items():
            c = _frac(c)
            if i == j:
                m[i][i] += c
            else:
                m[i][j] += c / 2
                m[j][i] += c / 2
        return cls(tuple(map(tuple, m)))

    def restrict(self, basis: Sequence[Sequence]) -> list[list]:
        """Gram matrix on the span of ``basis`` (vectors given as rows)."""
        return congruence([list(r) for r in self.matrix], transpose([list(v) for v in basis]))

    def value(self, v):
        mv = matvec(self.matrix, v)
        return sum((x * y for x, y in zip(v, mv)), 0 * v[0])

    def to_json(self) -> list[list[str]]:
        return _matrix_to_json(self.matrix)

    @classmethod
    def from_json(cls, obj) -> "QuadraticForm":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in obj))


def corank(q: QuadraticForm) -> tuple[int, list[list[Fraction]]]:
    """Corank and a kernel basis (the vertex)."""
    kernel = _kernel(q.matrix)
    return len(kernel), [list(v) for v in kernel]


@functools.lru_cache(maxsize=4096)
def _kernel(matrix) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(v) for v in nullspace([list(r) for r in matrix], len(matrix)))


# ---------------------------------------------------------------- instances


def random_symmetric(rng: random.Random, n: int, lo: int = -COEFF_RANGE, hi: int = COEFF_RANGE) -> QuadraticForm:
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return QuadraticForm(tuple(map(tuple, m)))


def _random_rank4(rng: random.Random, n: int = 7) -> QuadraticForm:
    """``L^T S L`` with ``L`` a random 4 x n matrix: corank ``n - 4`` generically."""
    s = random_symmetric(rng, 4).matrix
    L = [[rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(n)] for _ in range(4)]
    return QuadraticForm(tuple(map(tuple, congruence([list(r) for r in s], L))))


def random_corank3_net(seed: int) -> tuple[QuadraticForm, QuadraticForm, QuadraticForm, int]:
    """Seeded net ``(Q1, Q2, Q3)`` with ``corank Q1 = 3``; also returns the retry count used."""
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        q1 = _random_rank4(rng)
        q2 = random_symmetric(rng, 7)
        q3 = random_symmetric(rng, 7)
        if corank(q1)[0] != 3:
            continue
        if _plane_conics_share_component(q1, q2, q3):
            continue
        return q1, q2, q3, attempt
    raise DegenerateInstance(f"seed {seed}: degenerate corank-3 net after {MAX_RETRIES} retries")


def random_two_corank3_net(seed: int) -> tuple[QuadraticForm, QuadraticForm, QuadraticForm, int]:
    """Seeded net with ``corank Q1 = corank Q2 = 3`` and disjoint vertex planes."""
    rng = random.Random(seed)
    for attempt in range(MAX_RETRIES):
        q1 = _random_rank4(rng)
        q2 = _random_rank4(rng)
        q3 = random_symmetric(rng, 7)
        if corank(q1)[0] != 3 or corank(q2)[0] != 3:
            continue
        if rank(corank(q1)[1] + corank(q2)[1]) != 6:
            continue
        if _plane_conics_share_component(q1, q2, q3) or _plane_conics_share_component(q2, q1, q3):
            continue
        return q1, q2, q3, attempt
    raise DegenerateInstance(f"seed {seed}: degenerate two-corank-3 net after {MAX_RETRIES} retries")


# ---------------------------------------------------------------- nodes


@dataclass(frozen=True)
class AlgebraicPoint:
    """A Galois orbit of points: coordinates are polynomials in a root of ``minpoly``."""

    minpoly: tuple[Fraction, ...]
    coords: tuple[tuple[Fraction, ...], ...]
    multiplicity: int
    certified: bool

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def to_json(self) -> dict:
        return {
            "minpoly": [str(c) for c in self.minpoly],
            "coords": [[str(c) for c in x] or ["0"] for x in self.coords],
            "multiplicity": self.multiplicity,
            "certified": self.certified,
        }


@dataclass(frozen=True)
class NodeReport:
    points: tuple[AlgebraicPoint, ...]
    all_nodes_certified: bool
    projection_attempts: int = 1

    @property
    def total_multiplicity(self) -> int:
        return sum(p.degree * p.multiplicity for p in self.points)

    @property
    def distinct(self) -> int:
        return sum(p.degree for p in self.points)

    @property
    def multiplicities(self) -> list[int]:
        return [p.multiplicity for p in self.points for _ in range(p.degree)]

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "distinct": self.distinct,
            "total_multiplicity": self.total_multiplicity,
            "all_nodes_certified": self.all_nodes_certified,
            "points": [p.to_json() for p in self.points],
        }


def _integral_rows(vectors) -> list[list[int]]:
    out = []
    for v in vectors:
        den = 1
        for x in v:
            den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
        row = [int(Fraction(x) * den) for x in v]
        g = 0
        for x in row:
            g = _gcd(g, x)
        out.append([x // g for x in row] if g > 1 else row)
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _plane_conics(q1: QuadraticForm, q2: QuadraticForm, q3: QuadraticForm):
    c, kernel = corank(q1)
    if c != 3:
        raise ValueError(f"precondition: corank(Q1) must be 3, got {c}")
    basis = _integral_rows(kernel)
    return basis, q2.restrict(basis), q3.restrict(basis)


_X, _Y, _Z = sympy.symbols("x y z")


def _conic_poly(m) -> sympy.Poly:
    v = (_X, _Y, _Z)
    expr = sum(sympy.Rational(m[i][j].numerator, m[i][j].denominator) * v[i] * v[j]
               for i in range(3) for j in range(3))
    return sympy.Poly(expr, _X, _Y, _Z, domain="QQ")


def _plane_conics_share_component(q1, q2, q3) -> bool:
    try:
        _, a, b = _plane_conics(q1, q2, q3)
    except ValueError:
        return False
    return _share_component(a, b)


def _share_component(a, b) -> bool:
    """Whether two plane conics have a common component.

    Once both ``z^2`` coefficients are nonzero every component involves ``z``,
    so a common component is the same as an identically vanishing resultant.
    """
    if not any(any(r) for r in a) or not any(any(r) for r in b):
        return True
    rng = random.Random(0)
    while True:
        t = _random_unimodular3(rng)
        a2, b2 = congruence(a, t), congruence(b, t)
        if a2[2][2] != 0 and b2[2][2] != 0:
            return _z_resultant(a2, b2)[0].is_zero


def _random_unimodular3(rng: random.Random) -> list[list[int]]:
    while True:
        t = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if rank(t) == 3:
            return t


def _node_certificate(q1, q2, q3, p: list[NFElement]) -> bool:
    """``dQ2, dQ3`` independent at ``p`` and ``Q1`` of rank 4 on ``T_p{Q2 = Q3 = 0}``."""
    for prime, root in _residue_maps(p[0].field, p):
        red = lambda x: _reduce_mod(x, prime, root)
        pt = [red(x) for x in p]
        mats = [[[_reduce_mod(x, prime, 0) for x in row] for row in q.matrix] for q in (q1, q2, q3)]
        if _certify_mod_p(*mats, pt, prime):
            return True
    return _node_certificate_exact(q1, q2, q3, p)


def _node_certificate_exact(q1, q2, q3, p: list[NFElement]) -> bool:
    g2 = matvec(q2.matrix, p)
    g3 = matvec(q3.matrix, p)
    if rank([g2, g3]) != 2:
        return False
    tangent = nullspace([g2, g3])
    h = congruence([list(r) for r in q1.matrix], transpose(tangent))
    return rank(h) == 4


# A nonzero minor modulo a prime ideal of degree one is nonzero over the field,
# so full rank after reduction certifies full rank; failure falls back to exact
# arithmetic.
_PRIMES = (10007, 10009, 10037, 10039, 10061, 10067, 10069, 10079)


def _residue_maps(K: NumberField, values: list[NFElement]):
    dens = [c.denominator for v in values for c in v.coeffs] + [c.denominator for c in K.minpoly]
    for prime in _PRIMES:
        if any(int(d) % prime == 0 for d in dens):
            continue
        mp = [int(c.numerator) * pow(int(c.denominator), -1, prime) % prime for c in K.minpoly]
        for r in range(prime):
            acc = 0
            for c in reversed(mp):
                acc = (acc * r + c) % prime
            if acc == 0:
                yield prime, r
                break


def _reduce_mod(x, prime: int, root: int) -> int:
    coeffs = x.coeffs if isinstance(x, NFElement) else (x,)
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * root + int(c.numerator) * pow(int(c.denominator), -1, prime)) % prime
    return acc


def _rank_mod(m: list[list[int]], prime: int) -> tuple[int, list[list[int]], list[int]]:
    """Rank and reduced rows (pivot columns first) over ``F_p``."""
    m = [list(r) for r in m]
    rows, cols = len(m), len(m[0])
    r, pivots = 0, []
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] % prime), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, prime)
        m[r] = [x * inv % prime for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] % prime:
                f = m[i][c]
                m[i] = [(x - f * y) % prime for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return r, m[:r], pivots


def _certify_mod_p(q1, q2, q3, pt, prime) -> bool:
    mv = lambda q: [sum(a * b for a, b in zip(row, pt)) % prime for row in q]
    g = [mv(q2), mv(q3)]
    r, red, pivots = _rank_mod(g, prime)
    if r != 2:
        return False
    n = len(pt)
    free = [c for c in range(n) if c not in pivots]
    tangent = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][f] % prime
        tangent.append(v)
    h = [[sum(u[i] * q1[i][j] * w[j] for i in range(n) for j in range(n)) % prime for w in tangent]
         for u in tangent]
    return _rank_mod(h, prime)[0] == 4


def nodes_on_vertex_plane(q1: QuadraticForm, q2: QuadraticForm, q3: QuadraticForm,
                          seed: int = 0) -> NodeReport:
    """Singular points of ``Q1 = Q2 = Q3 = 0`` on the vertex plane of ``Q1``.

    The two conics ``Q2|P``, ``Q3|P`` are intersected by eliminating ``z``
    after a seeded generic change of coordinates; the projection is retried
    until each root of the resultant lifts to a unique point.
    """
    if not (q1.dim == q2.dim == q3.dim):
        raise ValueError("forms must have the same dimension")
    basis, a, b = _plane_conics(q1, q2, q3)
    if _share_component(a, b):
        raise ValueError("non-isolated singularities: the plane conics share a component")

    rng = random.Random(seed)
    best = None
    for attempt in range(1, MAX_RETRIES + 1):
        t = _random_unimodular3(rng)
        res = _intersect_projected(a, b, t)
        if res is None:
            continue
        if best is None or sum(deg for deg, *_ in res) > sum(deg for deg, *_ in best[1]):
            best = (attempt, res, t)
        if all(mult == 1 for _, mult, *_ in res) or attempt >= 3:
            break
    if best is None:
        raise DegenerateInstance("no admissible projection found for the conic intersection")
    attempt, res, t = best

    points = []
    for deg, mult, K, xyz in res:
        plane_pt = [sum((t[i][j] * xyz[j] for j in range(3)), K(0)) for i in range(3)]
        pt = [sum((basis[k][i] * plane_pt[k] for k in range(3)), K(0)) for i in range(len(basis[0]))]
        if q2.value(pt) != 0 or q3.value(pt) != 0 or any(matvec(q1.matrix, pt)):
            raise ArithmeticError("intersection point failed verification")
        cert = mult == 1 and _node_certificate(q1, q2, q3, pt)
        points.append(AlgebraicPoint(K.minpoly_fractions(), tuple(x.as_fractions() for x in pt), mult, cert))
    total = sum(p.degree * p.multiplicity for p in points)
    if total != 4:
        raise ArithmeticError(f"Bezout violated: total multiplicity {total}")
    return NodeReport(tuple(points), all(p.certified for p in points), attempt)


def _z_resultant(a2, b2):
    """``Res_z`` of two conics at ``y = 1`` plus the rational function giving ``z``.

    Each conic is ``A z^2 + B z + C`` with ``A`` constant; eliminating ``z^2``
    leaves a linear equation for ``z``.
    """
    x = sympy.Poly(_X, _X, domain="QQ")

    def coeffs(m):
        q = lambda v: sympy.Rational(v.numerator, v.denominator)
        A = sympy.Poly(q(m[2][2]), _X, domain="QQ")
        B = 2 * (q(m[0][2]) * x + q(m[1][2]))
        C = q(m[0][0]) * x ** 2 + 2 * q(m[0][1]) * x + q(m[1][1])
        return A, B, C

    A, B, C = coeffs(a2)
    A2, B2, C2 = coeffs(b2)
    res = (A * C2 - A2 * C) ** 2 - (A * B2 - A2 * B) * (B * C2 - B2 * C)
    return res, -(A2 * C - A * C2), A2 * B - A * B2


def _intersect_projected(a, b, t):
    """Roots of the resultant after the coordinate change ``t``, lifted to points.

    Returns ``[(degree, multiplicity, field, (x, y, z))]`` or ``None`` if this
    projection is not generic enough.
    """
    a2 = congruence(a, t)
    b2 = congruence(b, t)
    if a2[2][2] == 0 or b2[2][2] == 0:
        return None
    res, znum, zden = _z_resultant(a2, b2)
    if res.is_zero:
        return None
    if res.degree() != 4:
        return None  # an intersection point on y = 0
    out = []
    _, factors = res.factor_list()
    for fac, mult in factors:
        fac = fac.monic()
        if fac.degree() < 1:
            continue
        mp = tuple(Fraction(int(c.p), int(c.q)) for c in reversed(fac.all_coeffs()))
        K = NumberField(mp)
        theta = K.gen()

        def ev(p):
            cs = [Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())]
            acc = K(0)
            for c in reversed(cs):
                acc = acc * theta + c
            return acc

        den = ev(zden)
        if not den:
            return None
        z = ev(znum) / den
        out.append((fac.degree(), mult, K, (theta, K(1), z)))
    return out


@dataclass(frozen=True)
class TwoPlaneNodes:
    """Nodes on the vertex planes of ``Q1`` and ``Q2``.

    ``shared`` counts points lying on both planes; they are counted once and
    force ``all_nodes_certified`` to false.
    """

    count: int
    first: NodeReport
    second: NodeReport
    shared: int = 0

    @property
    def all_nodes_certified(self) -> bool:
        return self.first.all_nodes_certified and self.second.all_nodes_certified and not self.shared

    def __int__(self) -> int:
        return self.count

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "count": self.count, "shared": self.shared,
                "all_nodes_certified": self.all_nodes_certified,
                "planes": [self.first.to_json(), self.second.to_json()]}


def nodes_two_corank3(q1: QuadraticForm, q2: QuadraticForm, q3: QuadraticForm,
                      seed: int = 0) -> TwoPlaneNodes:
    """Nodes on both vertex planes; the count is 8 for general nets."""
    if q1 == q2:
        raise ValueError("Q1 and Q2 coincide")
    c1, k1 = corank(q1)
    c2, k2 = corank(q2)
    if c1 != 3 or c2 != 3:
        raise ValueError("precondition: corank(Q1) = corank(Q2) = 3")
    meet = 6 - rank(k1 + k2)
    if meet >= 2:
        raise ValueError("vertex planes of Q1 and Q2 share a line")
    r1 = nodes_on_vertex_plane(q1, q2, q3, seed)
    r2 = nodes_on_vertex_plane(q2, q1, q3, seed)
    shared = 0
    if meet == 1:
        common = nullspace([list(v) for v in nullspace(k1, 7)] + [list(v) for v in nullspace(k2, 7)], 7)
        if q3.value(common[0]) == 0:
            shared = 1
    return TwoPlaneNodes(r1.distinct + r2.distinct - shared, r1, r2, shared)


# ---------------------------------------------------------------- rulings


@dataclass(frozen=True)
class RulingPencil:
    """Pencil of 4-planes ``vertex + <t0*a0 + t1*a1, t0*b0 + t1*b1>``."""

    vertex: tuple[tuple[Fraction, ...], ...]
    a: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]
    b: tuple[tuple[Fraction, ...], tuple[Fraction, ...]]

    def member(self, t0, t1) -> list[list[Fraction]]:
        la = [t0 * x + t1 * y for x, y in zip(*self.a)]
        lb = [t0 * x + t1 * y for x, y in zip(*self.b)]
        return [list(v) for v in self.vertex] + [la, lb]

    def to_json(self) -> dict:
        return {"vertex": _matrix_to_json(self.vertex), "a": _matrix_to_json(self.a),
                "b": _matrix_to_json(self.b)}


@dataclass(frozen=True)
class RulingReport:
    rational: bool
    discriminant: Fraction
    pencils: tuple[RulingPencil, ...] = ()
    extension_degree: int = 1
    field: str = "Q"

    @property
    def message(self) -> str:
        if self.rational:
            return "two pencils"
        return f"irrational rulings, extension degree {self.extension_degree}"

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "rational": self.rational, "message": self.message,
                "discriminant": str(self.discriminant), "field": self.field,
                "pencils": [p.to_json() for p in self.pencils]}


def _diagonalize(m: list[list[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Orthogonal basis (rows) of a nondegenerate form and its diagonal."""
    n = len(m)
    vecs = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    bil = lambda u, v: sum(u[i] * m[i][j] * v[j] for i in range(n) for j in range(n))
    out, diag = [], []
    while vecs:
        piv = next((v for v in vecs if bil(v, v) != 0), None)
        if piv is None:
            u, w = next((u, w) for u, w in itertools.combinations(vecs, 2) if bil(u, w) != 0)
            piv = [x + y for x, y in zip(u, w)]
            vecs.remove(u)
            vecs.append(piv)
            vecs.remove(piv)
        else:
            vecs.remove(piv)
        d = bil(piv, piv)
        out.append(piv)
        diag.append(d)
        vecs = [[x - bil(v, piv) / d * y for x, y in zip(v, piv)] for v in vecs]
        vecs = [v for v in vecs if any(v)]
    return diag, out


def _squarefree_int(q: Fraction) -> int:
    """Squarefree integer in the square class of ``q``."""
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= p
    return sign * out


def _is_square(q: Fraction) -> bool:
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def _hilbert(a: int, b: int, p: int) -> int:
    """Hilbert symbol ``(a, b)_p`` for nonzero integers; ``p = 0`` means the real place."""
    if p == 0:
        return -1 if a < 0 and b < 0 else 1

    def split(x):
        k = 0
        while x % p == 0:
            x //= p
            k += 1
        return k, x

    alpha, u = split(a)
    beta, v = split(b)
    if p == 2:
        eps = lambda x: ((x - 1) // 2) % 2
        omega = lambda x: ((x * x - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    leg = lambda x: 1 if pow(x % p, (p - 1) // 2, p) == 1 else -1
    e = (alpha * beta * ((p - 1) // 2)) % 2
    s = (-1) ** e
    if beta % 2:
        s *= leg(u)
    if alpha % 2:
        s *= leg(v)
    return s


def _quaternion_split(a: int, b: int) -> bool:
    primes = {0, 2} | set(sympy.factorint(abs(a))) | set(sympy.factorint(abs(b)))
    return all(_hilbert(a, b, p) == 1 for p in primes)


def _find_isotropic(m: list[list[Fraction]], limit: int = 40) -> list[Fraction]:
    diag, basis = _diagonalize(m)
    a1, a2, a3, a4 = diag
    for h in range(1, limit + 1):
        for x, y, z in itertools.product(range(-h, h + 1), repeat=3):
            if max(abs(x), abs(y), abs(z)) != h:
                continue
            r = -(a1 * x * x + a2 * y * y + a3 * z * z) / a4
            if _is_square(r):
                w = Fraction(isqrt(r.numerator), isqrt(r.denominator))
                coeffs = (x, y, z, w)
                return [sum(c * v[i] for c, v in zip(coeffs, basis)) for i in range(4)]
    raise RuntimeError("no isotropic vector found within the search bound")


def ruling_pencils(q: QuadraticForm) -> RulingReport:
    """The two families of 4-planes on a rank-4 quadric in P^6."""
    if q.rank != 4:
        raise ValueError(f"ruling_pencils needs rank 4, got {q.rank}")
    n = q.dim
    _, kernel = corank(q)
    comp = []
    for i in range(n):
        e = [Fraction(int(i == j)) for j in range(n)]
        if rank(kernel + comp + [e]) > len(kernel) + len(comp):
            comp.append(e)
        if len(comp) == 4:
            break
    g = q.restrict(comp)
    diag, _ = _diagonalize(g)
    disc = diag[0] * diag[1] * diag[2] * diag[3]
    if not _is_square(disc):
        d = _squarefree_int(disc)
        return RulingReport(False, disc, (), 2, f"Q(sqrt({d}))")
    a1, a2, a3, _ = diag
    alpha = _squarefree_int(-a1 * a2)
    beta = _squarefree_int(-a1 * a3)
    if not _quaternion_split(alpha, beta):
        return RulingReport(False, disc, (), 2, f"splitting field of ({alpha},{beta})")

    bil = lambda u, v: sum(u[i] * g[i][j] * v[j] for i in range(4) for j in range(4))
    v1 = _find_isotropic(g)
    w1 = next(e for e in ([Fraction(int(i == j)) for j in range(4)] for i in range(4)) if bil(v1, e) != 0)
    s = bil(v1, w1)
    w1 = [x / s for x in w1]
    c = bil(w1, w1) / 2
    w1 = [x - c * y for x, y in zip(w1, v1)]
    perp = nullspace([[sum(g[i][j] * u[j] for j in range(4)) for i in range(4)] for u in (v1, w1)])
    pm = [[bil(u, v) for v in perp] for u in perp]
    # binary form with square -det: find a root
    p0, p1, p2 = pm[0][0], pm[0][1], pm[1][1]
    if p0 == 0:
        v2 = perp[0]
    else:
        root = Fraction(isqrt((p1 * p1 - p0 * p2).numerator), isqrt((p1 * p1 - p0 * p2).denominator))
        lam = (-p1 + root) / p0
        v2 = [lam * x + y for x, y in zip(perp[0], perp[1])]
    w2 = next(u for u in perp if bil(v2, u) != 0)
    s = bil(v2, w2)
    w2 = [x / s for x in w2]
    c = bil(w2, w2) / 2
    w2 = [x - c * y for x, y in zip(w2, v2)]

    lift = lambda u: tuple(sum(u[k] * comp[k][i] for k in range(4)) for i in range(n))
    V1, V2, W1, W2 = map(lift, (v1, v2, w1, w2))
    neg = lambda u: tuple(-x for x in u)
    vert = tuple(tuple(v) for v in kernel)
    # in the hyperbolic basis q = 2(X1 Y1 + X2 Y2)
    fam1 = RulingPencil(vert, (V1, V2), (neg(W2), W1))
    fam2 = RulingPencil(vert, (V1, W2), (neg(V2), W1))
    return RulingReport(True, disc, (fam1, fam2), 1, "Q")


# ---------------------------------------------------------------- skew pencils


@dataclass(frozen=True)
class SkewPencil:
    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        for name in ("A", "B"):
            m = tuple(tuple(_frac(x) for x in row) for row in getattr(self, name))
            if len(m) != 5 or any(len(r) != 5 for r in m):
                raise ValueError(f"{name} must be 5x5")
            if any(m[i][j] != -m[j][i] for i in range(5) for j in range(5)):
                raise ValueError(f"{name} is not antisymmetric")
            object.__setattr__(self, name, m)

    def member(self, s, t) -> list[list]:
        return [[s * a + t * b for a, b in zip(ra, rb)] for ra, rb in zip(self.A, self.B)]

    def to_json(self) -> dict:
        return {"A": _matrix_to_json(self.A), "B": _matrix_to_json(self.B)}

    @classmethod
    def from_json(cls, obj) -> "SkewPencil":
        return cls(tuple(tuple(Fraction(x) for x in r) for r in obj["A"]),
                   tuple(tuple(Fraction(x) for x in r) for r in obj["B"]))


@dataclass(frozen=True)
class SkewReport:
    case: int | None
    label: str
    rank2_members: int
    pfaffian_gcd: str
    kernel_intersection_dim: int | None = None

    @property
    def skew_lines(self) -> bool | None:
        if self.case != 3:
            return None
        return self.kernel_intersection_dim == 1

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "case": self.case, "label": self.label, "rank2_members": self.rank2_members,
                "pfaffian_gcd": self.pfaffian_gcd, "kernel_intersection_dim": self.kernel_intersection_dim,
                "skew_lines": self.skew_lines}


_S, _T = sympy.symbols("s t")


def _pf4(m, idx) -> object:
    i, j, k, l = idx
    return m[i][j] * m[k][l] - m[i][k] * m[j][l] + m[i][l] * m[j][k]


def _sym(x: Fraction):
    return sympy.Rational(x.numerator, x.denominator)


_LABELS = {
    1: "case 1: W smooth, no rank-2 member",
    2: "case 2: one rank-2 member, singular along a line",
    3: "case 3: two rank-2 members",
}


def skew_pencil_classify(p: SkewPencil) -> SkewReport:
    """Count the rank-2 members of ``sA + tB`` via the gcd of the principal 4x4 Pfaffians."""
    if rank([[x for row in p.A for x in row], [x for row in p.B for x in row]]) < 2:
        raise ValueError("A and B are proportional")
    for m in (p.A, p.B, p.member(1, 1)):
        if rank(m) % 2:
            raise ArithmeticError("odd rank for a skew-symmetric matrix")
    mat = [[_sym(a) * _S + _sym(b) * _T for a, b in zip(ra, rb)] for ra, rb in zip(p.A, p.B)]
    pfs = [sympy.Poly(sympy.expand(_pf4(mat, idx)), _S, _T, domain="QQ")
           for idx in itertools.combinations(range(5), 4)]
    nonzero = [f for f in pfs if not f.is_zero]
    if not nonzero:
        return SkewReport(None, "pencil contained in the dual variety", -1, "0")
    g = nonzero[0]
    for f in nonzero[1:]:
        g = sympy.gcd(g, f)
    g = g.monic() if g.total_degree() > 0 else sympy.Poly(1, _S, _T, domain="QQ")
    if g.total_degree() == 0:
        return SkewReport(1, _LABELS[1], 0, "1")
    sqf = sympy.sqf_part(g)
    roots = sqf.total_degree()
    if roots > 2:
        return SkewReport(None, "pencil contained in the dual variety", roots, str(g.as_expr()))
    kdim = None
    if roots == 2:
        kdim = _kernel_intersection(p, sqf)
    return SkewReport(roots + 1, _LABELS[roots + 1], roots, str(g.as_expr()), kdim)


def _kernel_intersection(p: SkewPencil, g: sympy.Poly) -> int:
    """``dim ker(M_1) cap ker(M_2)`` for the two rank-2 members (roots of ``g``)."""
    members = []
    _, factors = g.factor_list()
    for fac, _ in factors:
        c = {m: fac.coeff_monomial(m) for m in (_S ** 2, _S * _T, _T ** 2, _S, _T)}
        if fac.total_degree() == 1:
            a, b = Fraction(str(c[_S])), Fraction(str(c[_T]))
            # a s + b t = 0
            members.append((NumberField.rationals(), (-b, a) if a or b else (1, 0)))
        else:
            a2, a1, a0 = (Fraction(str(c[k])) for k in (_S ** 2, _S * _T, _T ** 2))
            if a2 == 0:
                raise ArithmeticError("unexpected quadratic factor")
            K = NumberField((a0 / a2, a1 / a2, Fraction(1)))
            th = K.gen()
            members.append((K, (th, K(1))))
            members.append((K, (-th - a1 / a2, K(1))))
    if len(members) != 2:
        raise ArithmeticError("expected two rank-2 members")
    K = members[-1][0]
    rows = []
    for _, (s, t) in members:
        s, t = K(s) if not isinstance(s, NFElement) else s, K(t) if not isinstance(t, NFElement) else t
        rows += [[s * a + t * b for a, b in zip(ra, rb)] for ra, rb in zip(p.A, p.B)]
    return 5 - rank(rows)


def random_skew(rng: random.Random, n: int = 5) -> tuple[tuple[Fraction, ...], ...]:
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-COEFF_RANGE, COEFF_RANGE)
            m[i][j], m[j][i] = Fraction(x), Fraction(-x)
    return tuple(map(tuple, m))


def wedge(u: Sequence, v: Sequence) -> tuple[tuple[Fraction, ...], ...]:
    n = len(u)
    return tuple(tuple(Fraction(u[i] * v[j] - u[j] * v[i]) for j in range(n)) for i in range(n))


def _rand_vec(rng: random.Random, n: int = 5) -> list[int]:
    return [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in range(n)]


def skew_pencil_instance(case: int, seed: int) -> SkewPencil:
    """Seeded pencil built to land in ``case`` (1, 2 or 3) for generic choices."""
    rng = random.Random(seed)
    if case == 1:
        return SkewPencil(random_skew(rng), random_skew(rng))
    if case == 2:
        return SkewPencil(wedge(_rand_vec(rng), _rand_vec(rng)), random_skew(rng))
    if case == 3:
        return SkewPencil(wedge(_rand_vec(rng), _rand_vec(rng)), wedge(_rand_vec(rng), _rand_vec(rng)))
    raise ValueError("case must be 1, 2 or 3")
