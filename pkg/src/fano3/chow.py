"""Chow rings of projectivized split bundles over the line.

For ``E = O(a_0) + ... + O(a_n)`` on P^1 the Chow ring of ``P(E)`` is generated
by the tautological class ``M`` and the fiber class ``F`` subject to

    F^2 = 0,        M^r = (a_0 + ... + a_n) M^(r-1) F,      r = n + 1.

Every homogeneous class of degree ``k`` is therefore ``x M^k + y M^(k-1) F``,
and the top degree ``r`` is spanned by the point class ``M^(r-1) F``.

Chern classes are handled as truncated power series in a formal variable ``t``
whose coefficients are homogeneous classes; this is enough to redo the
computation of Euler numbers of complete intersections by
``c(T_V) = c(T_P) / c(N_V)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "BundleSpec",
    "ChowElement",
    "ChernSeries",
    "CISpec",
    "reduce",
    "integrate",
    "chern_tangent",
    "chern_normal",
    "chern_ci_tangent",
    "euler_ci",
    "euler_closed_form",
]


@dataclass(frozen=True)
class BundleSpec:
    """Splitting type of a bundle on P^1, normalized so that ``min(twists) == 0``.

    ``shift`` records the amount subtracted during normalization, so the
    original twists are ``twists[i] + shift``.
    """

    twists: tuple[int, ...]
    shift: int = field(default=0, compare=False)

    def __init__(self, twists: Iterable[int], shift: int = 0):
        tw = sorted(int(a) for a in twists)
        if len(tw) < 2:
            raise ValueError("bundle rank must be at least 2")
        lo = tw[0]
        object.__setattr__(self, "twists", tuple(a - lo for a in tw))
        object.__setattr__(self, "shift", int(shift) + lo)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def dim(self) -> int:
        return len(self.twists)

    @property
    def c1(self) -> int:
        return sum(self.twists)

    @property
    def normalized(self) -> bool:
        """True when the constructor had to shift the twists."""
        return self.shift != 0

    def __str__(self) -> str:
        return "F[" + ",".join(str(a) for a in self.twists) + "]"

    # element constructors
    def zero(self, degree: int) -> "ChowElement":
        return ChowElement(degree, 0, 0, self)

    def one(self) -> "ChowElement":
        return ChowElement(0, 1, 0, self)

    @property
    def M(self) -> "ChowElement":
        return ChowElement(1, 1, 0, self)

    @property
    def F(self) -> "ChowElement":
        return ChowElement(1, 0, 1, self)

    def divisor(self, m: int, f: int) -> "ChowElement":
        return ChowElement(1, m, f, self)


@dataclass(frozen=True)
class ChowElement:
    """Homogeneous class ``coeff_M * M^degree + coeff_MF * M^(degree-1) F``.

    Instances are always stored in reduced form.  ``overflow`` marks the zero
    produced when a product leaves the ring (degree above ``dim``).
    """

    degree: int
    coeff_M: int
    coeff_MF: int
    ring: BundleSpec = field(repr=False)
    overflow: bool = False

    def __post_init__(self):
        d, r = self.degree, self.ring.rank
        if d < 0:
            raise ValueError("negative degree")
        if d > self.ring.dim:
            object.__setattr__(self, "degree", self.ring.dim)
            object.__setattr__(self, "coeff_M", 0)
            object.__setattr__(self, "coeff_MF", 0)
            object.__setattr__(self, "overflow", True)
            return
        a, b = int(self.coeff_M), int(self.coeff_MF)
        if d == 0:
            b = 0
        # M^(d-1) F vanishes once d-1 >= r, since M^r F = c1 M^(r-1) F^2 = 0
        if d - 1 >= r:
            b = 0
        # M^d = c1 M^(d-1) F for d >= r
        if d >= r:
            a, b = 0, b + a * self.ring.c1
        object.__setattr__(self, "coeff_M", a)
        object.__setattr__(self, "coeff_MF", b)

    def _check(self, other: "ChowElement"):
        if self.ring != other.ring:
            raise ValueError("classes live in different rings")

    def is_zero(self) -> bool:
        return self.coeff_M == 0 and self.coeff_MF == 0

    def __add__(self, other: "ChowElement") -> "ChowElement":
        self._check(other)
        if self.degree != other.degree:
            raise ValueError("cannot add classes of different degree")
        if self.overflow or other.overflow:
            return self if self.overflow else other
        return ChowElement(self.degree, self.coeff_M + other.coeff_M,
                           self.coeff_MF + other.coeff_MF, self.ring)

    def __neg__(self) -> "ChowElement":
        return ChowElement(self.degree, -self.coeff_M, -self.coeff_MF, self.ring)

    def __sub__(self, other: "ChowElement") -> "ChowElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowElement(self.degree, other * self.coeff_M, other * self.coeff_MF, self.ring)
        if not isinstance(other, ChowElement):
            return NotImplemented
        self._check(other)
        deg = self.degree + other.degree
        if deg > self.ring.dim or self.overflow or other.overflow:
            return ChowElement(self.ring.dim + 1, 0, 0, self.ring)
        # (aM^p + bM^(p-1)F)(cM^q + eM^(q-1)F) with F^2 = 0
        a, b, c, e = self.coeff_M, self.coeff_MF, other.coeff_M, other.coeff_MF
        return ChowElement(deg, a * c, a * e + b * c, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowElement":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        from .expr import format_terms

        terms = {}
        if self.coeff_M:
            terms[(self.degree, 0)] = self.coeff_M
        if self.coeff_MF:
            terms[(self.degree - 1, 1)] = self.coeff_MF
        return format_terms(terms)


def reduce(p: int, q: int, ring: BundleSpec) -> ChowElement:
    """Canonical form of the monomial ``M^p F^q``."""
    if p < 0 or q < 0:
        raise ValueError("exponents must be non-negative")
    if p + q > ring.dim:
        return ChowElement(p + q, 0, 0, ring)
    if q >= 2:
        return ring.zero(p + q)
    if q == 1:
        return ChowElement(p + 1, 0, 1, ring)
    return ChowElement(p, 1, 0, ring)


def integrate(x: ChowElement) -> int:
    """Degree of a zero-cycle, using ``M^(r-1) F = 1`` and ``M^r = c1``."""
    if x.degree != x.ring.dim or x.overflow:
        raise ValueError("not a zero-cycle")
    return x.coeff_MF + x.coeff_M * x.ring.c1


class ChernSeries:
    """Power series ``sum_k c_k t^k`` truncated above the ring dimension."""

    def __init__(self, terms: Sequence[ChowElement], ring: BundleSpec):
        self.ring = ring
        self.truncation = ring.dim
        padded = list(terms[: self.truncation + 1])
        for k in range(len(padded), self.truncation + 1):
            padded.append(ring.zero(k))
        for k, c in enumerate(padded):
            if c.degree != k:
                raise ValueError(f"term {k} has degree {c.degree}")
        self.terms = tuple(padded)

    @classmethod
    def one(cls, ring: BundleSpec) -> "ChernSeries":
        return cls([ring.one()], ring)

    @classmethod
    def linear(cls, divisor: ChowElement) -> "ChernSeries":
        """The series ``1 + D t``."""
        return cls([divisor.ring.one(), divisor], divisor.ring)

    def __getitem__(self, k: int) -> ChowElement:
        return self.terms[k]

    def __eq__(self, other) -> bool:
        return isinstance(other, ChernSeries) and self.terms == other.terms

    def __mul__(self, other: "ChernSeries") -> "ChernSeries":
        n = self.truncation
        out = []
        for k in range(n + 1):
            acc = self.ring.zero(k)
            for i in range(k + 1):
                acc = acc + self.terms[i] * other.terms[k - i]
            out.append(acc)
        return ChernSeries(out, self.ring)

    def inverse(self) -> "ChernSeries":
        c0 = self.terms[0]
        if (c0.coeff_M, c0.coeff_MF) != (1, 0):
            raise ValueError("series must start with 1 to be inverted")
        inv = [self.ring.one()]
        for k in range(1, self.truncation + 1):
            acc = self.ring.zero(k)
            for j in range(1, k + 1):
                acc = acc - self.terms[j] * inv[k - j]
            inv.append(acc)
        return ChernSeries(inv, self.ring)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})t^{k}" for k, c in enumerate(self.terms) if not c.is_zero())
        return f"ChernSeries({body or '0'})"


@dataclass(frozen=True)
class CISpec:
    """Complete intersection of divisors ``m_j M + f_j F`` in ``P(E)``.

    Divisors are stored with respect to the tautological class of the
    normalized bundle.  Use :meth:`build` to pass divisors written against
    the tautological class of unnormalized twists.
    """

    ambient: BundleSpec
    divisors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        divs = tuple((int(m), int(f)) for m, f in self.divisors)
        object.__setattr__(self, "divisors", divs)
        if len(divs) > self.ambient.dim - 1:
            raise ValueError("too many divisors for the ambient dimension")

    @classmethod
    def build(cls, twists: Iterable[int], divisors: Iterable[tuple[int, int]]) -> "CISpec":
        ambient = BundleSpec(twists)
        # O_{P(E(s))}(1) = O_{P(E)}(1) + sF, so m M_orig + f F = m M + (f + m s) F
        s = ambient.shift
        return cls(ambient, tuple((m, f + m * s) for m, f in divisors))

    @property
    def dim(self) -> int:
        return self.ambient.dim - len(self.divisors)

    def divisor_classes(self) -> list[ChowElement]:
        return [self.ambient.divisor(m, f) for m, f in self.divisors]

    def to_json(self) -> dict:
        return {
            "twists": list(self.ambient.twists),
            "divisors": [{"m": m, "f": f} for m, f in self.divisors],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CISpec":
        return cls.build(obj["twists"], [(d["m"], d["f"]) for d in obj.get("divisors", [])])


def chern_tangent(ring: BundleSpec) -> ChernSeries:
    """``c_t(T_P) = (1 + 2F t) * prod_i (1 + (M - a_i F) t)``."""
    series = ChernSeries.linear(2 * ring.F)
    for a in ring.twists:
        series = series * ChernSeries.linear(ring.M - a * ring.F)
    return series


def chern_normal(ci: CISpec) -> ChernSeries:
    series = ChernSeries.one(ci.ambient)
    for d in ci.divisor_classes():
        series = series * ChernSeries.linear(d)
    return series


def chern_ci_tangent(ci: CISpec) -> ChernSeries:
    """Total Chern class of the complete intersection, pushed into the ambient ring."""
    return chern_tangent(ci.ambient) * chern_normal(ci).inverse()


def euler_ci(ci: CISpec) -> int:
    """Topological Euler number of a smooth threefold complete intersection.

    ``Eu(V) = deg c_3(T_V) = integral over P(E) of c_3 * D_1 * ... * D_k``.
    Smoothness is assumed, not checked.
    """
    if ci.dim != 3:
        raise ValueError(f"complete intersection has dimension {ci.dim}, expected 3")
    cycle = chern_ci_tangent(ci)[3]
    for d in ci.divisor_classes():
        cycle = cycle * d
    return integrate(cycle)


def euler_closed_form(sum_a: int, sum_b: int) -> int:
    """Euler number of ``(2M + b_1 F) . (2M + b_2 F)`` in a P^4-bundle."""
    return 16 - 16 * sum_a - 20 * sum_b
