"""Arithmetic in simple number fields ``Q[x]/(p)``.

Elements are coefficient tuples of ``gmpy2.mpq`` (low degree first) reduced
modulo a monic irreducible ``p``; mpq is several times faster than
``Fraction`` on the coefficient growth seen in node certification.  Only
ring operations, inversion and a zero test are provided.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from gmpy2 import mpq

__all__ = ["NumberField", "NFElement", "poly_divmod", "poly_trim"]


_RATIONAL = (int, Fraction, type(mpq(0)))


def poly_trim(p: Sequence) -> list:
    p = [mpq(x) for x in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    if not a or not b:
        return []
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_trim(out)


def _psub(a, b):
    n = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = poly_trim(a), poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [mpq(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        c = r[-1] / lead
        k = len(r) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] -= c * y
        r = poly_trim(r)
    return poly_trim(q), r


@dataclass(frozen=True)
class NumberField:
    """``Q[x]/(minpoly)``; ``minpoly`` is monic, coefficients low degree first."""

    minpoly: tuple[Fraction, ...]

    def __post_init__(self):
        p = poly_trim(self.minpoly)
        if len(p) < 2:
            raise ValueError("minimal polynomial must have positive degree")
        lead = p[-1]
        object.__setattr__(self, "minpoly", tuple(c / lead for c in p))

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    @classmethod
    def rationals(cls) -> "NumberField":
        return cls((mpq(0), mpq(1)))

    def __call__(self, value) -> "NFElement":
        if isinstance(value, NFElement):
            if value.field != self:
                raise ValueError("element of another field")
            return value
        return NFElement((mpq(value),), self)

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self(-self.minpoly[0])
        return NFElement((mpq(0), mpq(1)), self)

    def from_poly(self, coeffs: Sequence) -> "NFElement":
        return NFElement(tuple(mpq(c) for c in coeffs), self)

    def minpoly_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(c.numerator), int(c.denominator)) for c in self.minpoly)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.minpoly]


class NFElement:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence[Fraction], field: NumberField):
        c = list(coeffs)
        p = field.minpoly
        n = len(p) - 1
        if len(c) > n:
            _, c = poly_divmod(c, p)
        self.coeffs = tuple(poly_trim(c))
        self.field = field

    def _coerce(self, other) -> "NFElement | None":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, _RATIONAL):
            return NFElement((mpq(other),), self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return NFElement([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], self.field)

    __radd__ = __add__

    def __neg__(self):
        return NFElement([-x for x in self.coeffs], self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return NFElement(_pmul(self.coeffs, o.coeffs), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero in a number field")
        # extended Euclid: s * self + t * p = gcd = const
        r0, r1 = list(self.field.minpoly), list(self.coeffs)
        s0, s1 = [], [mpq(1)]
        while len(r1) > 1:
            q, r = poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1))
        if not r1:
            raise ZeroDivisionError("minimal polynomial is reducible")
        c = r1[0]
        return NFElement([x / c for x in s1], self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, NFElement) else other
        if o is None:
            return NotImplemented
        return self.field == o.field and self.coeffs == o.coeffs

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else mpq(0))
        return hash((self.coeffs, self.field))

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(c.numerator), int(c.denominator)) for c in self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs] or ["0"]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*t^{i}" if i > 1 else f"{c}*t")
        return " + ".join(terms)
