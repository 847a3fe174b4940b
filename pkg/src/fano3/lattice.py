"""Divisor-class lattices with the anticanonical pairing ``<D1, D2> = (-K).D1.D2``.

Only the pairing against ``-K`` is modelled; it is invariant under flops, which
is what lets the numbers of the two sides of a link be compared in one
lattice.  Rank 2 is used for links, rank 3 for the effective-cone analysis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "KINDS",
    "ContractionSignature",
    "sig",
    "DivisorClass",
    "IntersectionForm",
    "BlowupInvariants",
    "signature_pairing",
    "pair",
    "blowup_curve_invariants",
    "fsharp_cube",
    "link_form",
]

# Fixed total order on contraction kinds; used to canonicalize links.
KINDS = ("B1", "B2", "B3B4", "B5", "C1", "C2", "D1", "D2", "D3")


@dataclass(frozen=True, order=True)
class ContractionSignature:
    """Numerical fingerprint of an extremal contraction of a weak Fano threefold.

    ``params`` is a sorted tuple of ``(name, value)`` pairs, e.g. ``(("d", 4),)``
    for a quartic del Pezzo fibration.
    """

    kind: str
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown contraction kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(sorted((str(k), int(v)) for k, v in self.params)))

    def sort_key(self):
        return (KINDS.index(self.kind), self.params)

    def __getitem__(self, name: str) -> int:
        return dict(self.params)[name]

    def get(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        out.update(dict(self.params))
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "ContractionSignature":
        rest = {k: v for k, v in obj.items() if k != "kind"}
        return cls(obj["kind"], tuple(rest.items()))

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.kind}({inner})" if inner else self.kind


def sig(kind: str, **params: int) -> ContractionSignature:
    return ContractionSignature(kind, tuple(params.items()))


def signature_pairing(s: ContractionSignature, g: int) -> tuple[int, int]:
    """``(<X, X>, <H, X>)`` for the distinguished class ``X`` of the contraction.

    ``X`` is the exceptional divisor for B5, the pullback of a point of the
    base for D1, and of a line for C1.  ``g`` is accepted for a uniform call
    signature; none of the three tables depends on it.
    """
    if s.kind == "B5":
        return (-2, 1)
    if s.kind == "D1":
        return (0, s["d"])
    if s.kind == "C1":
        return (2, 12 - s["d"])
    raise ValueError(f"no signature pairing for kind {s.kind}")


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[int, ...]
    basis: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        object.__setattr__(self, "basis", tuple(self.basis))
        if len(self.coords) != len(self.basis):
            raise ValueError("coordinate vector does not match basis")
        if len(set(self.basis)) != len(self.basis):
            raise ValueError("basis names must be unique")

    def _same(self, other: "DivisorClass"):
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._same(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coords), self.basis)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClass":
        return DivisorClass(tuple(k * a for a in self.coords), self.basis)

    def __str__(self) -> str:
        parts = []
        for c, b in zip(self.coords, self.basis):
            if c:
                parts.append(f"{c:+d}{b}".replace("+1" + b, "+" + b).replace("-1" + b, "-" + b))
        s = "".join(parts).lstrip("+")
        return s or "0"


@dataclass(frozen=True)
class IntersectionForm:
    """Gram matrix of ``<.,.>`` in a named basis whose first vector is ``H = -K``."""

    basis: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    genus: int

    def __post_init__(self):
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "basis", tuple(self.basis))
        n = len(self.basis)
        if len(gram) != n or any(len(r) != n for r in gram):
            raise ValueError("gram matrix has wrong shape")
        if any(gram[i][j] != gram[j][i] for i in range(n) for j in range(n)):
            raise ValueError("gram matrix is not symmetric")
        if self.genus < 2:
            raise ValueError("genus must be at least 2")
        if "H" in self.basis:
            h = self.basis.index("H")
            if gram[h][h] != 2 * self.genus - 2:
                raise ValueError("<H,H> must equal 2g-2")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def vector(self, **coords: int) -> DivisorClass:
        return DivisorClass(tuple(coords.get(b, 0) for b in self.basis), self.basis)

    def gen(self, name: str) -> DivisorClass:
        return self.vector(**{name: 1})

    def change_basis(self, new_names: Sequence[str], vectors: Sequence[DivisorClass]) -> "IntersectionForm":
        """Express the form in a new basis given by ``vectors`` (must be unimodular)."""
        n = self.rank
        if len(vectors) != n:
            raise ValueError("need as many vectors as the rank")
        rows = [v.coords for v in vectors]
        det = _int_det([list(r) for r in rows])
        if abs(det) != 1:
            raise ValueError("basis change is not unimodular")
        gram = tuple(tuple(pair(a, b, self) for b in vectors) for a in vectors)
        return IntersectionForm(tuple(new_names), gram, self.genus)

    def to_json(self) -> dict:
        return {"genus": self.genus, "basis": list(self.basis), "gram": [list(r) for r in self.gram]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntersectionForm":
        return cls(tuple(obj["basis"]), tuple(tuple(r) for r in obj["gram"]), obj["genus"])


def _int_det(m: list[list[int]]) -> int:
    from .linalg import det

    return int(det(m))


def pair(x: DivisorClass, y: DivisorClass, form: IntersectionForm) -> int:
    x._same(y)
    if x.basis != form.basis:
        raise ValueError(f"basis mismatch: {x.basis} vs {form.basis}")
    g = form.gram
    return sum(x.coords[i] * g[i][j] * y.coords[j] for i in range(form.rank) for j in range(form.rank))


def link_form(g: int, s: ContractionSignature, name: str = "M") -> IntersectionForm:
    """Rank-2 form on ``Z H + Z X`` where ``X`` is the class attached to ``s``."""
    xx, hx = signature_pairing(s, g)
    return IntersectionForm(("H", name), ((2 * g - 2, hx), (hx, xx)), g)


@dataclass(frozen=True)
class BlowupInvariants:
    KY3: int
    mKGamma: int
    pa: int
    KX3: int
    n: int


def blowup_curve_invariants(KY3: int, mKGamma: int, pa: int) -> BlowupInvariants:
    """Anticanonical numbers for the blowup of a curve ``Gamma`` on ``Y``.

    ``(-K_X)^3 = (-K_Y)^3 - 2(-K_Y.Gamma) + 2p_a - 2`` and
    ``(-K_X)^2.E = -K_Y.Gamma + 2 - 2p_a``.
    """
    if mKGamma < 1:
        raise ValueError("-K_Y.Gamma must be positive")
    if pa < 0:
        raise ValueError("arithmetic genus must be non-negative")
    n = mKGamma + 2 - 2 * pa
    if n <= 0:
        raise ValueError("contraction impossible: (-K)^2.E must be positive")
    return BlowupInvariants(KY3, mKGamma, pa, KY3 - 2 * mKGamma + 2 * pa - 2, n)


def fsharp_cube(g: int, d: int) -> int:
    """``(-K - F)^3`` for a conic bundle with discriminant degree ``d``.

    Expands to ``(2g-2) - 3<H,M> + 3<M,M>`` with ``<H,M> = 12 - d`` and
    ``<M,M> = 2``; on the locus ``d = 13 - g`` it equals ``7 - g``.
    """
    return 2 * g - 2 - 3 * (12 - d) + 6
