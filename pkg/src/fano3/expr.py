"""Text syntax for Chow-ring classes such as ``2M-F``, ``3M-2F`` or ``M^4*F``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := [int] ['*'] factor*
    factor := ('M' | 'F') ['^' uint]

A leading sign is allowed and whitespace is ignored.  Like terms are
collected, so ``M+M`` parses to ``2M``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chow import BundleSpec, ChowElement, reduce

__all__ = ["ChowExpr", "ExprSyntaxError", "parse_chow_expr", "format_terms", "parse_divisor"]


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, offset: int, text: str):
        super().__init__(f"{message} at offset {offset} in {text!r}")
        self.offset = offset
        self.text = text


def format_terms(terms: dict[tuple[int, int], int]) -> str:
    """Canonical text for ``{(p, q): coeff}``: higher M-power first, no zero terms."""
    items = sorted(((k, c) for k, c in terms.items() if c), key=lambda kc: (-(kc[0][0] + kc[0][1]), -kc[0][0]))
    if not items:
        return "0"
    out = []
    for i, ((p, q), c) in enumerate(items):
        mono = ""
        for sym, e in (("M", p), ("F", q)):
            if e == 1:
                mono += sym
            elif e > 1:
                mono += f"{sym}^{e}"
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = mono if mag == 1 and mono else f"{mag}{mono}"
        if i == 0:
            out.append(body if c > 0 else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


@dataclass(frozen=True)
class ChowExpr:
    """Parsed expression: collected monomials ``{(p, q): coeff}`` for ``M^p F^q``."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> "ChowExpr":
        return cls(tuple(sorted((k, v) for k, v in d.items() if v)))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.terms)

    def degrees(self) -> set[int]:
        return {p + q for (p, q), _ in self.terms}

    def __str__(self) -> str:
        return format_terms(self.as_dict())

    def to_element(self, ring: BundleSpec, degree: int | None = None) -> ChowElement:
        """Evaluate in the Chow ring; the expression must be homogeneous."""
        degs = self.degrees()
        if len(degs) > 1:
            raise ValueError(f"expression {self} is not homogeneous")
        if degree is None:
            degree = degs.pop() if degs else 0
        elif degs and degs != {degree}:
            raise ValueError(f"expression {self} does not have degree {degree}")
        acc = ring.zero(degree)
        for (p, q), c in self.terms:
            acc = acc + reduce(p, q, ring) * c
        return acc


def parse_chow_expr(text: str) -> ChowExpr:
    s = text
    n = len(s)
    pos = 0

    def skip():
        nonlocal pos
        while pos < n and s[pos].isspace():
            pos += 1

    def uint():
        nonlocal pos
        start = pos
        while pos < n and s[pos].isdigit():
            pos += 1
        return int(s[start:pos]) if pos > start else None

    terms: dict[tuple[int, int], int] = {}
    sign = 1
    skip()
    if pos < n and s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    while True:
        skip()
        term_start = pos
        coeff = uint()
        skip()
        star = False
        if pos < n and s[pos] == "*":
            if coeff is None:
                raise ExprSyntaxError("'*' without a coefficient", pos, s)
            star = True
            pos += 1
        p = q = 0
        nfactors = 0
        while True:
            skip()
            if pos < n and s[pos] in "MF":
                sym = s[pos]
                pos += 1
                skip()
                e = 1
                if pos < n and s[pos] == "^":
                    pos += 1
                    skip()
                    e = uint()
                    if e is None:
                        raise ExprSyntaxError("expected exponent", pos, s)
                if sym == "M":
                    p += e
                else:
                    q += e
                nfactors += 1
                skip()
                if pos < n and s[pos] == "*":
                    pos += 1
                    continue
                continue
            if pos < n and s[pos] == "^":
                raise ExprSyntaxError("exponent on unknown symbol", pos, s)
            if pos < n and s[pos] not in "+-":
                raise ExprSyntaxError(f"unexpected character {s[pos]!r}", pos, s)
            break
        if coeff is None and nfactors == 0:
            raise ExprSyntaxError("empty term", term_start, s)
        if star and nfactors == 0:
            raise ExprSyntaxError("expected factor after '*'", pos, s)
        key = (p, q)
        terms[key] = terms.get(key, 0) + sign * (1 if coeff is None else coeff)
        skip()
        if pos >= n:
            break
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        skip()
        if pos >= n:
            raise ExprSyntaxError("dangling operator", pos, s)
    return ChowExpr.from_dict(terms)


def parse_divisor(text: str) -> tuple[int, int]:
    """Parse a divisor class ``mM + fF`` and return ``(m, f)``."""
    e = parse_chow_expr(text)
    d = e.as_dict()
    if any(p + q != 1 for p, q in d):
        raise ValueError(f"{text!r} is not a divisor class")
    return d.get((1, 0), 0), d.get((0, 1), 0)
