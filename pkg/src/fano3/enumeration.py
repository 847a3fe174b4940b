"""Diophantine case analysis for links of nonrational Fano threefolds.

Each solver enumerates integer solutions of the relevant equation system inside
a search box, then passes every candidate through a sequence of named rules.
A rule is either an arithmetic inequality checked here, or a geometric fact
that cannot be derived numerically; the latter carry a citation string.
Survivors remember the rules they passed (``trail``); excluded candidates
remember the rule that removed them.

The search box is ``DEFAULT_BOUND`` in every variable.  All solvers accept a
``bound`` argument so that saturation (no change when the box grows) can be
tested.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from . import catalog
from .lattice import (
    ContractionSignature,
    IntersectionForm,
    fsharp_cube,
    pair,
    sig,
)
from .linalg import solve

__all__ = [
    "DEFAULT_BOUND",
    "GENERA",
    "Rule",
    "RULES",
    "Candidate",
    "Rho1Target",
    "LinkRecord",
    "EffConeSolution",
    "B5Proof",
    "G7Assumptions",
    "G7Result",
    "admissible_rho1",
    "castelnuovo",
    "solve_d1d1",
    "solve_d1c1",
    "solve_c1c1",
    "solve_b1_iota2",
    "solve_b1_iota1",
    "solve_b2",
    "solve_b34",
    "check_b5_contradiction",
    "enumerate_links",
    "enumerate_all_links",
    "eff_cone_solve",
    "check_g7",
]

DEFAULT_BOUND = 12

# genus 11 does not occur: 2g-2 = 20 is not reached by any of the systems
GENERA = (5, 6, 7, 8, 9, 10, 12)


@dataclass(frozen=True)
class Rule:
    name: str
    kind: str  # "arithmetic" or "geometric"
    statement: str
    citation: str = ""

    def __post_init__(self):
        if self.kind not in ("arithmetic", "geometric"):
            raise ValueError(self.kind)
        if self.kind == "geometric" and not self.citation:
            raise ValueError(f"geometric rule {self.name} needs a citation")


def _rules(*rules: Rule) -> dict[str, Rule]:
    return {r.name: r for r in rules}


RULES: dict[str, Rule] = _rules(
    Rule("genus_ge_5", "arithmetic", "g >= 5"),
    Rule("positive_multiple", "arithmetic", "a >= 1"),
    Rule("d1d1_equations", "arithmetic", "(2g-2)a^2 - 2ad = 0 and (2g-2)a - d = d'"),
    Rule("d1c1_equations", "arithmetic", "(2g-2)a^2 - 2ad = 2 and (2g-2)a - d = 12 - d'"),
    Rule("c1c1_equations", "arithmetic", "(2g-2)a^2 - 2(12-d)a + 2 = 2 and (2g-2)a - (12-d) = 12 - d'"),
    Rule("b1_iota2_equations", "arithmetic", "g + n + m = 4d(Y) + 1 and g + 2n + p_a = 4d(Y) + 2"),
    Rule("b1_iota1_equations", "arithmetic", "g = g(Y) - 1 - m + p_a and n = m + 2 - 2p_a"),
    Rule("b2_volume", "arithmetic", "(-K_X)^3 = (-K_Y)^3 - 8"),
    Rule("b34_volume", "arithmetic", "(-K_X)^3 = (-K_Y)^3 - 2"),
    Rule("exceptional_degree_positive", "arithmetic", "n = (-K)^2.E >= 1"),
    Rule("castelnuovo_bound", "arithmetic",
         "p_a(Gamma) <= pi(m, r) for a nondegenerate degree-m curve spanning P^r"),
    Rule("dp_degree_le_4", "geometric", "a del Pezzo fibration on a nonrational threefold has degree <= 4",
         "del Pezzo surfaces of degree >= 5 with a rational point are rational over k(B) (Manin); "
         "k(P^1) is C1 so the generic fiber has a point"),
    Rule("cb_discriminant_ge_5", "geometric",
         "a conic bundle over P^2 on a nonrational threefold has discriminant degree >= 5",
         "standard-model reduction plus Iskovskikh's criterion Delta.S_t <= 3 => rational"),
    Rule("fsharp_cube_negative", "geometric",
         "(F#)^3 = 7 - g < 0, since F# meets a general fibre trivially and is negative on flopped curves",
         "F# = -K - F; F#_1 . F#_2 = fibre + positive combination of flopped curves"),
    Rule("rho1_admissible", "geometric", "Y is a nonrational Fano threefold of Picard rank one",
         "rank-one classification: iota=2 and d<=3, or iota=1 and g<=6, or X_14 (smooth, g=8)"),
    Rule("y_singular", "geometric",
         "Y has a cA_1 point, so the families whose nonrational members are smooth are excluded",
         "rank-one classification: d(Y)=3 and the genus-8 case X_14 are nonrational only when smooth"),
    Rule("b34_no_flopping_curves", "geometric",
         "iota(Y)=2, d(Y)=2 is excluded: the anticanonical map of the blowup contracts no curves",
         "|-K| on the blowup of a cA_1 point on Y_2 is base point free and contracts no curves, so rho(X)=2"),
    Rule("b1_dy2_line", "geometric", "d(Y)=2, m=1: Gamma is a line, so p_a = 0",
         "H_Y.Gamma = 1 on the double cover of P^3 forces Gamma to map isomorphically onto a line"),
    Rule("b1_dy2_m3_double_cover", "geometric",
         "d(Y)=2, m=3 is impossible: p_a(pi(Gamma)) >= 3 = deg pi(Gamma) for a space curve",
         "|-K_Y/2| defines a double cover Y -> P^3 and Gamma maps birationally onto a cubic curve"),
    Rule("b1_dy2_m2_anticanonical", "geometric",
         "d(Y)=2, m=2: Gamma has degree 4 in the anticanonical embedding Y in P^10, so p_a <= 1",
         "|-K_Y| is very ample for d(Y)=2 (Shin); degree-4 curves on an intersection of quadrics have p_a <= 1"),
    Rule("b1_dy2_m2_ample", "geometric",
         "d(Y)=2, m=2, p_a=1: Gamma is a complete intersection of two members of |-K_Y/2|, so -K is ample",
         "then rho(X) = 2, contradicting rho(X) = 1"),
    Rule("b1_span_section", "geometric",
         "if <Gamma> meets Y only along Gamma, |F - E| is base point free and -K = 2F - E is ample",
         "excludes lines (span P^1) and plane curves of degree >= d(Y) on a cubic (span P^2)"),
    Rule("b1_hyperplane_positive", "geometric", "g - 1 - n > 0 when <Gamma> is a hyperplane",
         "(-K)^2.(F - E) = g - 1 - n is positive because |F - E| is nonempty and tau contracts no divisor"),
    Rule("b1_iota1_quadrics", "geometric", "iota(Y)=1: p_a(Gamma) <= 1",
         "the anticanonical model of Y is an intersection of quadrics"),
    Rule("b1_iota1_low_degree", "geometric", "iota(Y)=1, m <= 3: p_a(Gamma) = 0",
         "a curve of degree <= 3 with p_a = 1 is a plane cubic, whose plane would lie on the intersection of quadrics"),
    Rule("other_side_from_catalog", "geometric", "the opposite contraction is read off the explicit link",
         "the opposite side of a link starting with a divisorial contraction is fixed by its construction"),
)


@dataclass
class Candidate:
    values: dict
    trail: list[str] = field(default_factory=list)
    excluded_by: str | None = None

    @property
    def alive(self) -> bool:
        return self.excluded_by is None


def _apply(cands: Iterable[Candidate], rule: str, pred: Callable[[dict], bool]) -> list[Candidate]:
    if rule not in RULES:
        raise KeyError(rule)
    out = list(cands)
    for c in out:
        if not c.alive:
            continue
        if pred(c.values):
            c.trail.append(rule)
        else:
            c.excluded_by = rule
    return out


def _alive(cands: Iterable[Candidate]) -> list[Candidate]:
    return [c for c in cands if c.alive]


# ---------------------------------------------------------------- rank one


@dataclass(frozen=True)
class Rho1Target:
    iota: int
    degree_or_genus: int


def admissible_rho1(t: Rho1Target) -> bool:
    """Whether a rank-one Fano threefold with these invariants can be nonrational."""
    v = t.degree_or_genus
    if t.iota == 2:
        return 1 <= v <= 3
    if t.iota == 1:
        return 2 <= v <= 6 or v == 8
    return False


def castelnuovo(m: int, r: int) -> int:
    """Castelnuovo's bound on the arithmetic genus of a degree-``m`` curve in P^r."""
    if r < 2:
        raise ValueError("ambient dimension must be at least 2")
    if m < r:
        raise ValueError(f"degenerate: a curve of degree {m} cannot span P^{r}")
    mu, eps = divmod(m - 1, r - 1)
    return mu * (mu - 1) // 2 * (r - 1) + mu * eps


# ---------------------------------------------------------------- fibrations


def _d1d1_detail(g: int, bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = [Candidate({"a": a, "d": d, "d2": d2}, ["genus_ge_5", "positive_multiple", "d1d1_equations"])
             for a, d, d2 in itertools.product(range(1, bound + 1), repeat=3)
             if (2 * g - 2) * a * a - 2 * a * d == 0 and (2 * g - 2) * a - d == d2]
    cands = _apply(cands, "dp_degree_le_4", lambda v: v["d"] <= 4 and v["d2"] <= 4)
    return cands


def solve_d1d1(g: int, bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int]]:
    """Two del Pezzo fibrations: ``M' = aH - M``."""
    if g < 5:
        raise ValueError("genus must be at least 5")
    return [(c.values["a"], c.values["d"], c.values["d2"]) for c in _alive(_d1d1_detail(g, bound))]


def _d1c1_detail(g: int, bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = [Candidate({"a": a, "d": d, "d2": d2}, ["genus_ge_5", "positive_multiple", "d1c1_equations"])
             for a, d, d2 in itertools.product(range(1, bound + 1), repeat=3)
             if (2 * g - 2) * a * a - 2 * a * d == 2 and (2 * g - 2) * a - d == 12 - d2]
    cands = _apply(cands, "dp_degree_le_4", lambda v: v["d"] <= 4)
    cands = _apply(cands, "cb_discriminant_ge_5", lambda v: v["d2"] >= 5)
    return cands


def solve_d1c1(g: int, bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int]]:
    """Del Pezzo fibration of degree ``d`` against a conic bundle with discriminant degree ``d'``."""
    if g < 5:
        raise ValueError("genus must be at least 5")
    return [(c.values["a"], c.values["d"], c.values["d2"]) for c in _alive(_d1c1_detail(g, bound))]


def _c1c1_detail(g: int, bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = [Candidate({"a": a, "d": d, "d2": d2, "g": g}, ["genus_ge_5", "positive_multiple", "c1c1_equations"])
             for a, d, d2 in itertools.product(range(1, bound + 1), repeat=3)
             if (2 * g - 2) * a * a - 2 * (12 - d) * a + 2 == 2 and (2 * g - 2) * a - (12 - d) == 12 - d2]
    cands = _apply(cands, "cb_discriminant_ge_5", lambda v: v["d"] >= 5 and v["d2"] >= 5)
    cands = _apply(cands, "fsharp_cube_negative", lambda v: fsharp_cube(v["g"], v["d"]) < 0)
    return cands


def solve_c1c1(g: int, bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int]]:
    if g < 5:
        raise ValueError("genus must be at least 5")
    return [(c.values["a"], c.values["d"], c.values["d2"]) for c in _alive(_c1c1_detail(g, bound))]


# ---------------------------------------------------------------- divisorial


def _span_ok(v: dict, r: int) -> bool:
    """Whether ``(m, p_a)`` is compatible with ``<Gamma> = P^r`` on a cubic threefold."""
    m, pa, g, n = v["m"], v["pa"], v["g"], v["n"]
    if r > m:
        return False
    if r == 1:
        return False  # line: <Gamma> cap Y = Gamma
    if r == 2 and m >= 3:
        return False  # plane cubic section of Y
    if pa > castelnuovo(m, r):
        return False
    if r == 3 and not g - 1 - n > 0:
        return False
    return True


def _span_rule(v: dict, r: int) -> str | None:
    """The rule that removes ``v`` for span dimension ``r`` (``None`` if it survives)."""
    m, pa = v["m"], v["pa"]
    if r > m:
        return "castelnuovo_bound"
    if r == 1 or (r == 2 and m >= 3):
        return "b1_span_section"
    if pa > castelnuovo(m, r):
        return "castelnuovo_bound"
    if r == 3 and not v["g"] - 1 - v["n"] > 0:
        return "b1_hyperplane_positive"
    return None


def _b1_iota2_detail(dY: int, bound: int = DEFAULT_BOUND) -> list[Candidate]:
    if dY not in (2, 3):
        raise ValueError("d(Y) must be 2 or 3")
    cands = []
    for n, m, pa in itertools.product(range(1, bound + 1), range(1, bound + 1), range(0, bound + 1)):
        g = 4 * dY + 1 - n - m
        if g + 2 * n + pa != 4 * dY + 2:
            continue
        cands.append(Candidate({"dY": dY, "g": g, "n": n, "m": m, "pa": pa},
                               ["b1_iota2_equations", "exceptional_degree_positive"]))
    cands = _apply(cands, "genus_ge_5", lambda v: v["g"] >= 5)
    if dY == 2:
        cands = _apply(cands, "b1_dy2_line", lambda v: v["m"] != 1 or v["pa"] == 0)
        cands = _apply(cands, "b1_dy2_m3_double_cover", lambda v: v["m"] != 3)
        cands = _apply(cands, "b1_dy2_m2_anticanonical", lambda v: v["m"] != 2 or v["pa"] <= 1)
        cands = _apply(cands, "b1_dy2_m2_ample", lambda v: not (v["m"] == 2 and v["pa"] == 1))
    else:
        for c in _alive(cands):
            spans = [r for r in (1, 2, 3, 4) if _span_ok(c.values, r)]
            if spans:
                c.values["span"] = spans[0]
                c.trail += ["castelnuovo_bound", "b1_span_section"]
                if spans[0] == 3:
                    c.trail.append("b1_hyperplane_positive")
            else:
                # report the rule that fired for the largest admissible span
                reasons = [_span_rule(c.values, r) for r in (1, 2, 3, 4)]
                c.excluded_by = next(x for x in reversed(reasons) if x is not None)
    return cands


def solve_b1_iota2(dY: int, bound: int = DEFAULT_BOUND,
                   include_excluded: bool = False) -> list[tuple[int, int, int, int, str]]:
    """Blowups of curves on del Pezzo threefolds ``Y`` of degree ``dY``.

    Returns ``(g, n, m, p_a, verdict)``; with ``include_excluded`` the removed
    candidates are listed too, with verdict ``"excluded:<rule>"``.
    """
    out = []
    for c in _b1_iota2_detail(dY, bound):
        if c.alive or include_excluded:
            v = c.values
            verdict = "link" if c.alive else f"excluded:{c.excluded_by}"
            out.append((v["g"], v["n"], v["m"], v["pa"], verdict))
    return out


def _b1_iota1_detail(bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = []
    for gY, m, pa in itertools.product(range(2, bound + 1), range(1, bound + 1), range(0, bound + 1)):
        g = gY - 1 - m + pa
        n = m + 2 - 2 * pa
        cands.append(Candidate({"g": g, "gY": gY, "n": n, "m": m, "pa": pa}, ["b1_iota1_equations"]))
    cands = _apply(cands, "exceptional_degree_positive", lambda v: v["n"] >= 1)
    cands = _apply(cands, "genus_ge_5", lambda v: v["g"] >= 5)
    cands = _apply(cands, "rho1_admissible", lambda v: admissible_rho1(Rho1Target(1, v["gY"])))
    cands = _apply(cands, "b1_iota1_quadrics", lambda v: v["pa"] <= 1)
    cands = _apply(cands, "b1_iota1_low_degree", lambda v: v["m"] > 3 or v["pa"] == 0)
    return cands


def solve_b1_iota1(bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int, int, int]]:
    """Blowups of curves on index-one ``Y``: tuples ``(g, g(Y), n, m, p_a)``."""
    return sorted((v["g"], v["gY"], v["n"], v["m"], v["pa"])
                  for v in (c.values for c in _alive(_b1_iota1_detail(bound))))


def _volume(iota: int, val: int) -> int:
    """``(-K_Y)^3`` from the index and the degree (iota=2) or genus (iota=1)."""
    if iota == 1:
        return 2 * val - 2
    if iota == 2:
        return 8 * val
    return {3: 54, 4: 64}[iota]


def _b2_detail(bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = []
    for iota in (1, 2, 3, 4):
        vals = range(1, bound + 1) if iota <= 2 else (0,)
        for val in vals:
            kx3 = _volume(iota, val) - 8
            if kx3 % 2:
                continue
            cands.append(Candidate({"g": kx3 // 2 + 1, "iotaY": iota, "val": val}, ["b2_volume"]))
    cands = _apply(cands, "genus_ge_5", lambda v: v["g"] >= 5)
    cands = _apply(cands, "rho1_admissible", lambda v: admissible_rho1(Rho1Target(v["iotaY"], v["val"])))
    return cands


def solve_b2(bound: int = DEFAULT_BOUND) -> list[tuple[int, int, int]]:
    """Blowups of smooth points: ``(g, iota(Y), d(Y))``."""
    return sorted((c.values["g"], c.values["iotaY"], c.values["val"]) for c in _alive(_b2_detail(bound)))


def _b34_detail(bound: int = DEFAULT_BOUND) -> list[Candidate]:
    cands = []
    for iota in (1, 2, 3, 4):
        vals = range(1, bound + 1) if iota <= 2 else (0,)
        for val in vals:
            kx3 = _volume(iota, val) - 2
            if kx3 % 2:
                continue
            cands.append(Candidate({"g": kx3 // 2 + 1, "iotaY": iota, "val": val}, ["b34_volume"]))
    cands = _apply(cands, "genus_ge_5", lambda v: v["g"] >= 5)
    cands = _apply(cands, "rho1_admissible", lambda v: admissible_rho1(Rho1Target(v["iotaY"], v["val"])))
    cands = _apply(cands, "y_singular",
                   lambda v: not (v["iotaY"] == 2 and v["val"] == 3) and not (v["iotaY"] == 1 and v["val"] == 8))
    cands = _apply(cands, "b34_no_flopping_curves", lambda v: not (v["iotaY"] == 2 and v["val"] == 2))
    return cands


def solve_b34(bound: int = DEFAULT_BOUND, include_excluded: bool = False) -> list[tuple]:
    """Blowups of cA_1 points: ``(g, g(Y))``.

    With ``include_excluded`` the removed candidates are returned as
    ``(g, iota(Y), value, rule)``.
    """
    cands = _b34_detail(bound)
    if include_excluded:
        return sorted((c.values["g"], c.values["iotaY"], c.values["val"], c.excluded_by)
                      for c in cands if not c.alive and c.excluded_by != "genus_ge_5")
    return sorted((c.values["g"], c.values["val"]) for c in _alive(cands))


@dataclass(frozen=True)
class B5Proof:
    """Evidence that a B5 contraction cannot sit opposite D1, C1 or B5."""

    genus: int
    witnesses: tuple[tuple[int, str, int, int], ...]  # (a, right kind, required, computed)
    solutions: tuple[tuple[int, str], ...]
    min_computed: int
    max_required: int

    @property
    def empty(self) -> bool:
        return not self.solutions

    def inequality(self) -> str:
        return (f"<M',M'> = a^2(2g-2) - 2a - 2 >= {self.min_computed} > {self.max_required} "
                f"for g = {self.genus}, a >= 1")


def check_b5_contradiction(g: int, bound: int = DEFAULT_BOUND) -> B5Proof:
    if g < 5:
        raise ValueError("genus must be at least 5")
    form = IntersectionForm(("H", "D"), ((2 * g - 2, 1), (1, -2)), g)
    required = {"D1": 0, "C1": 2, "B5": -2}
    witnesses, solutions = [], []
    for a in range(1, bound + 1):
        v = form.vector(H=a, D=-1)
        computed = pair(v, v, form)
        if computed != a * a * (2 * g - 2) - 2 * a - 2:
            raise AssertionError("lattice pairing disagrees with the closed form")
        for kind, req in required.items():
            witnesses.append((a, kind, req, computed))
            if computed == req:
                solutions.append((a, kind))
    return B5Proof(g, tuple(witnesses), tuple(solutions),
                   min(w[3] for w in witnesses), max(required.values()))


# ---------------------------------------------------------------- links


@dataclass(frozen=True)
class LinkRecord:
    genus: int
    left: ContractionSignature
    right: ContractionSignature | None
    row: int | None = None
    nodes: int | None = None
    nonrational: str | None = None
    pruning_trail: tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "schema": catalog.SCHEMA,
            "genus": self.genus,
            "row": self.row,
            "left": self.left.to_json(),
            "right": self.right.to_json() if self.right is not None else None,
            "nodes": self.nodes,
            "nonrational": self.nonrational.lower() if self.nonrational else None,
            "trail": list(self.pruning_trail),
        }


def _record(g: int, left, right, trail) -> LinkRecord:
    trail = list(trail)
    if right is None:
        row = catalog.match_side(g, left)
        if row is not None:
            trail.append("other_side_from_catalog")
    else:
        row = catalog.match_pair(g, left, right)
    if row is None:
        return LinkRecord(g, left, right, pruning_trail=tuple(trail))
    return LinkRecord(g, row.left_sig, row.right_sig, row.row, row.nodes, row.nonrational, tuple(trail))


def enumerate_links(g: int, bound: int = DEFAULT_BOUND) -> list[LinkRecord]:
    """All links of genus ``g`` allowed by the numerical constraints, sorted by table row."""
    if g not in GENERA:
        raise ValueError("genus outside {5..10,12}")
    found = []
    for c in _alive(_d1d1_detail(g, bound)):
        v = c.values
        found.append(_record(g, sig("D1", d=v["d"]), sig("D1", d=v["d2"]), c.trail))
    for c in _alive(_d1c1_detail(g, bound)):
        v = c.values
        found.append(_record(g, sig("D1", d=v["d"]), sig("C1", d=v["d2"]), c.trail))
    for c in _alive(_c1c1_detail(g, bound)):
        v = c.values
        found.append(_record(g, sig("C1", d=v["d"]), sig("C1", d=v["d2"]), c.trail))
    for dY in (2, 3):
        for c in _alive(_b1_iota2_detail(dY, bound)):
            v = c.values
            if v["g"] == g:
                left = sig("B1", iotaY=2, dY=dY, m=v["m"], n=v["n"], pa=v["pa"])
                found.append(_record(g, left, None, c.trail))
    for c in _alive(_b1_iota1_detail(bound)):
        v = c.values
        if v["g"] == g:
            left = sig("B1", iotaY=1, gY=v["gY"], m=v["m"], n=v["n"], pa=v["pa"])
            found.append(_record(g, left, None, c.trail))
    for c in _alive(_b2_detail(bound)):
        v = c.values
        if v["g"] == g:
            found.append(_record(g, sig("B2", iotaY=v["iotaY"], dY=v["val"]), None, c.trail))
    for c in _alive(_b34_detail(bound)):
        v = c.values
        if v["g"] == g:
            found.append(_record(g, sig("B3B4", iotaY=v["iotaY"], gY=v["val"]), None, c.trail))
    if not check_b5_contradiction(g, bound).empty:
        raise AssertionError(f"B5 analysis produced solutions at g={g}")

    seen: dict[tuple, LinkRecord] = {}
    for rec in found:
        sides = [s for s in (rec.left, rec.right) if s is not None]
        key = (rec.genus, tuple(sorted(sides, key=ContractionSignature.sort_key)))
        if key in seen:
            old = seen[key]
            merged = tuple(dict.fromkeys(old.pruning_trail + rec.pruning_trail))
            seen[key] = LinkRecord(old.genus, old.left, old.right, old.row, old.nodes, old.nonrational, merged)
        else:
            seen[key] = rec
    return sorted(seen.values(), key=lambda r: (r.row is None, r.row or 0, str(r.left)))


def enumerate_all_links(bound: int = DEFAULT_BOUND) -> list[LinkRecord]:
    out = []
    for g in GENERA:
        out.extend(enumerate_links(g, bound))
    return sorted(out, key=lambda r: (r.row is None, r.row or 0, r.genus))


# ---------------------------------------------------------------- rank three


@dataclass(frozen=True)
class EffConeSolution:
    g: int
    r: int
    degrees: tuple[int, ...]
    c_seq: tuple[int, ...]
    status: str  # CaseI, CaseII_Excluded or ExtraArithmetic

    def to_json(self) -> dict:
        return {"g": self.g, "r": self.r, "degrees": list(self.degrees), "c": list(self.c_seq),
                "status": self.status}


def _canonical_cycle(degrees: tuple[int, ...], cs: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Smallest representative under rotation and reflection.

    ``c_i`` belongs to the middle generator ``S_(i+1)`` of the relation
    ``S_(i+2) + S_i = -K + c_i S_(i+1)``, so both sequences are transformed
    after re-indexing ``c`` by its middle generator.
    """
    r = len(degrees)
    mid = tuple(cs[(i - 1) % r] for i in range(r))
    best = None
    for seq_d, seq_e in ((degrees, mid), (degrees[::-1], mid[::-1])):
        for k in range(r):
            dd = seq_d[k:] + seq_d[:k]
            ee = seq_e[k:] + seq_e[:k]
            cand = (dd, ee)
            if best is None or cand < best:
                best = cand
    dd, ee = best
    return dd, tuple(ee[(i + 1) % r] for i in range(r))


def eff_cone_solve(g_max: int = DEFAULT_BOUND, r_max: int = 8) -> list[EffConeSolution]:
    """Cyclic generator sequences of a rank-three effective cone.

    Classes are vectors in the basis ``(-K, S_1, S_2)``; the relation
    ``S_(i+2) = -K - S_i + c_i S_(i+1)`` is iterated and must close up with
    minimal period ``r``.  Degrees ``(-K)^2.S_i`` must lie in ``{3, 4}``.
    """
    sols: dict[tuple, EffConeSolution] = {}
    for r in range(3, r_max + 1):
        for cs in itertools.product((-1, 0), repeat=r):
            classes = [(0, 1, 0), (0, 0, 1)]
            for i in range(r):
                s0, s1 = classes[i], classes[i + 1]
                c = cs[i % r]
                classes.append((1 - s0[0] + c * s1[0], -s0[1] + c * s1[1], -s0[2] + c * s1[2]))
            if classes[r] != classes[0] or classes[r + 1] != classes[1]:
                continue
            if len(set(classes[:r])) != r:
                continue
            for g in range(5, g_max + 1):
                for d1, d2 in itertools.product((3, 4), repeat=2):
                    degs = tuple(k * (2 * g - 2) + x * d1 + y * d2 for k, x, y in classes[:r])
                    if not all(3 <= d <= 4 for d in degs):
                        continue
                    assert all(degs[(i + 2) % r] + degs[i] == 2 * g - 2 + cs[i] * degs[(i + 1) % r]
                               for i in range(r))
                    dd, cc = _canonical_cycle(degs, cs)
                    key = (g, r, dd, cc)
                    if key in sols:
                        continue
                    if g == 5 and r == 4 and set(dd) == {4} and set(cc) == {0}:
                        status = "CaseI"
                    elif g == 7 and r == 3 and set(dd) == {4} and set(cc) == {-1}:
                        status = "CaseII_Excluded"
                    else:
                        status = "ExtraArithmetic"
                    sols[key] = EffConeSolution(g, r, dd, cc, status)
    order = {"CaseI": 0, "CaseII_Excluded": 1, "ExtraArithmetic": 2}
    return sorted(sols.values(), key=lambda s: (order[s.status], s.g, s.r, s.degrees, s.c_seq))


@dataclass(frozen=True)
class G7Assumptions:
    """Hypotheses for the genus-7, three-generator case.

    ``pairing[i][j] = <S_i, S_j>``; ``square_zero`` lists the ``i`` with
    ``S_i^2 . x = 0`` for every ``x``; ``relation`` asserts ``-K = S_1 + S_2 + S_3``.
    """

    pairing: tuple[tuple[int, ...], ...] = ((0, 2, 2), (2, 0, 2), (2, 2, 0))
    square_zero: tuple[int, ...] = (1, 2)
    relation: bool = True


@dataclass(frozen=True)
class G7Result:
    values: tuple[Fraction, Fraction]  # (S_3^2.S_1, S_3^2.S_2)
    verdict: str  # "excluded" or "no contradiction"

    def as_tuple(self):
        return (*self.values, self.verdict)


def check_g7(assumptions: G7Assumptions | None = None) -> G7Result:
    """Solve for the triple intersections ``S_i.S_j.S_k`` and test ``S_3^2.S_i = 0``.

    With ``-K = S_1 + S_2 + S_3`` each pairing gives a linear equation
    ``sum_k S_i.S_j.S_k = <S_i, S_j>``.
    """
    a = assumptions or G7Assumptions()
    if not a.relation:
        raise ValueError("precondition: the relation -K = S1 + S2 + S3 is required")
    P = a.pairing
    if len(P) != 3 or any(len(row) != 3 for row in P) or any(P[i][j] != P[j][i] for i in range(3) for j in range(3)):
        raise ValueError("pairing must be a symmetric 3x3 matrix")
    monos = list(itertools.combinations_with_replacement((1, 2, 3), 3))
    idx = {m: k for k, m in enumerate(monos)}

    def mono(*ijk):
        return idx[tuple(sorted(ijk))]

    rows, rhs = [], []
    for i, j in itertools.combinations_with_replacement((1, 2, 3), 2):
        row = [0] * len(monos)
        for k in (1, 2, 3):
            row[mono(i, j, k)] += 1
        rows.append(row)
        rhs.append(P[i - 1][j - 1])
    for i in a.square_zero:
        for k in (1, 2, 3):
            row = [0] * len(monos)
            row[mono(i, i, k)] = 1
            rows.append(row)
            rhs.append(0)
    try:
        x, kernel = solve(rows, rhs)
    except ValueError:
        raise ValueError("inconsistent assumptions") from None
    targets = (mono(3, 3, 1), mono(3, 3, 2))
    if any(v[t] != 0 for v in kernel for t in targets):
        raise ValueError("assumptions do not determine S3^2.S1 and S3^2.S2")
    vals = (x[targets[0]], x[targets[1]])
    verdict = "excluded" if vals == (0, 0) else "no contradiction"
    return G7Result(vals, verdict)
