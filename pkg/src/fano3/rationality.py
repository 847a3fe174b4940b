"""Rationality verdicts for conic bundles and del Pezzo fibrations.

Verdicts never claim more than the criterion behind them; when a criterion
stops short (theta-characteristic unknown, Euler number -4, low degree) the
answer is ``Undetermined``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .catalog import SCHEMA
from .chow import CISpec, euler_ci

__all__ = [
    "Base",
    "Parity",
    "Status",
    "ConicBundleData",
    "DPFibrationData",
    "Verdict",
    "conic_bundle_verdict",
    "dp_fibration_verdict",
    "classify_ci_model",
]


class Base(str, Enum):
    PLANE = "Plane"
    QUADRIC = "Quadric"


class Parity(str, Enum):
    ODD = "Odd"
    EVEN = "Even"
    UNKNOWN = "Unknown"


class Status(str, Enum):
    RATIONAL = "Rational"
    NONRATIONAL = "Nonrational"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class ConicBundleData:
    base: Base
    disc_degree: int | tuple[int, int]
    standard: bool = True
    theta_parity: Parity = Parity.UNKNOWN

    def __post_init__(self):
        object.__setattr__(self, "base", Base(self.base))
        object.__setattr__(self, "theta_parity", Parity(self.theta_parity))
        if self.base is Base.PLANE:
            if not isinstance(self.disc_degree, int):
                raise ValueError("a plane base takes a single discriminant degree")
            if self.disc_degree < 0:
                raise ValueError("discriminant degree must be non-negative")
        else:
            deg = tuple(self.disc_degree) if not isinstance(self.disc_degree, int) else None
            if deg is None or len(deg) != 2:
                raise ValueError("a quadric base takes a bidegree (n1, n2)")
            if min(deg) < 0:
                raise ValueError("bidegree must be non-negative")
            object.__setattr__(self, "disc_degree", deg)

    def to_json(self) -> dict:
        deg = self.disc_degree if isinstance(self.disc_degree, int) else list(self.disc_degree)
        return {"base": self.base.value, "disc_degree": deg, "standard": self.standard,
                "theta_parity": self.theta_parity.value}


@dataclass(frozen=True)
class DPFibrationData:
    degree: int
    euler: int | None = None
    smooth_standard: bool = True

    def __post_init__(self):
        if not 1 <= self.degree <= 9:
            raise ValueError("del Pezzo degree must be in 1..9")

    def to_json(self) -> dict:
        return {"degree": self.degree, "euler": self.euler, "smooth_standard": self.smooth_standard}


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: str
    citation: str
    inputs: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "verdict": self.status.value, "rule": self.rule,
                "citation": self.citation, "inputs": self.inputs}


_CB_LOW = "conic bundles over P^2 with deg(Delta) <= 4 are rational (contrapositive of the degree >= 5 bound)"
_CB_THETA_ODD = "deg(Delta) = 5: nonrational exactly when the double cover of Delta has an odd theta-characteristic"
_CB_THETA_EVEN = "deg(Delta) = 5 with even theta-characteristic: the conic bundle is rational"
_CB_HIGH = "standard conic bundle over P^2 with deg(Delta) >= 6 is not rational (Shokurov)"
_CB_NONSTD = "the standard model of a non-standard conic bundle has smaller discriminant and is rational again"
_CB_QUADRIC = "Delta.S <= 3 for a ruling line S of P^1 x P^1, so the conic bundle is rational"


def conic_bundle_verdict(cb: ConicBundleData) -> Verdict:
    inputs = cb.to_json()
    if cb.base is Base.QUADRIC:
        if min(cb.disc_degree) <= 3:
            return Verdict(Status.RATIONAL, "cb_quadric_ruling", _CB_QUADRIC, inputs)
        return Verdict(Status.UNDETERMINED, "cb_quadric_open", "no criterion for min(n1, n2) >= 4", inputs)
    d = cb.disc_degree
    if d <= 4:
        return Verdict(Status.RATIONAL, "cb_plane_deg_le_4", _CB_LOW, inputs)
    if not cb.standard:
        if d <= 5:
            return Verdict(Status.RATIONAL, "cb_plane_nonstandard", _CB_NONSTD, inputs)
        return Verdict(Status.UNDETERMINED, "cb_plane_nonstandard_open",
                       "non-standard conic bundle with deg(Delta) >= 6: standard model not computed", inputs)
    if d == 5:
        if cb.theta_parity is Parity.ODD:
            return Verdict(Status.NONRATIONAL, "cb_plane_deg_5_odd", _CB_THETA_ODD, inputs)
        if cb.theta_parity is Parity.EVEN:
            return Verdict(Status.RATIONAL, "cb_plane_deg_5_even", _CB_THETA_EVEN, inputs)
        return Verdict(Status.UNDETERMINED, "cb_plane_deg_5_unknown",
                       "deg(Delta) = 5 and the theta-characteristic parity is not known", inputs)
    return Verdict(Status.NONRATIONAL, "cb_plane_deg_ge_6", _CB_HIGH, inputs)


_DP_HIGH = "del Pezzo surfaces of degree >= 5 with a point are rational, so V is rational over k(P^1)"
_DP_EU = "smooth standard dP4 fibration: Eu(V) not in {0, -8, -4} implies V is not rational (Alexeev)"
_DP_EU_RAT = "smooth standard dP4 fibration with Eu(V) in {0, -8} is rational"
_DP_EU_M4 = "Eu(V) = -4: rational iff a Griffiths component vanishes, which is not computed"


def dp_fibration_verdict(dp: DPFibrationData) -> Verdict:
    inputs = dp.to_json()
    if dp.degree >= 5:
        return Verdict(Status.RATIONAL, "dp_degree_ge_5", _DP_HIGH, inputs)
    if dp.degree == 4 and dp.smooth_standard and dp.euler is not None:
        if dp.euler in (0, -8):
            return Verdict(Status.RATIONAL, "dp4_euler_rational", _DP_EU_RAT, inputs)
        if dp.euler == -4:
            return Verdict(Status.UNDETERMINED, "dp4_euler_minus_4", _DP_EU_M4, inputs)
        return Verdict(Status.NONRATIONAL, "dp4_euler", _DP_EU, inputs)
    if dp.degree == 4:
        why = "Euler number unknown" if dp.euler is None else "fibration not known to be smooth and standard"
        return Verdict(Status.UNDETERMINED, "dp4_open", why, inputs)
    return Verdict(Status.UNDETERMINED, "dp_degree_le_3", "no criterion applied for degree <= 3", inputs)


def classify_ci_model(ci: CISpec) -> Verdict:
    """Verdict for a complete intersection of two relative quadrics in a P^4-bundle over P^1.

    The model is assumed smooth; the citation records that assumption.
    """
    if ci.ambient.rank != 5 or len(ci.divisors) != 2 or any(m != 2 for m, _ in ci.divisors):
        raise ValueError("not a dP4 model")
    eu = euler_ci(ci)
    v = dp_fibration_verdict(DPFibrationData(4, eu, True))
    inputs = {"model": ci.to_json(), "euler": eu, **{k: x for k, x in v.inputs.items() if k != "euler"}}
    return Verdict(v.status, v.rule, v.citation + "; smoothness of the model assumed", inputs)
