"""Effective bounds: the functions m and m', vanishing hypotheses, Reider tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _check_query(c_x, l) -> Fraction:
    c_x = Fraction(c_x)
    if c_x < 0:
        raise ValueError("c_x must be nonnegative")
    if l < 0:
        raise ValueError("l must be nonnegative")
    return c_x


def _partition_cost(c_x: Fraction, l1: int, l2: int) -> Fraction:
    return max(2 * (2 * l1 + c_x), c_x + 2 * l2 + 1)


def m(c_x, l: int) -> Fraction:
    """Minimum over ``l1 + l2 = l`` of ``max(2(2 l1 + c_x), c_x + 2 l2 + 1)``."""
    c_x = _check_query(c_x, l)
    return min(_partition_cost(c_x, l1, l - l1) for l1 in range(l + 1))


def m_prime(c_x, l: int) -> Fraction:
    c_x = _check_query(c_x, l)
    if c_x == 1 and l == 0:
        return Fraction(3)
    return m(c_x, l)


def m_closed_form(c_x, l: int) -> Fraction:
    """Three-term closed expression for m. Not authoritative: it overshoots
    the partition minimum for some inputs, e.g. (0, 9)."""
    c_x = _check_query(c_x, l)
    return min(
        max(2 * c_x, c_x + 2 * l + 1),
        c_x + 2 * _ceil((4 * l + c_x + 1) / 6) + 1,
        2 * c_x + 4 * _ceil((2 * l - c_x + 1) / 6),
    )


@dataclass(frozen=True)
class Disagreement:
    c_x: Fraction
    l: int
    m: Fraction
    closed: Fraction


def compare_m_forms(c_x_grid: Iterable, l_max: int) -> list[Disagreement]:
    out = []
    for c in c_x_grid:
        c = Fraction(c)
        for l in range(l_max + 1):
            a, b = m(c, l), m_closed_form(c, l)
            if a != b:
                out.append(Disagreement(c, l, a, b))
    return out


@dataclass(frozen=True)
class Condition:
    """A named inequality ``lhs <relation> rhs`` with exact sides."""

    name: str
    lhs: Fraction
    relation: str
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return {">=": self.lhs >= self.rhs, ">": self.lhs > self.rhs}[self.relation]


@dataclass
class VanishingReport:
    satisfied: bool
    partition: tuple[int, int]
    failed_conditions: list[Condition] = field(default_factory=list)


def vanishing_conditions(h_sq, hc_min, c_x, l1: int, l2: int) -> list[Condition]:
    h_sq, hc_min, c_x = Fraction(h_sq), Fraction(hc_min), Fraction(c_x)
    return [
        Condition("H^2 >= (C_X + 2 l2 + 1)^2", h_sq, ">=", (c_x + 2 * l2 + 1) ** 2),
        # the "+ epsilon" bound is a strict inequality
        Condition("H^2 > 4 (l1 + l2 + C_X)", h_sq, ">", 4 * (l1 + l2 + c_x)),
        Condition("H.C >= 2 (2 l1 + C_X)", hc_min, ">=", 2 * (2 * l1 + c_x)),
        Condition("H.C >= C_X + 2 l2 + 1", hc_min, ">=", c_x + 2 * l2 + 1),
    ]


def check_general_vanishing(
    h_sq,
    hc_min,
    c_x,
    l_z: int,
    l_t: int = 0,
    partition: Optional[tuple[int, int]] = None,
) -> VanishingReport:
    """Check the vanishing hypotheses for one partition, or for any of them.

    Without a partition the first one (by ``l1``) that works is reported; if
    none works, the one with fewest failures is.
    """
    if l_z < 0 or l_t < 0:
        raise ValueError("lengths must be nonnegative")
    l = l_z + l_t
    if partition is not None:
        l1, l2 = partition
        if l1 < 0 or l2 < 0 or l1 + l2 != l:
            raise ValueError(f"partition must be two nonnegative integers summing to {l}")
        candidates = [(l1, l2)]
    else:
        candidates = [(l1, l - l1) for l1 in range(l + 1)]
    best = None
    for p in candidates:
        failed = [c for c in vanishing_conditions(h_sq, hc_min, c_x, *p) if not c.holds]
        if not failed:
            return VanishingReport(True, p, [])
        if best is None or len(failed) < len(best[1]):
            best = (p, failed)
    return VanishingReport(False, best[0], best[1])


class InternalInconsistency(RuntimeError):
    pass


@dataclass
class FujitaResult:
    a: int
    report: VanishingReport


def fujita_power(c_x, l_z: int) -> FujitaResult:
    """Smallest integer power ``a >= m'`` with its vanishing hypotheses re-checked
    at ``H^2 = a^2``, ``H.C >= a``."""
    a = _ceil(Fraction(m_prime(c_x, l_z)))
    report = check_general_vanishing(a * a, a, c_x, l_z, 0)
    if not report.satisfied:
        raise InternalInconsistency(f"power {a} fails its own vanishing hypotheses")
    return FujitaResult(a, report)


class StabilityKind(str, Enum):
    PROP_O = "prop_O"
    PROP_ORK1 = "prop_Ork1"
    PROP_RK1 = "prop_rk1"
    PROP_LIZ = "prop_liz"


@dataclass
class StabilityHypothesisReport:
    kind: StabilityKind
    satisfied: bool
    failed_conditions: list[Condition]
    degenerate_point: bool


def check_stability_hypothesis(kind, h_sq, aux, c_x, l: int, structure_sheaf: bool = False):
    """Numerical hypotheses of the stability statements at ``s = 1/2``.

    ``aux`` is the divisibility bound M for ``prop_O``/``prop_liz`` and the
    minimum of H.C over effective curves for ``prop_Ork1``/``prop_rk1``.
    ``structure_sheaf`` adds the extra bound needed when the type-O object is
    the shifted structure sheaf itself (``prop_O`` only).
    """
    kind = StabilityKind(kind)
    h_sq, aux, c_x = Fraction(h_sq), Fraction(aux), Fraction(c_x)
    b = c_x + 2 * l + 1
    if kind is StabilityKind.PROP_O:
        conds = [Condition("H^2 > (C_X + 2l + 1)^2", h_sq, ">", b**2),
                 Condition("M >= C_X + 2l + 1", aux, ">=", b)]
        if structure_sheaf:
            conds.append(Condition("H^2 >= 3 (C_X + 1)", h_sq, ">=", 3 * (c_x + 1)))
    elif kind is StabilityKind.PROP_ORK1:
        conds = [Condition("H^2 >= (C_X + 2l + 1)^2", h_sq, ">=", b**2),
                 Condition("H.C >= C_X + 2l + 1", aux, ">=", b)]
    elif kind is StabilityKind.PROP_RK1:
        conds = [Condition("H^2 > 4 (2l + C_X)", h_sq, ">", 4 * (2 * l + c_x)),
                 Condition("H.C >= 2 (2l + C_X)", aux, ">=", 2 * (2 * l + c_x))]
    else:
        conds = [Condition("H^2 > (C_X + 2l + 1)^2", h_sq, ">", b**2),
                 Condition("M >= max(2 (C_X + 2l), C_X + 1)", aux, ">=",
                           max(2 * (c_x + 2 * l), c_x + 1))]
    failed = [c for c in conds if not c.holds]
    degenerate = h_sq <= 0 or Fraction(1, 4) - (2 * l + c_x) / h_sq <= 0
    return StabilityHypothesisReport(kind, not failed and not degenerate, failed, degenerate)


@dataclass
class ReiderTable:
    c_x: Fraction
    l_prime: int
    h_sq: Fraction
    denom: int
    pairs: list[tuple[Fraction, Fraction]]
    hypothesis_ok: bool


def reider_l_prime(l_z: int, l_t: int) -> int:
    return 2 * ((l_z + l_t + 1) // 2)


def reider_table(c_x, l_z: int, l_t: int, h_sq, denom: int = 1) -> ReiderTable:
    """All ``(D.H, D^2)`` in ``(1/denom) Z`` allowed for a Reider divisor.

    Constraints: ``D^2 < 1``, ``0 < D.H <= D^2 + c_x + l'`` and, when
    ``D^2 > 0``, the Hodge index bound ``D^2 H^2 <= (D.H)^2``.
    """
    c_x, h_sq = Fraction(c_x), Fraction(h_sq)
    if c_x < 0 or l_z < 0 or l_t < 0:
        raise ValueError("inputs must be nonnegative")
    if denom < 1:
        raise ValueError("denom must be a positive integer")
    lp = reider_l_prime(l_z, l_t)
    slack = c_x + lp
    pairs = []
    # D.H <= D^2 + slack < 1 + slack, and D^2 >= D.H - slack
    x_hi = _ceil((1 + slack) * denom) - 1
    for xn in range(1, x_hi + 1):
        x = Fraction(xn, denom)
        y_lo = _ceil((x - slack) * denom)
        for yn in range(y_lo, denom):
            y = Fraction(yn, denom)
            if y > 0 and y * h_sq > x * x:
                continue
            pairs.append((x, y))
    ok = h_sq > (c_x + lp + 1) ** 2
    return ReiderTable(c_x, lp, h_sq, denom, pairs, ok)
