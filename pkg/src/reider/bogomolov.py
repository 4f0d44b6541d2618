"""Bogomolov constants of normal surfaces from resolution data.

For a reflexive sheaf of rank r on the surface, the discriminant drop on the
resolution is controlled by ``h0 = h^0(R^1 f_* O)`` and by an exceptional
correction divisor whose pairings with the exceptional curves are integers
``v_j`` in a box. The constant must dominate

    value(r, v) = (4 r h0 + v^T M^-1 v - r k^T M^-1 v) / r^2 + C_resolution

for every admissible (r, v), where ``M`` is the block intersection matrix and
``k_j = K . E_j``. :func:`cx_continuous` relaxes ``v`` to all real vectors;
:func:`cx_integer` searches the integer boxes up to a rank cap.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from . import _linalg as la


class KosekiKind(str, Enum):
    MINIMAL_GENERAL_TYPE = "minimal_general_type"
    QUASI_ELLIPTIC_KAPPA1 = "quasi_elliptic_kappa1"
    OTHER = "other"


def koseki_base_constant(kind, k_squared: int = 0, chi_O: int = 0) -> Fraction:
    """Bogomolov constant of a smooth surface in positive characteristic."""
    kind = KosekiKind(kind)
    if kind is KosekiKind.MINIMAL_GENERAL_TYPE:
        value = Fraction(2 + 5 * k_squared - chi_O)
    elif kind is KosekiKind.QUASI_ELLIPTIC_KAPPA1:
        value = Fraction(2 - chi_O)
    else:
        value = Fraction(0)
    return max(value, Fraction(0))


@dataclass(frozen=True)
class SingularPointData:
    """Exceptional data over one singular point.

    ``canonical`` defaults to the adjunction value ``-E_j^2 - 2 chi(O_{E_j})``.
    """

    gram: tuple[tuple[int, ...], ...]
    chi: tuple[int, ...]
    canonical: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        if any(x.denominator != 1 for row in gram for x in row):
            raise ValueError("exceptional intersection matrix must be integral")
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "chi", tuple(int(x) for x in self.chi))
        m = len(gram)
        if len(self.chi) != m:
            raise ValueError("chi must have one entry per exceptional curve")
        if not la.is_negative_definite(gram):
            raise ValueError("exceptional intersection matrix is not negative definite")
        derived = tuple(Fraction(-gram[j][j] - 2 * self.chi[j]) for j in range(m))
        if self.canonical is None:
            object.__setattr__(self, "canonical", derived)
        else:
            given = tuple(Fraction(x) for x in self.canonical)
            if given != derived:
                raise ValueError(
                    "canonical pairing disagrees with adjunction: "
                    f"given {list(map(str, given))}, derived {list(map(str, derived))}"
                )
            object.__setattr__(self, "canonical", given)

    @property
    def size(self) -> int:
        return len(self.gram)

    def k_quadratic(self) -> Fraction:
        """``k^T (-M)^-1 k``; nonnegative since ``-M`` is positive definite."""
        neg = [[-x for x in row] for row in self.gram]
        return la.dot(self.canonical, la.solve(neg, self.canonical))

    def box_upper(self, r: int, h0: int) -> list[int]:
        return [(r + 2) * h0 - r * self.chi[j] - r * self.gram[j][j] for j in range(self.size)]


@dataclass(frozen=True)
class ResolutionProfile:
    points: tuple[SingularPointData, ...]
    h0_r1: int = 0
    base_constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "base_constant", Fraction(self.base_constant))
        if self.h0_r1 < 0:
            raise ValueError("h0_r1 must be nonnegative")
        if self.base_constant < 0:
            raise ValueError("base_constant must be nonnegative")

    def envelope(self, r: int) -> Fraction:
        """Continuous supremum over correction divisors at fixed rank ``r``."""
        quad = sum((p.k_quadratic() for p in self.points), Fraction(0))
        return Fraction(4 * self.h0_r1, r) + quad / 4 + self.base_constant


class Method(str, Enum):
    CONTINUOUS = "continuous"
    INTEGER_CERTIFIED = "integer_certified"
    INTEGER_HEURISTIC = "integer_heuristic"


@dataclass(frozen=True)
class Witness:
    r: int
    v: tuple[tuple[int, ...], ...]  # one intersection vector per singular point


@dataclass(frozen=True)
class CxEstimate:
    value: Fraction
    method: Method
    witness: Optional[Witness] = None
    r_cap: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.method is not Method.INTEGER_HEURISTIC


def cx_continuous(profile: ResolutionProfile) -> CxEstimate:
    # envelope is decreasing in r, so the supremum sits at r = 1
    return CxEstimate(max(Fraction(0), profile.envelope(1)), Method.CONTINUOUS)


@dataclass(frozen=True)
class _ScaledForm:
    """Integer-scaled data for ``v^T M^-1 v - r k^T M^-1 v`` on one point."""

    q: tuple[tuple[int, ...], ...]
    lin: tuple[int, ...]
    denom: int

    @classmethod
    def of(cls, p: SingularPointData) -> "_ScaledForm":
        inv = la.inverse(p.gram)
        w = la.matvec(inv, p.canonical)  # M^-1 k, symmetric M
        denom = math.lcm(*(x.denominator for x in [*w, *(y for row in inv for y in row)]))
        q = tuple(tuple(int(x * denom) for x in row) for row in inv)
        lin = tuple(int(x * denom) for x in w)
        return cls(q, lin, denom)

    def best(self, r: int, upper: Sequence[int]) -> tuple[Fraction, tuple[int, ...]]:
        """Max over the box ``0 <= v_j <= upper_j``; lexicographically first argmax."""
        n = len(self.lin)
        best_val = None
        best_v = None
        for v in itertools.product(*(range(u + 1) for u in upper)):
            s = 0
            for i in range(n):
                vi = v[i]
                if vi:
                    row = self.q[i]
                    s += vi * (sum(row[j] * v[j] for j in range(n)) - r * self.lin[i])
            if best_val is None or s > best_val:
                best_val, best_v = s, v
        return Fraction(best_val, self.denom), best_v


def _rank_value(args) -> Optional[tuple[Fraction, Witness]]:
    profile, forms, r = args
    uppers = [p.box_upper(r, profile.h0_r1) for p in profile.points]
    if any(u < 0 for up in uppers for u in up):
        return None
    total = Fraction(0)
    vs = []
    for form, up in zip(forms, uppers):
        val, v = form.best(r, up)
        total += val
        vs.append(v)
    value = (4 * r * profile.h0_r1 + total) / r**2 + profile.base_constant
    return value, Witness(r, tuple(vs))


def cx_integer(profile: ResolutionProfile, r_cap: int, workers: Optional[int] = None) -> CxEstimate:
    """Integer search over ranks ``1..r_cap`` and the admissible boxes.

    The objective separates over singular points, so each box is searched on
    its own. A rank whose box is empty contributes nothing. ``workers > 1``
    spreads ranks over processes; the reduction is order-independent.
    """
    if r_cap < 1:
        raise ValueError("r_cap must be at least 1")
    if workers is None:
        workers = default_workers()
    forms = [_ScaledForm.of(p) for p in profile.points]
    jobs = [(profile, forms, r) for r in range(1, r_cap + 1)]
    if workers > 1 and r_cap > 1:
        with ProcessPoolExecutor(max_workers=min(workers, r_cap)) as ex:
            results = list(ex.map(_rank_value, jobs))
    else:
        results = [_rank_value(j) for j in jobs]

    best: Optional[tuple[Fraction, Witness]] = None
    for res in results:  # ascending r, strict improvement keeps the smallest witness
        if res is not None and (best is None or res[0] > best[0]):
            best = res
    value = Fraction(0) if best is None or best[0] < 0 else best[0]
    witness = None if best is None else best[1]
    certified = value >= profile.envelope(r_cap + 1)
    method = Method.INTEGER_CERTIFIED if certified else Method.INTEGER_HEURISTIC
    return CxEstimate(value, method, witness, r_cap)


def default_workers() -> int:
    """Worker cap from ``REIDER_THREADS`` (default 1)."""
    raw = os.environ.get("REIDER_THREADS")
    if not raw:
        return 1
    n = int(raw)
    if n < 1:
        raise ValueError("REIDER_THREADS must be a positive integer")
    return n


def cone_profile(d: int) -> ResolutionProfile:
    """Cone over a smooth plane curve of degree ``d``: one curve with ``E^2 = -d``."""
    if d < 1:
        raise ValueError("degree must be positive")
    genus = (d - 1) * (d - 2) // 2
    return ResolutionProfile((SingularPointData([[-d]], [1 - genus]),), h0_r1=genus)


def cartan_block(kind: str, n: int) -> list[list[int]]:
    """Negated Cartan matrix of an ADE configuration of (-2)-curves."""
    kind = kind.upper()
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j):
        g[i][j] = g[j][i] = 1

    if kind == "A" and n >= 1:
        for i in range(n - 1):
            join(i, i + 1)
    elif kind == "D" and n >= 4:
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif kind == "E" and n in (6, 7, 8):
        for i in range(n - 2):
            join(i, i + 1)
        join(2, n - 1)
    else:
        raise ValueError(f"no ADE diagram {kind}{n}")
    return g


def ade_profile(kind: str, n: int, base_constant=0) -> ResolutionProfile:
    point = SingularPointData(cartan_block(kind, n), [1] * n)
    return ResolutionProfile((point,), h0_r1=0, base_constant=base_constant)
