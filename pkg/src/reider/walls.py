"""Exhaustive search for numerical destabilizers on finite windows.

A candidate is a pair ``(r, A)`` of a rank and a first Chern class on the
surface with

    (r - 1) s H^2 < A.H <= r s H^2     and     A.H <= A^2/r + r (c_x + 2l).

At ``s = 1/2`` and under ``H^2 > (c_x + 2l + 1)^2`` with ``H`` Cartier, every
candidate must have either ``r = 1`` and ``0 < A.H < c_x + 2l + 1`` or
``r >= 3`` and ``H^2 < 3 (c_x + 2l + 1)``; :func:`verify_lemma_hodge` checks
this on the window.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bogomolov import default_workers
from .lattice import SurfaceLattice, intersect, require_valid


@dataclass(frozen=True)
class SearchWindow:
    """Ranks ``1..r_max`` and one integer interval per basis coordinate.

    Intervals on exceptional indices are ignored: classes on the surface are
    enumerated through their proper-transform coordinates.
    """

    r_max: int
    coord_bounds: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coord_bounds", tuple((int(a), int(b)) for a, b in self.coord_bounds)
        )
        if self.r_max < 1:
            raise ValueError("r_max must be at least 1")
        if any(a > b for a, b in self.coord_bounds):
            raise ValueError("empty coordinate interval")

    @classmethod
    def box(cls, r_max: int, n: int, rank: int) -> "SearchWindow":
        return cls(r_max, ((-n, n),) * rank)


@dataclass(frozen=True)
class Candidate:
    r: int
    a: tuple[int, ...]
    a_dot_h: Fraction
    a_sq: Fraction


def _satisfies(r: int, a_dot_h: Fraction, a_sq: Fraction, h_sq, s, bound) -> bool:
    return (r - 1) * s * h_sq < a_dot_h <= r * s * h_sq and a_dot_h <= a_sq / r + r * bound


def _classes(lattice: SurfaceLattice, window: SearchWindow):
    free = lattice.free_indices
    ranges = [range(window.coord_bounds[i][0], window.coord_bounds[i][1] + 1) for i in free]
    for combo in itertools.product(*ranges):
        a = [0] * lattice.rank
        for i, x in zip(free, combo):
            a[i] = x
        yield tuple(a)


def _scan(args) -> list[Candidate]:
    lattice, c_x, l, window, s, chunk = args
    h = lattice.ample
    h_sq = lattice.h_sq
    bound = c_x + 2 * l
    out = []
    for a in chunk:
        a_dot_h = intersect(a, h, lattice)
        a_sq = intersect(a, a, lattice)
        for r in range(1, window.r_max + 1):
            if _satisfies(r, a_dot_h, a_sq, h_sq, s, bound):
                out.append(Candidate(r, a, a_dot_h, a_sq))
    return out


def enumerate_candidates(
    lattice: SurfaceLattice,
    c_x,
    l: int,
    window: SearchWindow,
    s=Fraction(1, 2),
    workers: Optional[int] = None,
) -> list[Candidate]:
    """All window points passing both inequalities, sorted by ``(r, a)``."""
    require_valid(lattice)
    if len(window.coord_bounds) != lattice.rank:
        raise ValueError("window must bound every basis coordinate")
    c_x, s = Fraction(c_x), Fraction(s)
    classes = list(_classes(lattice, window))
    workers = default_workers() if workers is None else workers
    if workers > 1 and len(classes) > 1:
        size = -(-len(classes) // workers)
        chunks = [classes[i:i + size] for i in range(0, len(classes), size)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = ex.map(_scan, [(lattice, c_x, l, window, s, c) for c in chunks])
            found = [c for part in parts for c in part]
    else:
        found = _scan((lattice, c_x, l, window, s, classes))
    return sorted(found, key=lambda c: (c.r, c.a))


class HypothesisNotMet(ValueError):
    pass


@dataclass
class LemmaReport:
    window: SearchWindow
    c_x: Fraction
    l: int
    h_sq: Fraction
    candidates: list[Candidate]
    violations: list[Candidate] = field(default_factory=list)
    modeling_errors: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations and not self.modeling_errors


def in_lemma_conclusion(c: Candidate, h_sq, c_x, l) -> bool:
    bound = c_x + 2 * l + 1
    if c.r == 1:
        return 0 < c.a_dot_h < bound
    return c.r >= 3 and h_sq < 3 * bound


def verify_lemma_hodge(
    lattice: SurfaceLattice,
    c_x,
    l: int,
    window: SearchWindow,
    workers: Optional[int] = None,
) -> LemmaReport:
    require_valid(lattice)
    c_x = Fraction(c_x)
    h_sq = lattice.h_sq
    if not h_sq > (c_x + 2 * l + 1) ** 2:
        raise HypothesisNotMet(
            f"hypothesis not met: H^2 = {h_sq} <= (c_x + 2l + 1)^2 = {(c_x + 2 * l + 1) ** 2}"
        )
    cands = enumerate_candidates(lattice, c_x, l, window, Fraction(1, 2), workers)
    report = LemmaReport(window, c_x, l, h_sq, cands)
    if h_sq.denominator != 1:
        report.modeling_errors.append(f"H^2 = {h_sq} is not an integer")
    for i in lattice.free_indices:
        e = [0] * lattice.rank
        e[i] = 1
        x = intersect(e, lattice.ample, lattice)
        if x.denominator != 1:
            report.modeling_errors.append(f"H . basis[{i}] = {x} is not an integer")
    for c in cands:
        if not in_lemma_conclusion(c, h_sq, c_x, l):
            report.violations.append(c)
    return report
