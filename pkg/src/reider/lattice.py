"""Numerical divisor classes on a resolution and the Mumford intersection product.

A :class:`SurfaceLattice` is a basis of classes on the minimal resolution
together with its Gram matrix. Some basis elements are exceptional curves,
grouped into one block per singular point. A class on the singular surface is
given by the coordinates of its proper transform (zero on every exceptional
index); its Mumford pullback adds the unique rational exceptional correction
that makes it orthogonal to every exceptional curve.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from . import _linalg as la

Coords = tuple[Fraction, ...]


@dataclass(frozen=True)
class DivisorClass:
    coords: Coords
    is_cartier: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(x) for x in self.coords))

    def __len__(self):
        return len(self.coords)


ClassLike = Union[DivisorClass, Sequence]


def _coords(c: ClassLike) -> Coords:
    if isinstance(c, DivisorClass):
        return c.coords
    return tuple(Fraction(x) for x in c)


@dataclass(frozen=True)
class SurfaceLattice:
    """Gram matrix of a basis on the resolution, with exceptional blocks.

    ``ample`` holds the coordinates of the pulled-back ample class H, so it is
    orthogonal to all exceptional curves. ``canonical_pairing`` optionally
    records ``K . basis_j``; ``None`` entries are unknown.
    """

    gram: tuple[tuple[Fraction, ...], ...]
    exceptional_blocks: tuple[tuple[int, ...], ...] = ()
    ample: Optional[Coords] = None
    canonical_pairing: Optional[tuple[Optional[Fraction], ...]] = None
    basis_names: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(
            self, "gram", tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        )
        object.__setattr__(
            self,
            "exceptional_blocks",
            tuple(tuple(int(i) for i in b) for b in self.exceptional_blocks),
        )
        if self.ample is not None:
            object.__setattr__(self, "ample", _coords(self.ample))
        if self.canonical_pairing is not None:
            object.__setattr__(
                self,
                "canonical_pairing",
                tuple(None if k is None else Fraction(k) for k in self.canonical_pairing),
            )

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def exceptional_indices(self) -> frozenset[int]:
        return frozenset(i for b in self.exceptional_blocks for i in b)

    @property
    def free_indices(self) -> tuple[int, ...]:
        """Basis indices that are not exceptional."""
        exc = self.exceptional_indices
        return tuple(i for i in range(self.rank) if i not in exc)

    def pair(self, u: ClassLike, v: ClassLike) -> Fraction:
        """Plain intersection pairing on the resolution."""
        return la.bilinear(self.gram, _coords(u), _coords(v))

    @property
    def h_sq(self) -> Fraction:
        if self.ample is None:
            raise ValueError("lattice has no ample class")
        return self.pair(self.ample, self.ample)

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)


@dataclass
class ValidationReport:
    errors: list[str] = field(default_factory=list)
    inertia: Optional[tuple[int, int, int]] = None

    @property
    def valid(self) -> bool:
        return not self.errors

    def __bool__(self):
        return self.valid


def validate_lattice(lattice: SurfaceLattice) -> ValidationReport:
    """Check every structural invariant and list all violations found."""
    report = ValidationReport()
    g = lattice.gram
    n = lattice.rank
    if n == 0:
        report.errors.append("empty lattice")
        return report
    if not la.is_square(g):
        report.errors.append("gram matrix is not square")
        return report
    if not la.is_symmetric(g):
        report.errors.append("gram matrix is not symmetric")

    seen: set[int] = set()
    for k, block in enumerate(lattice.exceptional_blocks):
        if not block:
            report.errors.append(f"exceptional block {k} is empty")
            continue
        if any(i < 0 or i >= n for i in block):
            report.errors.append(f"exceptional block {k} has an index out of range")
            continue
        if seen.intersection(block) or len(set(block)) != len(block):
            report.errors.append(f"exceptional block {k} overlaps another block")
        seen.update(block)
        if not la.is_negative_definite(la.submatrix(g, block)):
            report.errors.append(f"exceptional block {k} is not negative definite")

    if lattice.ample is None:
        report.errors.append("ample class missing")
    elif len(lattice.ample) != n:
        report.errors.append("ample class has wrong length")
    else:
        if lattice.pair(lattice.ample, lattice.ample) <= 0:
            report.errors.append("ample class has non-positive square")
        for i in sorted(seen):
            if la.dot(g[i], lattice.ample) != 0:
                report.errors.append(f"ample class meets exceptional curve {i}")

    if lattice.canonical_pairing is not None and len(lattice.canonical_pairing) != n:
        report.errors.append("canonical pairing has wrong length")

    if la.is_symmetric(g):
        report.inertia = la.inertia(g)
        if report.inertia[0] != 1:
            report.errors.append(
                f"gram matrix has {report.inertia[0]} positive directions, expected 1"
            )
    return report


def require_valid(lattice: SurfaceLattice) -> None:
    report = validate_lattice(lattice)
    if not report:
        raise ValueError("invalid lattice: " + "; ".join(report.errors))


@dataclass(frozen=True)
class MumfordClass:
    tilde_part: DivisorClass
    delta_part: DivisorClass

    @property
    def coords(self) -> Coords:
        return tuple(a + b for a, b in zip(self.tilde_part.coords, self.delta_part.coords))

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.coords)


def pushforward(c: ClassLike, lattice: SurfaceLattice) -> DivisorClass:
    """Drop the exceptional coefficients, keeping the proper-transform part."""
    exc = lattice.exceptional_indices
    cs = _coords(c)
    flag = c.is_cartier if isinstance(c, DivisorClass) else None
    return DivisorClass(tuple(0 if i in exc else x for i, x in enumerate(cs)), flag)


def mumford_pullback(c: ClassLike, lattice: SurfaceLattice) -> MumfordClass:
    """Add the exceptional correction making ``c`` orthogonal to every E.

    Per block this solves ``M_p delta_p = -(c . E_pj)_j``.
    """
    cs = _coords(c)
    if len(cs) != lattice.rank:
        raise ValueError("class length does not match lattice rank")
    exc = lattice.exceptional_indices
    if any(cs[i] != 0 for i in exc):
        raise ValueError("class has nonzero exceptional coefficients")
    delta = [Fraction(0)] * lattice.rank
    for block in lattice.exceptional_blocks:
        m = la.submatrix(lattice.gram, block)
        rhs = [-la.dot(lattice.gram[j], cs) for j in block]
        try:
            sol = la.solve(m, rhs)
        except ZeroDivisionError:
            raise RuntimeError("singular exceptional block; lattice not validated") from None
        for j, x in zip(block, sol):
            delta[j] = x
    flag = c.is_cartier if isinstance(c, DivisorClass) else None
    result = MumfordClass(DivisorClass(cs, flag), DivisorClass(delta))
    if flag and not result.is_integral:
        raise ValueError("class flagged Cartier has a non-integral pullback")
    return result


def mumford_product(a: ClassLike, b: ClassLike, lattice: SurfaceLattice) -> Fraction:
    """``pullback(a) . tilde(b)``; both arguments are proper-transform classes."""
    pb = mumford_pullback(a, lattice)
    bs = _coords(b)
    if any(bs[i] != 0 for i in lattice.exceptional_indices):
        raise ValueError("class has nonzero exceptional coefficients")
    return lattice.pair(pb.coords, bs)


def intersect(a: ClassLike, b: ClassLike, lattice: SurfaceLattice) -> Fraction:
    """Mumford product of arbitrary resolution coordinates, after pushforward.

    Pulled-back classes such as the ample class go through unchanged, since
    pushing forward and pulling back recovers them.
    """
    return mumford_product(pushforward(a, lattice), pushforward(b, lattice), lattice)


def denominator_bound(lattice: SurfaceLattice) -> int:
    """lcm of ``|det M_p|`` over the exceptional blocks (1 if there are none)."""
    n = 1
    for block in lattice.exceptional_blocks:
        m = la.submatrix(lattice.gram, block)
        if any(x.denominator != 1 for row in m for x in row):
            raise ValueError("exceptional block has non-integer entries")
        n = math.lcm(n, abs(int(la.det(m))))
    return n


@dataclass(frozen=True)
class HodgeIndexResult:
    holds: bool
    lhs: Fraction  # (d.d)(h.h)
    rhs: Fraction  # (d.h)^2

    def __bool__(self):
        return self.holds


def hodge_index_check(h: ClassLike, d: ClassLike, lattice: SurfaceLattice) -> HodgeIndexResult:
    hh = intersect(h, h, lattice)
    if hh <= 0:
        raise ValueError("h must have positive square")
    lhs = intersect(d, d, lattice) * hh
    rhs = intersect(d, h, lattice) ** 2
    return HodgeIndexResult(lhs <= rhs, lhs, rhs)


def lattice_from_blocks(
    free_gram: Sequence[Sequence],
    blocks: Iterable[Sequence[Sequence]],
    coupling: Optional[Sequence[Sequence]] = None,
    ample: Optional[Sequence] = None,
) -> SurfaceLattice:
    """Assemble a lattice from a free part, exceptional blocks and their coupling.

    The free classes come first, then each block in order. ``coupling[i]`` is
    the row of intersections of free class ``i`` with all exceptional curves.
    ``ample`` gives only the free coordinates of H; its exceptional part is
    filled in by pulling back.
    """
    blocks = [la.to_matrix(b) for b in blocks]
    k = len(free_gram)
    e = sum(len(b) for b in blocks)
    n = k + e
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(k):
        for j in range(k):
            g[i][j] = Fraction(free_gram[i][j])
    index_blocks = []
    off = k
    for b in blocks:
        idx = tuple(range(off, off + len(b)))
        for a, i in enumerate(idx):
            for c, j in enumerate(idx):
                g[i][j] = b[a][c]
        index_blocks.append(idx)
        off += len(b)
    if coupling is not None:
        for i in range(k):
            for j in range(e):
                g[i][k + j] = g[k + j][i] = Fraction(coupling[i][j])
    lat = SurfaceLattice(g, index_blocks)
    if ample is None:
        return lat
    h = mumford_pullback(tuple(ample) + (0,) * e, lat)
    return SurfaceLattice(g, index_blocks, h.coords)
