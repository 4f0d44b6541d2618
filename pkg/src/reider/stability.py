"""Central charges on the half-plane of stability conditions ``(tH, sH)``.

Everything stays in the rationals: ``t`` enters only through ``t^2`` except
for the overall positive factor in the Bridgeland rank, which is dropped
(:func:`scaled_rank`) because it cancels in every slope comparison.

``ch2`` uses the convention ``ch2(O_X) = 0`` and ``ch2(O_p) = 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .lattice import ClassLike, Coords, SurfaceLattice, _coords, intersect, require_valid


@dataclass(frozen=True)
class ChernCharacter:
    ch0: int
    ch1: Coords
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch0", int(self.ch0))
        object.__setattr__(self, "ch1", _coords(self.ch1))
        object.__setattr__(self, "ch2", Fraction(self.ch2))

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(
            self.ch0 + other.ch0,
            tuple(a + b for a, b in zip(self.ch1, other.ch1)),
            self.ch2 + other.ch2,
        )

    def __neg__(self) -> "ChernCharacter":
        return ChernCharacter(-self.ch0, tuple(-a for a in self.ch1), -self.ch2)

    def __sub__(self, other):
        return self + (-other)


@dataclass(frozen=True)
class StabilityPoint:
    s: Fraction
    t_sq: Fraction
    lattice: SurfaceLattice
    c_x: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "t_sq", Fraction(self.t_sq))
        object.__setattr__(self, "c_x", Fraction(self.c_x))
        if self.t_sq <= 0:
            raise ValueError("t_sq must be positive")
        if self.c_x < 0:
            raise ValueError("c_x must be nonnegative")


def ch_of_twist(lattice: SurfaceLattice, l_z: int) -> ChernCharacter:
    """``L (x) I_Z`` with ``c1(L) = H`` and ``Z`` of length ``l_z``."""
    require_valid(lattice)
    if l_z < 0:
        raise ValueError("l_z must be nonnegative")
    return ChernCharacter(1, lattice.ample, lattice.h_sq / 2 - l_z)


def ch_of_type_O(l_t: int, lattice: SurfaceLattice) -> ChernCharacter:
    """``O_T - O_X``, i.e. a type-O object with a length ``l_t`` point sheaf."""
    if l_t < 0:
        raise ValueError("l_t must be nonnegative")
    return ChernCharacter(-1, lattice.zero().coords, l_t)


def point_class(length: int, lattice: SurfaceLattice) -> ChernCharacter:
    return ChernCharacter(0, lattice.zero().coords, length)


def _dot_h(c: ClassLike, lattice: SurfaceLattice) -> Fraction:
    return intersect(c, lattice.ample, lattice)


def scaled_rank(ch: ChernCharacter, pt: StabilityPoint) -> Fraction:
    """Bridgeland rank divided by ``t``: ``H . (ch1 - s ch0 H)``."""
    lat = pt.lattice
    return _dot_h(ch.ch1, lat) - pt.s * ch.ch0 * lat.h_sq


def bridgeland_degree(ch: ChernCharacter, pt: StabilityPoint) -> Fraction:
    lat = pt.lattice
    h_sq = lat.h_sq
    return (
        ch.ch2
        - pt.s * _dot_h(ch.ch1, lat)
        + ch.ch0 * ((pt.s**2 - pt.t_sq) * h_sq - pt.c_x) / 2
    )


class Order(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class NotInHeart(ValueError):
    pass


def _heart_data(ch: ChernCharacter, pt: StabilityPoint) -> tuple[Fraction, Fraction]:
    rho = scaled_rank(ch, pt)
    deg = bridgeland_degree(ch, pt)
    if rho < 0 or (rho == 0 and deg <= 0):
        raise NotInHeart("not in heart")
    return rho, deg


def slope_compare(a: ChernCharacter, b: ChernCharacter, pt: StabilityPoint) -> Order:
    """Compare Bridgeland slopes exactly; rank zero means slope +infinity."""
    ra, da = _heart_data(a, pt)
    rb, db = _heart_data(b, pt)
    if ra == 0 or rb == 0:
        key = (ra != 0) - (rb != 0)  # finite slope loses to infinite
        return Order(-key)
    lhs, rhs = da * rb, db * ra
    return Order((lhs > rhs) - (lhs < rhs))


def discriminant(ch: ChernCharacter, c_x, lattice: SurfaceLattice) -> Fraction:
    """``ch1^2 - 2 ch0 ch2 + c_x ch0^2``."""
    return (
        intersect(ch.ch1, ch.ch1, lattice)
        - 2 * ch.ch0 * ch.ch2
        + Fraction(c_x) * ch.ch0**2
    )


def standard_point(lattice: SurfaceLattice, l: int, c_x) -> StabilityPoint:
    """``s = 1/2`` and ``t^2 = 1/4 - (2l + c_x)/H^2``: the twist and type-O
    classes of length ``l`` both get degree zero there."""
    c_x = Fraction(c_x)
    t_sq = Fraction(1, 4) - (2 * l + c_x) / lattice.h_sq
    if t_sq <= 0:
        raise ValueError("degenerate stability point")
    return StabilityPoint(Fraction(1, 2), t_sq, lattice, c_x)


class HeartKind(str, Enum):
    RANK1_TWIST = "rank1_twist"
    TYPE_O = "type_O"


def heart_membership(kind, s) -> bool:
    kind = HeartKind(kind)
    s = Fraction(s)
    if kind is HeartKind.RANK1_TWIST:
        return s < 1
    return s >= 0


def mu_slope(ch: ChernCharacter, lattice: SurfaceLattice) -> Union[Fraction, float]:
    if ch.ch0 == 0:
        return math.inf
    return _dot_h(ch.ch1, lattice) / ch.ch0
