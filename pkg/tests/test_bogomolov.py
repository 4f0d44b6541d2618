import itertools
import random
from fractions import Fraction

import pytest

from reider import _linalg as la
from reider.bogomolov import (
    Method,
    ResolutionProfile,
    SingularPointData,
    ade_profile,
    cartan_block,
    cone_profile,
    cx_continuous,
    cx_integer,
    koseki_base_constant,
)


def brute_cx(profile, r_cap):
    """Oracle: joint box search, divisor coefficients alpha = M^-1 v, value from c1^2 and K.c1."""
    best = None
    for r in range(1, r_cap + 1):
        boxes = []
        for p in profile.points:
            up = [(r + 2) * profile.h0_r1 - r * p.chi[j] - r * p.gram[j][j] for j in range(p.size)]
            boxes.append([range(u + 1) for u in up])
        if any(len(b) == 0 for box in boxes for b in box):
            continue
        flat = [b for box in boxes for b in box]
        for v in itertools.product(*flat):
            c1_sq = Fraction(0)
            c1_k = Fraction(0)
            off = 0
            for p in profile.points:
                vp = v[off:off + p.size]
                off += p.size
                alpha = la.solve(p.gram, vp)
                c1_sq += la.bilinear(p.gram, alpha, alpha)
                c1_k += la.dot(p.canonical, alpha)
            val = (4 * r * profile.h0_r1 + c1_sq - r * c1_k) / r**2 + profile.base_constant
            if best is None or val > best:
                best = val
    return max(Fraction(0), best if best is not None else Fraction(0))


@pytest.mark.parametrize(
    "kind, k2, chi, expected",
    [("minimal_general_type", 1, 1, 6), ("other", 0, 0, 0), ("quasi_elliptic_kappa1", 0, 2, 0),
     ("quasi_elliptic_kappa1", 0, -1, 3), ("minimal_general_type", 0, 9, 0)],
)
def test_koseki(kind, k2, chi, expected):
    assert koseki_base_constant(kind, k2, chi) == expected


def test_adjunction_default():
    p = SingularPointData([[-3]], [0])
    assert p.canonical == (3,)


def test_canonical_mismatch():
    with pytest.raises(ValueError, match="adjunction"):
        SingularPointData([[-3]], [0], [2])


def test_not_negative_definite():
    with pytest.raises(ValueError):
        SingularPointData([[-1, 2], [2, -1]], [1, 1])


class TestContinuous:
    def test_cone_d3(self):
        est = cx_continuous(cone_profile(3))
        assert est.value == Fraction(19, 4)
        assert est.method is Method.CONTINUOUS

    def test_ade(self):
        assert cx_continuous(ade_profile("A", 3)).value == 0

    @pytest.mark.parametrize("d", range(1, 13))
    def test_cone_family(self, d):
        expected = 2 * (d - 1) * (d - 2) + Fraction(d * (d - 2) ** 2, 4)
        assert cx_continuous(cone_profile(d)).value == expected

    def test_scaling_in_h0(self):
        p = ResolutionProfile((SingularPointData([[-3]], [0]),), h0_r1=1)
        q = ResolutionProfile(p.points, h0_r1=2)
        assert cx_continuous(q).value - cx_continuous(p).value == 4
        q2 = ResolutionProfile(p.points, h0_r1=4)
        assert cx_continuous(q2).value - cx_continuous(q).value == 8

    def test_cubic_growth(self):
        ratios = [cx_continuous(cone_profile(d)).value / d**3 for d in (50, 200, 1000)]
        assert all(abs(r - Fraction(1, 4)) < abs(s - Fraction(1, 4)) for r, s in zip(ratios[1:], ratios))
        assert abs(ratios[-1] - Fraction(1, 4)) < Fraction(1, 100)


class TestInteger:
    def test_cone_d3(self):
        est = cx_integer(cone_profile(3), 2)
        assert est.value == Fraction(14, 3)
        assert est.method is Method.INTEGER_CERTIFIED
        assert est.witness.r == 1 and est.witness.v == ((1,),)

    @pytest.mark.parametrize("r_cap", [1, 2, 3])
    def test_ade(self, r_cap):
        est = cx_integer(ade_profile("A", 4), r_cap)
        assert est.value == 0 and est.certified

    def test_base_constant_dominates(self):
        p = ResolutionProfile((SingularPointData([[-2]], [1]),), h0_r1=0, base_constant=5)
        est = cx_integer(p, 3)
        assert est.value == 5 and est.certified

    def test_empty_box_skipped(self):
        # chi = 5 makes the upper bound (r+2)*0 - 5r + 2r negative for every r
        p = ResolutionProfile((SingularPointData([[-2]], [5], [-8]),), h0_r1=0)
        est = cx_integer(p, 3)
        assert est.value == 0 and est.witness is None

    def test_heuristic_when_cap_small(self):
        # envelope e(2) = 2 + 1/4 > best integer value at r = 1 for this profile
        p = ResolutionProfile((SingularPointData([[-1]], [1]),), h0_r1=1)
        est = cx_integer(p, 1)
        assert est.value <= cx_continuous(p).value
        assert est.method is (Method.INTEGER_CERTIFIED if est.value >= p.envelope(2) else Method.INTEGER_HEURISTIC)

    def test_monotone_and_below_continuous(self):
        for d in range(2, 7):
            p = cone_profile(d)
            vals = [cx_integer(p, r).value for r in range(1, 5)]
            assert vals == sorted(vals)
            assert vals[-1] <= cx_continuous(p).value

    def test_workers_deterministic(self):
        p = cone_profile(4)
        assert cx_integer(p, 4, workers=1) == cx_integer(p, 4, workers=3)


def _random_profile(rng):
    points = []
    for _ in range(rng.randint(1, 2)):
        n = rng.randint(1, 2)
        while True:
            g = [[-rng.randint(1, 4) if i == j else 0 for j in range(n)] for i in range(n)]
            if n == 2:
                g[0][1] = g[1][0] = rng.randint(0, 1)
            if la.is_negative_definite(g):
                break
        points.append(SingularPointData(g, [rng.randint(-1, 1) for _ in range(n)]))
    return ResolutionProfile(tuple(points), rng.randint(0, 1), Fraction(rng.randint(0, 2), 2))


@pytest.mark.parametrize("seed", range(25))
def test_integer_matches_oracle(seed):
    rng = random.Random(seed)
    p = _random_profile(rng)
    r_cap = rng.randint(1, 2)
    est = cx_integer(p, r_cap)
    assert est.value == brute_cx(p, r_cap)
    assert est.value <= cx_continuous(p).value
    if est.certified:
        assert est.value >= p.envelope(r_cap + 1)


@pytest.mark.parametrize("kind, n", [("A", 1), ("A", 5), ("D", 4), ("D", 6), ("E", 6), ("E", 7), ("E", 8)])
def test_cartan_dets(kind, n):
    expected = {"A": n + 1, "D": 4, "E": 9 - n}[kind]
    assert abs(la.det(cartan_block(kind, n))) == expected
