import random
from fractions import Fraction

import pytest

from reider import _linalg as la
from reider.lattice import lattice_from_blocks, validate_lattice

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def _random_block(rng: random.Random, size: int) -> list[list[int]]:
    """Negative definite integer block: chain of curves with self-intersection <= -2."""
    while True:
        g = [[0] * size for _ in range(size)]
        for i in range(size):
            g[i][i] = -rng.randint(2, 4)
        for i in range(size - 1):
            g[i][i + 1] = g[i + 1][i] = rng.choice([0, 1, 1])
        if la.is_negative_definite(g):
            return g


def random_valid_lattice(rng: random.Random, max_rank: int = 5):
    """Rejection-sample a lattice that passes validate_lattice."""
    while True:
        rank = rng.choice([r for r in range(1, max_rank + 1) for _ in range(r)])
        k = rng.randint(1, rank)
        sizes = []
        left = rank - k
        while left:
            s = rng.randint(1, left)
            sizes.append(s)
            left -= s
        blocks = [_random_block(rng, s) for s in sizes]
        free = [[0] * k for _ in range(k)]
        free[0][0] = rng.randint(1, 6)
        for i in range(1, k):
            free[i][i] = -rng.randint(1, 4)
        for i in range(k):
            for j in range(i + 1, k):
                free[i][j] = free[j][i] = rng.randint(-1, 1)
        coupling = [[rng.randint(0, 2) for _ in range(rank - k)] for _ in range(k)]
        ample = [rng.randint(-3, 3) for _ in range(k)]
        if not any(ample):
            continue
        try:
            lat = lattice_from_blocks(free, blocks, coupling, ample)
        except (ValueError, RuntimeError):
            continue
        if validate_lattice(lat):
            return lat


def random_class(rng: random.Random, lattice, lo=-3, hi=3):
    exc = lattice.exceptional_indices
    return tuple(0 if i in exc else rng.randint(lo, hi) for i in range(lattice.rank))


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = ""):
        _ACCEPTANCE.append((name, bool(ok), detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


def F(x) -> Fraction:
    return Fraction(x)
