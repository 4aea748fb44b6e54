import random
from fractions import Fraction

import pytest

from cutinterdict.generate import random_instance
from cutinterdict.instance import InterdictionInstance

ACCEPTANCE_LINES = []


@pytest.fixture
def t1():
    # triangle on vertices 1,2,3 (0-based 0,1,2): e1=(1,2) w4 c2, e2=(2,3) w3 c1, e3=(1,3) w5 c3
    return InterdictionInstance.from_tuples(3, [(0, 1, 4, 2), (1, 2, 3, 1), (0, 2, 5, 3)], 2)


@pytest.fixture
def unit_triangle():
    return InterdictionInstance.from_tuples(3, [(0, 1, 1, 1), (1, 2, 1, 1), (0, 2, 1, 1)], 1)


def small_instances(count, seed=0, nmin=3, nmax=7, mmax=12, bmax=15):
    """The seeded random family used by oracle-equivalence style checks."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(nmin, nmax)
        m = rng.randint(n - 1, max(n - 1, mmax))
        out.append(random_instance(n, m, wmax=10, cmax=10, bmax=bmax, seed=rng.getrandbits(32)))
    return out


def record(criterion, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["Fraction", "small_instances", "record"]
