import random
import sys
from pathlib import Path

import pytest

from codeal.code import LinearCode, RankDeficient
from codeal.field import build_field, default_field

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# x^2 - x - 1 over F_3, the polynomial whose powers match the printed F_9 table
F9_POLY = (2, 2, 1)

# generator rows of the F_9 example, in integer notation (alpha+1 = 4, 2*alpha = 6)
F9_ROWS_INT = [[1, 0, 4], [0, 1, 6]]

TERNARY_ROWS = [
    [1, 0, 0, 2, 2, 0],
    [0, 1, 0, 1, 1, 0],
    [0, 0, 1, 1, 2, 1],
]


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 2, F9_POLY)


@pytest.fixture(scope="session")
def f3():
    return build_field(3, 1, (1, 1))


@pytest.fixture(scope="session")
def f9_code(f9):
    return LinearCode(f9, [[f9.from_int(a) for a in row] for row in F9_ROWS_INT])


@pytest.fixture(scope="session")
def ternary_code(f3):
    return LinearCode(f3, [[f3.from_int(a) for a in row] for row in TERNARY_ROWS])


def random_code(rng: random.Random, q: int, n: int, k: int) -> LinearCode:
    spec = default_field(q)
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            return LinearCode(spec, rows)
        except RankDeficient:
            continue


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(results[num])
