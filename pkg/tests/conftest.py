import itertools
import math

import pytest


def leibniz_det(rows):
    """Brute-force determinant over all permutations; independent of every library path."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if term == 0:
                break
        total += term
    return total


def totient(k):
    return sum(1 for i in range(1, k + 1) if math.gcd(i, k) == 1)


@pytest.fixture
def det_oracle():
    return leibniz_det


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for result in sorted(RESULTS, key=lambda r: r.number):
        terminalreporter.write_line(result.line().splitlines()[0])
