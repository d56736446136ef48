import itertools
import random

import pytest

from hyperoct.group import SignedPermutation


def all_signed_perms(n):
    """Every element of B_n, by brute enumeration."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))


def as_map(pi):
    """pi as an explicit dict on [+-n]."""
    m = {}
    for i, v in enumerate(pi.window, 1):
        m[i] = v
        m[-i] = -v
    return m


def from_map(m, n):
    return SignedPermutation(tuple(m[i] for i in range(1, n + 1)))


def compose_oracle(a, b):
    ma, mb = as_map(a), as_map(b)
    return from_map({i: mb[ma[i]] for i in ma}, a.n)


def brute_order(pi):
    ident = tuple(range(1, pi.n + 1))
    cur, m = pi, 1
    while cur.window != ident:
        cur = compose_oracle(cur, pi)
        m += 1
    return m


@pytest.fixture
def rng():
    return random.Random(20261019)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _criteria[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_criteria.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
