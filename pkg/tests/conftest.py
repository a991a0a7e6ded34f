import functools
import itertools

import pytest

ACCEPTANCE_RESULTS = {}


def cycles(perm):
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cycle = []
        j = start
        while j not in seen:
            seen.add(j)
            cycle.append(j)
            j = perm[j]
        out.append(cycle)
    return out


@functools.lru_cache(maxsize=None)
def r_stirling_histogram(n, r):
    """Cycle-count histogram over permutations of n elements with 0..r-1 in distinct cycles."""
    hist = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        cs = cycles(perm)
        if all(sum(1 for e in c if e < r) <= 1 for c in cs):
            hist[len(cs)] += 1
    return tuple(hist)


def brute_r_stirling(n, k, r):
    return r_stirling_histogram(n, r)[k] if k <= n else 0


@pytest.fixture
def brute_stirling():
    return lambda n, k: brute_r_stirling(n, k, 1) if n else int(k == 0)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        ACCEPTANCE_RESULTS[marker.args[0]] = (marker.args[1], rep.passed)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {number}. {title}")
