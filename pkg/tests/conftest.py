from functools import lru_cache

import pytest

from cycloprime.engine import run_general, run_test
from cycloprime.residue_ring import build_params


def pytest_addoption(parser):
    parser.addoption(
        "--extended", action="store_true", default=False,
        help="also run the n = 13, 14 table rows (tens of minutes)",
    )


def pytest_configure(config):
    config._criteria = {}


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="opt-in: pass --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


_RANK = {"SKIP": 0, "PASS": 1, "FAIL": 2}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.skipped):
        num, desc = marker.args
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        # several tests may share a criterion: FAIL beats PASS beats SKIP
        prev = item.config._criteria.get(num)
        if prev is None or _RANK[status] > _RANK[prev[0]]:
            item.config._criteria[num] = (status, prev[1] if prev else desc)


def pytest_terminal_summary(terminalreporter, config):
    crit = config._criteria
    if not crit:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(crit):
        status, desc = crit[num]
        terminalreporter.write_line(f"criterion {num}: {status}  {desc}")


@lru_cache(maxsize=None)
def general_verdict(p, n):
    return run_general(build_params(p, n), verbose=False)


@lru_cache(maxsize=None)
def fast_verdict(p, n):
    return run_test(build_params(p, n), "recurrence")


@pytest.fixture(scope="session")
def general():
    return general_verdict


@pytest.fixture(scope="session")
def fast():
    return fast_verdict
