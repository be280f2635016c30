"""Shared fixtures plus one-line-per-criterion acceptance reporting."""
from __future__ import annotations

import math

import pytest

_CRITERION_RESULTS = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        tag = getattr(getattr(item, "function", None), "_criterion", None)
        if tag is not None:
            _CRITERION_RESULTS.append((tag[0], tag[1],
                                       report.outcome == "passed"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, ok in sorted(_CRITERION_RESULTS):
        terminalreporter.write_line(
            f"criterion {number} ({description}): {'PASS' if ok else 'FAIL'}")

from fusionbench import (cyclic_group, direct_product, symmetric_group_3)
from fusionbench.category import (fibonacci_ring, group_ring,
                                  standard_bicharacter, ty_ring)

GROUP_BUILDERS = {
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "C6": lambda: cyclic_group(6),
    "C2xC2": lambda: direct_product(cyclic_group(2), cyclic_group(2)),
    "S3": symmetric_group_3,
}


def make_group(name):
    return GROUP_BUILDERS[name]()


@pytest.fixture
def c2():
    return cyclic_group(2)


@pytest.fixture
def c3():
    return cyclic_group(3)


@pytest.fixture
def c2xc2():
    return direct_product(cyclic_group(2), cyclic_group(2))


@pytest.fixture
def s3():
    return symmetric_group_3()


@pytest.fixture
def ty_c2():
    return ty_ring(cyclic_group(2))


@pytest.fixture
def zc6():
    return group_ring(cyclic_group(6))


@pytest.fixture
def zs3():
    return group_ring(symmetric_group_3())


@pytest.fixture
def fib():
    return fibonacci_ring()


@pytest.fixture
def chi_c2():
    return standard_bicharacter(cyclic_group(2))


@pytest.fixture
def tau_c2():
    return 1 / math.sqrt(2)
