import sys

import pytest

from stanley.construct import certify_seed


@pytest.fixture(scope="session")
def s0():
    return certify_seed((0,), 1 << 10)


@pytest.fixture(scope="session")
def s017():
    return certify_seed((0, 1, 7), 1 << 10)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
