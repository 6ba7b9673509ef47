from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def F():
    return Fraction


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_ACCEPTANCE_KEY] = []


@pytest.fixture
def criterion(request):
    """Records one pass/fail line for an acceptance criterion.

    The test calls the fixture with (number, description, ok, detail) and the
    line is printed in the terminal summary whether or not it passed.
    """

    def record(number: int, text: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
        if detail:
            line += f" ({detail})"
        request.config.stash[_ACCEPTANCE_KEY].append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
