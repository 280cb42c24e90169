"""Shared fixtures and the acceptance-criteria summary hook.

The acceptance tests register one line per criterion; the summary is
printed at the end of every pytest run so the pass/fail state of the
whole contract is visible without scrolling through the test list.
"""

from contextlib import contextmanager

import pytest

_CRITERIA: list = []


@pytest.fixture
def criterion():
    """Context manager factory recording one acceptance criterion.

    Usage::

        with criterion(3, "inertial limits"):
            assert ...

    The criterion is recorded as passed iff the block exits cleanly;
    assertion errors still propagate and fail the test normally.
    """

    @contextmanager
    def _criterion(number: int, title: str):
        ok = False
        try:
            yield
            ok = True
        finally:
            _CRITERIA.append((number, title, ok))

    return _criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(_CRITERIA):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {title}")
