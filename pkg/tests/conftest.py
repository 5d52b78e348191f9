from __future__ import annotations

import pytest


@pytest.fixture
def report(pytestconfig):
    """Write a line straight to the terminal, bypassing capture."""
    reporter = pytestconfig.pluginmanager.getplugin("terminalreporter")

    def write(line: str) -> None:
        if reporter is not None:
            reporter.write_line(line)
        else:  # pragma: no cover
            print(line)

    return write
