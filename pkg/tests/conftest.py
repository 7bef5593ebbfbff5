import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Record one 'PASS/FAIL criterion N: ...' line; echoed in the run summary."""
    lines = request.config.stash[_LINES]

    def record(n, problems, detail):
        line = f"{'FAIL' if problems else 'PASS'} criterion {n}: {detail}"
        if problems:
            line += " | " + "; ".join(problems[:5])
        lines.append((n, line))
        print(line)

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
