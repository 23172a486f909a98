import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number, description, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number}: {description}" + (f" ({detail})" if detail else "")
        request.config._acceptance_lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
