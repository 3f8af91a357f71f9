import pytest


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def report(request):
    """report(name, ok, detail) records one PASS/FAIL line and returns ok."""
    lines = request.config._acceptance_lines

    def _report(name: str, ok: bool, detail: str) -> bool:
        line = "%-12s %s  %s" % (name, "PASS" if ok else "FAIL", detail)
        lines.append(line)
        print(line)
        return ok

    return _report
