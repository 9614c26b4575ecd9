import pytest

_acceptance: dict[str, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        label = item.function.__doc__.strip().splitlines()[0] if item.function.__doc__ else item.name
        _acceptance[label] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"[{status}] {label}")
