import pytest

from verlinde_abelian import kernels

ACCEPTANCE_LINES: dict[str, str] = {}


@pytest.fixture(params=sorted(kernels.IMPLEMENTATIONS))
def backend(request):
    return kernels.IMPLEMENTATIONS[request.param]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = getattr(item.function, "criterion", None)
    if label is None or report.when != "call":
        return
    status = "PASS" if report.passed else "FAIL"
    detail = ""
    if report.failed:
        detail = " | " + str(call.excinfo.value).splitlines()[0][:200]
    ACCEPTANCE_LINES[label] = f"{label} {status}: {item.function.__doc__.strip().splitlines()[0]}{detail}"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_LINES, key=lambda s: int(s[2:])):
        terminalreporter.write_line(ACCEPTANCE_LINES[label])
