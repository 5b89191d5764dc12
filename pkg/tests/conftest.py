import pytest

from goeritz.tree import enumerate_ball

_acceptance_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = report.user_properties and dict(report.user_properties).get("acceptance")
    if marker:
        _acceptance_results[marker] = report.outcome


@pytest.fixture(autouse=True)
def _record_acceptance(request):
    m = request.node.get_closest_marker("acceptance")
    if m is not None:
        request.node.user_properties.append(("acceptance", m.args))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_acceptance_results.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {number}. {title}")


@pytest.fixture(scope="session")
def ball_8_3():
    return enumerate_ball(8, 3)


@pytest.fixture(scope="session")
def ball_6_2():
    return enumerate_ball(6, 2)
