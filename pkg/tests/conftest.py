import pytest

from hermcodes.curve import HermitianCurve, enumerate_affine_points
from hermcodes.field import gf

_criteria: dict[int, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    n = dict(report.user_properties).get("criterion")
    if n is not None:
        _criteria.setdefault(n, []).append(report.outcome)


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", mark.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status} ({len(outcomes)} checks)")


@pytest.fixture(scope="session")
def gf4():
    return gf(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return gf(3, 2)


@pytest.fixture(scope="session", params=[2, 3])
def small_q(request):
    return request.param


@pytest.fixture(scope="session")
def points_q2():
    return enumerate_affine_points(HermitianCurve.over(2))


@pytest.fixture(scope="session")
def points_q3():
    return enumerate_affine_points(HermitianCurve.over(3))
