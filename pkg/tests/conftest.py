from pathlib import Path

import pytest

from antipodal.generators import crosspolytope_sphere, fig2_grid, genus2_surface, refine

FIXTURES = Path(__file__).parent / "fixtures"

_criteria: list[tuple[int, str, str]] = []


@pytest.fixture
def octahedron():
    return crosspolytope_sphere(2)


@pytest.fixture(scope="session")
def sd_octahedron():
    return refine(*crosspolytope_sphere(2), 1)


@pytest.fixture
def fig2():
    return fig2_grid()


@pytest.fixture(scope="session")
def genus2():
    return genus2_surface()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria.append((marker.args[0], marker.args[1], rep.outcome.upper()))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, text, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "PASSED" else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {text}")
