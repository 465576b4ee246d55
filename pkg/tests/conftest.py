import networkx as nx
import pytest


def cube_graph(n):
    """Q_n with integer labels, built independently of hqx."""
    g = nx.Graph()
    g.add_nodes_from(range(1 << n))
    for v in range(1 << n):
        for d in range(n):
            w = v ^ (1 << d)
            if v < w:
                g.add_edge(v, w)
    return g


@pytest.fixture(scope="session")
def cube():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = cube_graph(n)
        return cache[n]

    return get


# -- acceptance reporting -------------------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    num, text = marker
    ok, seen = _CRITERIA.get(num, (True, text))
    if report.when == "call" or report.failed:
        ok = ok and not report.failed
    _CRITERIA[num] = (ok, text)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result()._criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, text = _CRITERIA[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] AC{num}: {text}")
