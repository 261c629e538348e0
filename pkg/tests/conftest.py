import random
from collections import defaultdict

import pytest

from gppoly.graph import from_edge_list

ACCEPTANCE_TITLES = {
    1: "Petersen exactness",
    2: "Family oracle matrix",
    3: "Grid theorem spot values",
    4: "Non-unimodal counterexamples",
    5: "Unimodality positives",
    6: "Operation identities",
    7: "Tree pair",
    8: "Property suite",
}

_acceptance: dict[int, list[tuple[str, str]]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): exit criterion n")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    crit = getattr(report, "_acceptance", None)
    if crit is not None:
        _acceptance[crit].append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result()._acceptance = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_acceptance):
        results = _acceptance[crit]
        failed = [nid for nid, out in results if out != "passed"]
        verdict = "PASS" if not failed else "FAIL"
        tr.write_line(f"[{verdict}] {crit}. {ACCEPTANCE_TITLES.get(crit, '')} "
                      f"({len(results) - len(failed)}/{len(results)} checks)")
        for nid in failed:
            tr.write_line(f"        failed: {nid.split('::', 1)[-1]}")


def random_graph(rng: random.Random, n: int, p: float | None = None):
    if p is None:
        p = rng.random()
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


@pytest.fixture
def rng():
    return random.Random(20240515)
