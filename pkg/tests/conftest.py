import collections

import pytest

CRITERIA = {
    1: "headline coupling |g12|/Omega2 ~ 1e-5 (factor 2)",
    2: "cavity baselines and improvement ratio",
    3: "photon-number bounds at the recomputed X*",
    4: "unitarity |r|^2 + |t|^2 = 1",
    5: "third-order expansion vs exact roots",
    6: "orthonormality by quadrature",
    7: "effective-length regime",
    8: "symmetry, curvature and sign properties",
    9: "coupling-pipeline identities",
    10: "figure monotonicity",
}

_outcomes = collections.defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_logreport(report):
    crit = getattr(report, "criterion", None)
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[crit].append((report.nodeid, report.outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report.criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(CRITERIA):
        results = _outcomes.get(crit)
        if not results:
            tr.write_line(f"criterion {crit:2d}: NOT RUN  {CRITERIA[crit]}")
            continue
        ok = all(outcome == "passed" for _, outcome in results)
        failed = [nid.split("::")[-1] for nid, outcome in results if outcome != "passed"]
        line = f"criterion {crit:2d}: {'PASS' if ok else 'FAIL'}  {CRITERIA[crit]}"
        if failed:
            line += f"  [failing: {', '.join(failed)}]"
        tr.write_line(line)
