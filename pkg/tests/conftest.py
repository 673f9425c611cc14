from __future__ import annotations

from collections import defaultdict

CRITERIA = {
    1: "worked equations, exact answers (< 1 s)",
    2: "worked equations, floating quartic roots within 5e-4 (< 1 s)",
    3: "companion polynomial cross-check",
    4: "algebraic property suites",
    5: "grid oracle equivalence on {-2..2 step 1/2}^4 (< 10 s)",
    6: "residual soundness of every emitted point and family sample",
    7: "normalization roundtrip on 100 random equations",
}

_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion exercised by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        for mark in item.iter_markers("criterion"):
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_runtest_logreport(report):
    if report.when != "call" and report.passed:
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _outcomes[value].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        got = _outcomes.get(n, [])
        if not got:
            status = "NOT RUN"
        elif all(o == "passed" for o in got):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status:7} {title} ({len(got)} checks)")
