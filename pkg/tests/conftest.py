"""Shared pytest plumbing: the acceptance-criteria summary block.

Each ``test_ACn_*`` function in test_acceptance.py contributes exactly
one PASS/FAIL line to the terminal summary.
"""

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_AC"):
        crit = name.split("_")[1]
        outcome = "PASS" if report.passed else "FAIL"
        label = name.split("_", 2)[2].replace("_", " ")
        _results[crit] = (outcome, label)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_results, key=lambda c: int(c[2:])):
        outcome, label = _results[crit]
        terminalreporter.write_line(f"{crit}: {outcome} — {label}")
