import pytest
from hypothesis import settings

from manhattan_domino import Skyline

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

FIG2 = Skyline([5, 4, 3, 3, 2, 3, 4, 3, 2, 1, 1, 2, 3])
FIG4 = Skyline([5, 4, 4, 3, 2, 3])
FIG5A = Skyline([3, 6, 8, 6, 6, 5, 4, 2, 2])
FIG5B = Skyline([2, 2, 4, 4, 7, 6, 4, 5, 4, 4, 3, 2, 3])
FIG7 = Skyline([5, 4, 3, 2, 1, 1, 2, 3, 2, 3, 1, 2, 1, 3, 2, 1, 3, 1])


_acceptance_results = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "acceptance" in props:
        _acceptance_results.append((props["acceptance"], report.outcome, props.get("detail", "")))


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker:
            item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    results = _acceptance_results
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, detail in sorted(results, key=lambda r: int(r[0].split()[0][2:])):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] {label}" + (f" ({detail})" if detail else ""))
