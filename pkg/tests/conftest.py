import numpy as np
from hypothesis import strategies as st

from fockmaj import FockDistribution


@st.composite
def distributions(draw, max_cutoff=8, passive=False):
    n = draw(st.integers(min_value=1, max_value=max_cutoff + 1))
    weights = draw(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=n, max_size=n))
    w = np.array(weights)
    if w.sum() < 1e-3:
        w[0] += 1.0
    w = w / w.sum()
    if passive:
        w = np.sort(w)[::-1]
    return FockDistribution(w)


passive_distributions = lambda max_cutoff=8: distributions(max_cutoff=max_cutoff, passive=True)


ACCEPTANCE_LINES = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        doc = report.user_properties and dict(report.user_properties).get("criterion")
        if doc:
            status = "PASS" if report.passed else "FAIL"
            ACCEPTANCE_LINES.append(f"[{status}] {doc} ({report.duration:.1f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("#")[1].split()[0])):
            terminalreporter.write_line(line)
