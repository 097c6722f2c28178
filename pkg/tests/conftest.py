import numpy as np
import pytest

# criterion number -> list of (sub-test, passed); filled by test_acceptance.py
ACCEPTANCE: dict = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    crit = item.get_closest_marker("criterion")
    if crit is not None and rep.when == "call":
        ACCEPTANCE.setdefault(crit.args[0], []).append((item.name, rep.passed))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        subs = ACCEPTANCE[n]
        ok = all(p for _, p in subs)
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({sum(p for _, p in subs)}/{len(subs)} sub-tests)"
        terminalreporter.write_line(line)
        for name, p in subs:
            if not p:
                terminalreporter.write_line(f"    failing: {name}")
