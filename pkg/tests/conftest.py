from collections import OrderedDict

import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("quick", max_examples=40, deadline=None)
settings.load_profile("quick")

CRITERIA = OrderedDict([
    ("1a", "golden integral column to 4 significant digits"),
    ("1b", "golden error column within 5% relative"),
    ("1c", "golden bound columns within 5% relative (fixed 0.1 rho scan)"),
    ("1d", "continuous rho search never above the scan bound"),
    ("2", "closed-form kernels match the quadrature oracle to 1e-9, plus the case 4 reflection"),
    ("3", "Gauss rules: exactness 1e-11, Chebyshev nodes 1e-10, positive weights, mass"),
    ("4a", "rho* found below 5 for every grid case"),
    ("4b", "argmax of |K| at the predicted axis point for rho = 1.05 rho*, within 1e-4"),
    ("4c", "rho* < 1.5 for every grid case"),
    ("5", "actual error <= every computed bound"),
    ("6", "I0, I1 closed forms and vanishing J1, J_{n+1}, K1, K_{n+1/2} to 1e-12"),
])
_outcomes = {key: [0, 0, []] for key in CRITERIA}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(key): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        entry = _outcomes[marker.args[0]]
        if rep.passed:
            entry[0] += 1
        else:
            entry[1] += 1
            entry[2].append(item.callspec.id if hasattr(item, "callspec") else item.name)


def pytest_terminal_summary(terminalreporter):
    if not any(p + f for p, f, _ in _outcomes.values()):
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key, text in CRITERIA.items():
        passed, failed, names = _outcomes[key]
        if passed + failed == 0:
            continue
        status = "PASS" if failed == 0 else "FAIL"
        tr.write_line(f"{status}  criterion {key:<3} {passed}/{passed + failed} checks  {text}")
        for name in names:
            tr.write_line(f"        failed: {name}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
