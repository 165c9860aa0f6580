import math
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qheatswitch import BathSpec, DriveSpec  # noqa: E402

GAMMA = 2.7e9
OMEGA0 = 2 * math.pi * 10e9
DELTA_SUPP = 2 * math.pi * 0.1e9


@pytest.fixture
def fig2_baths():
    return BathSpec(GAMMA, 0.34, "hot"), BathSpec(GAMMA, 0.10, "cold")


def random_params(rng, with_dephasing=True, ordered=False):
    """One draw from the parameter box used by the invariant tests."""
    gh, gc = 10 ** rng.uniform(8, 10, size=2)
    nh, nc = rng.uniform(0, 1, size=2)
    if ordered and nh < nc:
        nh, nc = nc, nh
    gt = gh * (2 * nh + 1) + gc * (2 * nc + 1)
    g = rng.uniform(0, 5 * gt)
    delta = rng.uniform(-5 * gt, 5 * gt)
    gphi = rng.uniform(0, 2 * gt) if with_dephasing else 0.0
    hot = BathSpec(gh, nh, "hot")
    cold = BathSpec(gc, nc, "cold")
    return hot, cold, DriveSpec(OMEGA0, g, delta), gphi


def draws(n, seed, **kw):
    rng = np.random.default_rng(seed)
    return [random_params(rng, **kw) for _ in range(n)]


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body raises on failure."""
    label = request.node.get_closest_marker("criterion").args[0]
    details: dict = {}
    yield details
    ok = not getattr(request.node, "_failed", False)
    extra = ", ".join(f"{k}={v:.3g}" if isinstance(v, float) else f"{k}={v}" for k, v in details.items())
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{extra}]" if extra else ""))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and rep.failed:
        item._failed = True


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
