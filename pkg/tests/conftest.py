import math

import numpy as np
import pytest

from su2walk import _kernels_py

try:
    from su2walk import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

ACCEPTANCE_LINES = []

KERNEL_MODULES = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    KERNEL_MODULES.append(pytest.param(_kernels_c, id="cython"))


@pytest.fixture(params=KERNEL_MODULES)
def kernel_module(request):
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_coin_angles(rng, n):
    """``n`` triples with theta kept away from the Z and X limits."""
    xi = rng.uniform(0, 2 * math.pi, n)
    zeta = rng.uniform(0, 2 * math.pi, n)
    theta = rng.uniform(math.radians(5), math.radians(85), n)
    return list(zip(xi, theta, zeta))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
