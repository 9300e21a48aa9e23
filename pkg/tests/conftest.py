import pytest

from falk3 import complete_doubled, loop_apex_triangle, warmup
from helpers import hub4_mixed


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # absorb numba JIT compilation before any timed assertion runs
    warmup()


@pytest.fixture
def looped_wedge():
    return loop_apex_triangle()


@pytest.fixture
def doubled_triangle_loop():
    return complete_doubled(3, loops=(1,))


@pytest.fixture
def hub4():
    return hub4_mixed()
