import math

import pytest


from coupledwave.reduction import PhysicalSystem, cubic_from_coefficients, reduce

from acceptance_log import LINES as ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def kink_phys():
    return PhysicalSystem(alpha=0.0, beta=-3.0, eta=0.0, gamma=1.0, sigma=1.0, epsilon=2.0, c=-1.0)


@pytest.fixture
def kink_cubic(kink_phys):
    return reduce(kink_phys)


@pytest.fixture
def shifted_phys():
    # B = 3 != 0 with 2B^2 = 9AC, so c3 = 0 and u = 1 + tanh((x - 2t)/sqrt 2)
    return PhysicalSystem(alpha=0.0, beta=-3.0, eta=6.0, gamma=1.0, sigma=1.0, epsilon=2.0, c=2.0)


@pytest.fixture
def wef_cubic():
    return cubic_from_coefficients(6.0, math.sqrt(108.0), 4.0)
