import random

import pytest

from metabelian import g_n_setup, setup_validate
from metabelian.polynomial import Poly


@pytest.fixture(scope="session")
def g2():
    return g_n_setup(2)


@pytest.fixture(scope="session")
def k4():
    # k = 4, f = x, x^2+x+2; Res = 2
    return setup_validate({"k": 4, "blocks": [[[0, 1], [2, 1, 1]]]})


def random_poly(rng: random.Random, max_deg=3, bound=5) -> Poly:
    return Poly([rng.randint(-bound, bound) for _ in range(rng.randint(0, max_deg) + 1)])


def random_element(setup, rng: random.Random, max_deg=3, exp_range=2, kexp_range=2):
    """A random element; zero occurs with small probability."""
    return setup.element(
        random_poly(rng, max_deg),
        [rng.randint(-exp_range, exp_range) for _ in range(setup.n + 1)],
        rng.randint(-kexp_range, kexp_range),
    )


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
