import functools

import pytest

from hermeaqecc import make_curve

_FACTORS = {
    2: (2, 1),
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
    11: (11, 1),
    13: (13, 1),
    16: (2, 4),
}


@functools.lru_cache(maxsize=None)
def curve(q):
    return make_curve(*_FACTORS[q])


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run slow tests (large-q oracle sweeps)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
