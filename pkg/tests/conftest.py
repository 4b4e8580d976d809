import os

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-long",
        action="store_true",
        default=False,
        help="run tests marked 'long' (multi-minute sweeps)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long") or os.environ.get("LEAGUE_TIES_LONG") == "1":
        return
    skip_long = pytest.mark.skip(reason="long test; enable with --run-long")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip_long)
