import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--run-long",
        action="store_true",
        default=False,
        help="run long exhaustive searches (the n=4 nonexistence proof)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-long"):
        return
    skip = pytest.mark.skip(reason="long search; pass --run-long to enable")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)
