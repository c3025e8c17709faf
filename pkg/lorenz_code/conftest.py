import pytest

from lorenz_code.oneway.hashing import BaseConfig


def pytest_addoption(parser):
    parser.addoption(
        "--runslow",
        action="store_true",
        default=False,
        help="run the full-scale experiments marked slow",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="full-scale experiment, use --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def _no_config_file(settings) -> None:
    settings.LORENZ_CODE_CONFIG = ""
    settings.LORENZ_CODE_PARALLEL = False


@pytest.fixture
def base_config() -> BaseConfig:
    return BaseConfig()
