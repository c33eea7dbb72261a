import pytest
from loguru import logger

from circpeak.utils.config import override_settings
from circpeak.verify.fixtures import load_golden_table


@pytest.fixture(scope="session", autouse=True)
def isolated_settings(tmp_path_factory):
    """Keep the oracle cache out of /tmp and the oracle in-process unless a test asks otherwise."""
    cache_dir = tmp_path_factory.mktemp("circpeak_cache")
    with override_settings(cache_dir=str(cache_dir), threads=1) as settings:
        yield settings


@pytest.fixture(scope="session")
def golden():
    return load_golden_table()


@pytest.fixture
def caplog_loguru():
    """Messages loguru emits at WARNING or above while the test runs."""
    messages: list[str] = []
    handler_id = logger.add(lambda message: messages.append(str(message)), level="WARNING", format="{message}")
    yield messages
    logger.remove(handler_id)


def golden_cells():
    """(n, S, count) for every cell of the shipped golden table."""
    return [(n, elements, count) for n, cells in sorted(load_golden_table().items()) for elements, count in sorted(cells.items())]


def golden_ids():
    return [f"n={n}-S={'_'.join(map(str, elements)) or 'empty'}" for n, elements, _ in golden_cells()]
