import logging

import pytest

from infrastructure.logging.logger import resolve_level, setup_logging


@pytest.mark.parametrize(
    "name, level",
    [("warning", logging.WARNING), (" DEBUG ", logging.DEBUG), ("nonsense", logging.INFO), (None, logging.INFO)],
)
def test_resolve_level(name, level):
    assert resolve_level(name) == level


def test_setup_logging_takes_level_from_settings_unless_overridden(settings):
    root = logging.getLogger()
    previous = root.level
    try:
        assert setup_logging() == resolve_level(settings.LOG_LEVEL)
        assert setup_logging("ERROR") == logging.ERROR
        assert root.level == logging.ERROR
        assert sum(1 for h in root.handlers if isinstance(h, logging.StreamHandler) and h.formatter is not None
                   and h.formatter._fmt == settings.LOG_FORMAT) == 1
    finally:
        root.setLevel(previous)
