import pytest

from awmc import logger


@pytest.fixture(autouse=True)
def restore_level():
    level = logger.min_level
    yield
    logger.set_level(level)


@pytest.mark.parametrize(
    "level, expected",
    [("debug", logger.DEBUG), ("WARNING", logger.WARN), (" disabled ", logger.DISABLED), ("25", 25), (40, 40)],
)
def test_parse_level(level, expected):
    assert logger.parse_level(level) == expected


def test_unknown_level():
    with pytest.raises(ValueError, match="Unknown log level 'loud'"):
        logger.parse_level("loud")


def test_threshold(capsys):
    logger.set_level("info")
    logger.debug("hidden %s", 1)
    logger.info("shown %s", 2)
    assert capsys.readouterr().err == "INFO: shown 2\n"

    logger.set_level(logger.DEBUG)
    logger.debug("now %s", "visible")
    assert capsys.readouterr().err == "DEBUG: now visible\n"


def test_errors_go_to_stderr(capsys, monkeypatch):
    monkeypatch.setenv("NO_COLOR", "1")
    logger.error("broken %s", "frame")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "ERROR: broken frame\n"


def test_warn_respects_threshold(recwarn):
    logger.set_level("error")
    logger.warn("quiet")
    assert len(recwarn) == 0

    logger.set_level("warn")
    with pytest.warns(UserWarning, match="WARN: loud"):
        logger.warn("loud")
