"""Level-filtered messages for library and command-line users.

Debug, info and error messages go to ``sys.stderr``; warnings go through :mod:`warnings`
so callers and tests can filter or catch them. The initial threshold comes from the
``AWMC_LOG_LEVEL`` environment variable, either a level name (``debug``, ``info``,
``warn``, ``error``, ``disabled``) or an integer.
"""
import os
import sys
import warnings
from typing import Optional, Type, Union

from awmc.utils import colorize

DEBUG = 10
INFO = 20
WARN = 30
ERROR = 40
DISABLED = 50

LEVEL_NAMES = {
    "debug": DEBUG,
    "info": INFO,
    "warn": WARN,
    "warning": WARN,
    "error": ERROR,
    "disabled": DISABLED,
}
LOG_LEVEL_ENV = "AWMC_LOG_LEVEL"


def parse_level(level: Union[int, str]) -> int:
    """Converts a level name or integer string to a numeric logging level.

    Raises:
        ValueError: If the level is neither a known name nor an integer
    """
    if isinstance(level, int):
        return level
    name = level.strip().lower()
    if name in LEVEL_NAMES:
        return LEVEL_NAMES[name]
    try:
        return int(name)
    except ValueError:
        raise ValueError(
            f"Unknown log level {level!r}, expected one of {sorted(LEVEL_NAMES)} or an integer"
        ) from None


min_level = parse_level(os.environ.get(LOG_LEVEL_ENV, "warn"))


def set_level(level: Union[int, str]):
    """Sets the threshold below which messages are dropped."""
    global min_level
    min_level = parse_level(level)


def _emit(level: int, tag: str, msg: str, args: tuple, color: Optional[str] = None):
    if min_level > level:
        return
    line = f"{tag}: {msg % args}"
    if color is not None:
        line = colorize(line, color, stream=sys.stderr)
    print(line, file=sys.stderr)


def debug(msg: str, *args: object):
    """Progress of sweeps and checks, ``msg % args``."""
    _emit(DEBUG, "DEBUG", msg, args)


def info(msg: str, *args: object):
    """Summaries of transforms and loaded models."""
    _emit(INFO, "INFO", msg, args)


def warn(
    msg: str,
    *args: object,
    category: Optional[Type[Warning]] = None,
    stacklevel: int = 1,
):
    """Issues ``msg % args`` as a warning when the threshold admits warnings.

    Args:
        msg: The format string
        *args: Values interpolated into ``msg``
        category: The warning class, :class:`UserWarning` if omitted
        stacklevel: Frames above the caller to attribute the warning to
    """
    if min_level > WARN:
        return
    warnings.warn(
        colorize(f"WARN: {msg % args}", "yellow"),
        category=category,
        stacklevel=stacklevel + 1,
    )


def error(msg: str, *args: object):
    """Reports a failure on stderr in red, used by the command line before a non-zero exit."""
    _emit(ERROR, "ERROR", msg, args, color="red")
