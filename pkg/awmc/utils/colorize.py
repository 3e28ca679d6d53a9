"""Terminal colour codes used by :mod:`awmc.logger`."""
import os
from typing import Optional, TextIO

NO_COLOR_ENV = "NO_COLOR"

COLORS = {
    "gray": 30,
    "red": 31,
    "green": 32,
    "yellow": 33,
    "blue": 34,
    "magenta": 35,
    "cyan": 36,
    "white": 37,
}


def supports_color(stream: Optional[TextIO]) -> bool:
    """Whether escape codes should be written to ``stream``.

    ``None`` stands for a destination of unknown kind and gets colour unless
    ``NO_COLOR`` is set.
    """
    if os.environ.get(NO_COLOR_ENV):
        return False
    if stream is None:
        return True
    isatty = getattr(stream, "isatty", None)
    return bool(isatty and isatty())


def colorize(
    string: str,
    color: str,
    bold: bool = False,
    highlight: bool = False,
    stream: Optional[TextIO] = None,
) -> str:
    """Wraps ``string`` in the escape codes of ``color``.

    Args:
        string: The message to colour
        color: One of gray, red, green, yellow, blue, magenta, cyan, white
        bold: If to bold the string
        highlight: If to colour the background instead of the text
        stream: The stream the string is written to, plain text is returned if it is not a terminal

    Returns:
        The coloured string
    """
    if not supports_color(stream):
        return string
    codes = [str(COLORS[color] + (10 if highlight else 0))]
    if bold:
        codes.append("1")
    return f"\x1b[{';'.join(codes)}m{string}\x1b[0m"
