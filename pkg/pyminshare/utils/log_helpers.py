"""Logging setup for the command line front end.

Library modules only create module level loggers; handlers are installed here.
"""

import logging
import sys


LOG_LEVELS = ("debug", "info", "warning", "error", "critical")


class LevelFormatter(logging.Formatter):
    """Colour the message by level when writing to a terminal."""

    grey = "\x1b[38;2;152;152;152m"
    yellow = "\x1b[33;20m"
    red = "\x1b[31;20m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"
    msg_format = "%(levelname)s %(name)s: %(message)s"

    COLOURS = {
        logging.DEBUG: grey,
        logging.INFO: "",
        logging.WARNING: yellow,
        logging.ERROR: red,
        logging.CRITICAL: bold_red,
    }

    def __init__(self, use_colour: bool = False):
        super().__init__(self.msg_format)
        self.use_colour = use_colour

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        colour = self.COLOURS.get(record.levelno, "")
        if not self.use_colour or not colour:
            return message
        return colour + message + self.reset


def configure_logging(level: str = "warning") -> logging.Logger:
    """Install a single stderr handler on the package logger.

    Args:
        level: One of `LOG_LEVELS`.

    Returns:
        logging.Logger: The `pyminshare` logger.
    """
    logger = logging.getLogger("pyminshare")
    logger.setLevel(getattr(logging, level.upper()))

    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(LevelFormatter(use_colour=sys.stderr.isatty()))
    logger.addHandler(handler)
    logger.propagate = False

    return logger
