import logging
import sys
from typing import Optional

from diffee.core.config import settings

_HANDLER_NAME = "diffee-stream"


def configure_logging(level: Optional[str] = None) -> logging.Logger:
    """Attach a single stream handler to the package logger.

    Safe to call repeatedly; the handler is installed once and later calls
    only update the level and rebind the handler to the current stderr.
    """
    logger = logging.getLogger("diffee")
    logger.setLevel((level or settings.LOG_LEVEL).upper())
    handler = next((h for h in logger.handlers if h.get_name() == _HANDLER_NAME), None)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
        handler.set_name(_HANDLER_NAME)
        handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
        logger.addHandler(handler)
    else:
        # setStream would flush the previous stream, which may already be closed
        handler.stream = sys.stderr
    return logger
