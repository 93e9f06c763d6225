"""
Logging setup
Un único handler a stderr para la jerarquía 'hyperminor'
"""

import logging
import sys

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class _StderrHandler(logging.StreamHandler):
    """Escribe en el sys.stderr vigente en cada registro, no en el de su creación"""

    def __init__(self):
        logging.Handler.__init__(self)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


def verbosity_level(verbose: int, default: str = "WARNING") -> int:
    """-v -> INFO, -vv -> DEBUG; sin flags se usa el nivel por defecto"""
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.getLevelName(default.upper())


def setup_logging(level=logging.WARNING) -> logging.Logger:
    """Configura el logger raíz del proyecto (idempotente)"""
    logger = logging.getLogger("hyperminor")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logger.setLevel(level)
    if not any(isinstance(h, _StderrHandler) for h in logger.handlers):
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(handler)
    logger.propagate = False
    return logger


__all__ = ['setup_logging', 'verbosity_level', 'LOG_FORMAT']
