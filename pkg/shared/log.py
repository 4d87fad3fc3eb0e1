import logging
from typing import Optional

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging once; later calls only adjust the level."""
    global _configured
    if level is None:
        from shared.config import get_settings
        level = get_settings().log_level
    lvl = getattr(logging, str(level).upper(), logging.INFO)
    if not _configured:
        logging.basicConfig(level=lvl, format=_FORMAT)
        _configured = True
    logging.getLogger().setLevel(lvl)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
