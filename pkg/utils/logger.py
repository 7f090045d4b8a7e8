import sys

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def setup_logger(level: str = "INFO", log_file: str | None = None) -> None:
    """Configure Loguru: stderr, plus a daily-rotated file when log_file is set."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=CONSOLE_FORMAT, colorize=True)
    if log_file:
        logger.add(
            log_file,
            level=level.upper(),
            rotation="00:00",
            retention="30 days",
            compression="zip",
            format=FILE_FORMAT,
        )
    logger.debug(f"[logger] level={level.upper()}, file={log_file or '-'}")
