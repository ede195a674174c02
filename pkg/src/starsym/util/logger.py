import sys
from dataclasses import dataclass, field
from pathlib import Path

from loguru import logger

CRITICAL = 50
ERROR = 40
WARNING = 30
SUCCESS = 25
INFO = 20
DEBUG = 10
TRACE = 5

CONSOLE_FORMAT = "<level>{level: <8}</level> | <cyan>{name}</cyan> - {message}"


@dataclass
class Library:
    name: str = "starsym"
    level: int = field(default=INFO)
    handlers: list[int] = field(default_factory=list)

    def __call__(self, level: int):
        self.level = level

    def set_level(self, silent: bool, debug: bool):
        """Pick the console threshold from the two flags; debug wins."""
        if debug:
            self(DEBUG)
        elif silent:
            self(SUCCESS)
        else:
            self(INFO)

    def owns(self, record: dict) -> bool:
        return record.get("name", "").startswith(self.name)

    def should_log(self, record: dict) -> bool:
        """Foreign records pass through; ours are held to the library level."""
        if not self.owns(record):
            return True
        return record["level"].no >= self.level

    def cleanup_handlers(self):
        for h_id in self.handlers:
            try:
                logger.remove(h_id)
            except ValueError:
                pass
        self.handlers.clear()

    def setup_console_handler(self):
        # stdout carries rendered results, so the console sink is always stderr
        try:
            logger.remove(0)
        except ValueError:
            pass
        h_id = logger.add(
            sys.stderr,
            level=TRACE,
            filter=self.should_log,
            format=CONSOLE_FORMAT,
            colorize=None,
        )
        self.handlers.append(h_id)

    def setup_file_handler(self, log_file: Path | None):
        if not log_file:
            return
        h_id = logger.add(
            str(Path(log_file).absolute()),
            level=DEBUG,
            filter=self.owns,
            enqueue=True,
            catch=True,
            backtrace=True,
            diagnose=False,
        )
        self.handlers.append(h_id)


_lib = Library()


def set_logging(silent: bool, debug: bool, log_file: Path | None = None):
    """Configure starsym logging: console threshold plus an optional debug file."""
    _lib.set_level(silent, debug)
    _lib.cleanup_handlers()
    _lib.setup_console_handler()
    _lib.setup_file_handler(log_file)


success = logger.success
debug = logger.debug
info = logger.info
warning = logger.warning
error = logger.error
critical = logger.critical
exception = logger.exception
trace = logger.trace


__all__ = [
    "Library",
    "critical",
    "debug",
    "error",
    "exception",
    "info",
    "set_logging",
    "success",
    "trace",
    "warning",
]
