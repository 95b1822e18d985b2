import sys
import threading
from datetime import datetime
from enum import IntEnum
from typing import Any, Optional, TextIO

from config import settings


class Level(IntEnum):
    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40
    CRITICAL = 50

    @classmethod
    def named(cls, name: str) -> "Level":
        return cls.__members__.get(name.upper(), cls.INFO)


def _render_value(value: Any) -> str:
    text = str(value)
    return repr(text) if not text or " " in text or "=" in text else text


class LineLogger:
    """One line per record on stderr: ``timestamp LEVEL name: message key=value ...``.

    stdout stays free for graph6 lines and JSON reports; every logger in the
    process shares one lock so worker threads never interleave a line.
    """

    _lock = threading.Lock()

    def __init__(self, name: str, stream: Optional[TextIO] = None) -> None:
        self.name = name
        self.threshold = Level.named(settings.log_level)
        self._stream = stream

    @property
    def stream(self) -> TextIO:
        # resolved late so pytest's capture of sys.stderr is honoured
        return self._stream or sys.stderr

    def format(self, level: Level, message: str, extra: Optional[dict] = None) -> str:
        stamp = datetime.now().isoformat(sep=" ", timespec="milliseconds")
        line = f"{stamp} {level.name:<8} {self.name}: {message}"
        if extra:
            line += " " + " ".join(f"{key}={_render_value(value)}" for key, value in extra.items())
        return line

    def log(self, level: Level, message: str, extra: Optional[dict] = None) -> None:
        if level < self.threshold:
            return
        line = self.format(level, message, extra)
        with self._lock:
            self.stream.write(line + "\n")
            self.stream.flush()

    def debug(self, message: str, extra: Optional[dict] = None) -> None:
        self.log(Level.DEBUG, message, extra)

    def info(self, message: str, extra: Optional[dict] = None) -> None:
        self.log(Level.INFO, message, extra)

    def warning(self, message: str, extra: Optional[dict] = None) -> None:
        self.log(Level.WARNING, message, extra)

    def error(self, message: str, extra: Optional[dict] = None) -> None:
        self.log(Level.ERROR, message, extra)

    def critical(self, message: str, extra: Optional[dict] = None) -> None:
        self.log(Level.CRITICAL, message, extra)


_loggers: dict[str, LineLogger] = {}


def get_logger(name: str) -> LineLogger:
    if name not in _loggers:
        _loggers[name] = LineLogger(name)
    return _loggers[name]
