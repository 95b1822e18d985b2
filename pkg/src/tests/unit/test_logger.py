"""
Unit tests for the stderr line logger.
"""

import io

import pytest

from logger import Level, LineLogger, get_logger


TEST_NAME = "app.enumeration.service"


@pytest.fixture
def sink() -> io.StringIO:
    """In-memory stream standing in for stderr."""
    return io.StringIO()


class TestLineLogger:
    def test_line_layout(self, sink):
        log = LineLogger(TEST_NAME, stream=sink)
        log.warning("No graph found", extra={"n_max": 3, "theta": "x^2-5"})
        line = sink.getvalue()
        assert line.endswith("\n")
        assert "WARNING  app.enumeration.service: No graph found n_max=3 theta=x^2-5" in line

    def test_values_with_spaces_are_quoted(self, sink):
        log = LineLogger(TEST_NAME, stream=sink)
        log.error("Counterexample", extra={"reason": "critical count differs"})
        assert "reason='critical count differs'" in sink.getvalue()

    def test_records_below_threshold_are_dropped(self, sink):
        log = LineLogger(TEST_NAME, stream=sink)
        log.threshold = Level.WARNING
        log.info("dropped")
        log.error("kept")
        lines = sink.getvalue().splitlines()
        assert len(lines) == 1
        assert lines[0].split()[2] == "ERROR"

    def test_default_stream_is_stderr(self, capsys):
        log = LineLogger(TEST_NAME)
        log.critical("stopping")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "CRITICAL app.enumeration.service: stopping" in captured.err

    def test_unknown_level_name_falls_back_to_info(self):
        assert Level.named("verbose") is Level.INFO
        assert Level.named("debug") is Level.DEBUG

    def test_loggers_are_shared_by_name(self):
        assert get_logger(TEST_NAME) is get_logger(TEST_NAME)
