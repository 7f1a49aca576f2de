"""Unit tests for logging setup and search statistics."""

import logging

import pytest

from jacobson_lab.oracles import hamiltonian_cycle, longest_induced_path
from jacobson_lab.utils import setup_logging


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger("jacobson_lab")
    logger.handlers.clear()
    logger.setLevel(logging.NOTSET)


class TestSetupLogging:
    """Tests for setup_logging."""

    def test_console_goes_to_stderr(self, capsys):
        logger = setup_logging(level="INFO")
        logger.info("hello")
        out, err = capsys.readouterr()
        assert out == ""
        assert "hello" in err

    def test_no_duplicate_handlers(self):
        setup_logging()
        logger = setup_logging()
        assert len(logger.handlers) == 1

    def test_log_file(self, tmp_path):
        target = tmp_path / "logs" / "jlab.log"
        logger = setup_logging(level="DEBUG", log_file=target)
        logger.debug("to file")
        for handler in logger.handlers:
            handler.flush()
        assert "to file" in target.read_text()


class TestSearchStatistics:
    """Exact searches report their effort at DEBUG."""

    def test_hamiltonian(self, caplog, z3z3_graph, budget):
        caplog.set_level(logging.DEBUG, logger="jacobson_lab")
        hamiltonian_cycle(z3z3_graph, budget)
        assert any("hamiltonian_cycle on 8 vertices" in r.message for r in caplog.records)

    def test_induced(self, caplog, z3z3_graph, budget):
        caplog.set_level(logging.DEBUG, logger="jacobson_lab")
        longest_induced_path(z3z3_graph, budget)
        assert any("longest_induced_path on 8 vertices" in r.message for r in caplog.records)
