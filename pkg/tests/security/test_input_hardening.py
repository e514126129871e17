"""Hostile and malformed inputs fail cleanly."""

import pytest

from src.config.run_config import load_config, read_config_file
from src.core.errors import ConfigError, DomainError, ExpressionSyntaxError
from src.core.interval import Interval
from src.expr import evaluate, evaluate_interval, parse
from src.main import run

pytestmark = pytest.mark.security


class TestExpressionHardening:
    """Parser and evaluator limits"""

    @pytest.mark.parametrize("text", [
        "(" * 5000 + "x" + ")" * 5000,
        "-" * 5000 + "x",
        "exp(" * 3000 + "x" + ")" * 3000,
    ])
    def test_deep_nesting_is_a_syntax_error(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse(text)

    @pytest.mark.parametrize("text", ["x^1e308", "10^10^10", "exp(exp(x))"])
    def test_huge_values_are_domain_errors(self, text):
        with pytest.raises(DomainError):
            evaluate(parse(text), 10.0)

    def test_huge_interval_is_domain_error(self):
        with pytest.raises(DomainError):
            evaluate_interval(parse("x^400"), Interval(1.0, 1e3))

    @pytest.mark.parametrize("text", ["__import__('os')", "x; 1", "x.real", "lambda: 1"])
    def test_no_code_execution(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse(text)


class TestConfigHardening:
    """Config files"""

    def test_not_utf8(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_bytes(b"command = integrate\nf = \xff\xfe\n")
        with pytest.raises(ConfigError) as exc_info:
            read_config_file(str(path))
        assert exc_info.value.field == "config"

    def test_directory_instead_of_file(self, tmp_path):
        with pytest.raises(ConfigError) as exc_info:
            load_config(str(tmp_path))
        assert exc_info.value.field == "config"

    def test_cli_reports_bad_file(self, tmp_path, capsys):
        path = tmp_path / "run.cfg"
        path.write_bytes(b"\x00\x81garbage")
        assert run(["integrate", "--config", str(path)]) == 2
        assert '"ConfigError"' in capsys.readouterr().out
