import pytest
from pydantic import ValidationError

from src.core.enums import LogLevel
from src.schemas.config import AppConfig


def test_defaults():
    settings = AppConfig(_env_file=None)
    assert settings.log_level == LogLevel.WARNING
    assert settings.oracle_max_vertices == 24
    assert settings.reduction_max_variables == 6


def test_environment_is_ignored(monkeypatch):
    monkeypatch.setenv("ORACLE_MAX_VERTICES", "3")
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    settings = AppConfig(_env_file=None)
    assert settings.oracle_max_vertices == 24
    assert settings.log_level == LogLevel.WARNING


def test_dotenv_file_is_read(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("ORACLE_MAX_VERTICES=30\nMAX_WORKERS=8\n")
    settings = AppConfig(_env_file=env_file)
    assert (settings.oracle_max_vertices, settings.max_workers) == (30, 8)


def test_init_arguments_win():
    assert AppConfig(_env_file=None, max_workers=1).max_workers == 1


def test_guards_are_validated():
    with pytest.raises(ValidationError):
        AppConfig(_env_file=None, oracle_max_vertices=0)
    with pytest.raises(ValidationError):
        AppConfig(_env_file=None, reduction_max_variables=2)


def test_unknown_keys_are_ignored(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("ENVIRONMENT=production\nMAX_WORKERS=2\n")
    settings = AppConfig(_env_file=env_file)
    assert settings.max_workers == 2
    assert "environment" not in AppConfig.model_fields
