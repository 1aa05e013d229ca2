from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional

from src.core.enums import LogLevel


class AppConfig(BaseSettings):
    """Toolkit configuration.

    Read from constructor arguments and an optional ``.env`` file only.
    The process environment is not a source.
    """
    
    # Logging Configuration
    log_level: LogLevel = Field(default=LogLevel.WARNING, description="Logging level")
    log_format: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log format string"
    )
    log_date_format: str = Field(
        default="%Y-%m-%d %H:%M:%S",
        description="Log date format"
    )
    log_file: Optional[str] = Field(default=None, description="Log file path, no file logging when unset")

    # Exponential-time guards
    oracle_max_vertices: int = Field(default=24, ge=1, description="Hard vertex guard of the brute-force oracle")
    oracle_path_cap: int = Field(default=10**6, ge=1, description="Maximum number of enumerated diametral paths")
    reduction_max_variables: int = Field(default=6, ge=4, description="Largest padded variable count verify_equivalence accepts")
    reduction_oracle_max_vertices: int = Field(default=200, ge=1, description="Oracle vertex guard used on reduction graphs")
    reduction_fast_max_k: int = Field(default=3, ge=2, description="Largest k_target also checked by the fast recognizer")

    # Execution
    max_workers: int = Field(default=4, ge=1, description="Concurrent per-source searches in the services")
    check_invariants: bool = Field(default=False, description="Assert the k=1 search's queue invariant on every dequeued edge")
    
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls,
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ):
        return init_settings, dotenv_settings


# Global configuration instance
config = AppConfig()
