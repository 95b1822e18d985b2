from typing import Optional

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Base application settings"""

    # Application
    app_name: str = "Matchcrit"
    app_version: str = "1.0.0"
    debug: bool = False
    environment: str = "development"

    # Server
    server_host: str = "0.0.0.0"
    server_port: int = 8000

    # Logging
    log_level: str = "INFO"

    # Matching engine
    memo_cap: Optional[int] = Field(
        default=None,
        ge=1,
        validation_alias=AliasChoices("MATCHCRIT_MEMO_CAP", "memo_cap"),
        description="Maximum memo entries; unbounded when unset",
    )
    path_tree_node_limit: int = 1_000_000
    oracle_max_order: int = 16

    # Enumeration
    native_enum_max_order: int = 9
    tree_enum_max_order: int = 18
    n_theta_max_order: int = 9

    # Parallelism
    default_jobs: int = 1

    # Celery
    celery_broker_url: Optional[str] = None
    celery_result_backend: Optional[str] = None
    celery_publish_timeout_seconds: float = 2.0
    celery_broker_connection_timeout_seconds: float = 2.0
    celery_broker_socket_timeout_seconds: float = 2.0
    celery_task_time_limit_seconds: int = 3600

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="allow",
        populate_by_name=True,
    )


# Global settings instance
settings = Settings()
