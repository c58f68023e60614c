from typing import List
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)

    # Application
    APP_NAME: str = "Nakayama Deformation Rings"
    APP_VERSION: str = "1.0.0"

    # Coefficients
    DEFAULT_PRIME: int = Field(default=2, description="Prime used for quotient models and the oracle")
    EXACT_FIELD: str = "QQ"  # QQ, GF
    SPOT_CHECK_PRIMES: List[int] = [2, 3]

    # Truncation
    TRUNCATION_MAX_DEGREE: int = 64
    STABILIZATION_WINDOW: int = 2

    # Oracle caps
    ORACLE_MAX_CANDIDATES: int = 2 ** 24
    ORACLE_MAX_GROUP: int = 2 ** 16
    ORACLE_BATCH_SIZE: int = 2 ** 14
    COUNT_HOMS_MAX_ASSIGNMENTS: int = 2 ** 20

    # Centralizer solve
    CENTRALIZER_MAX_UNKNOWNS: int = 2048

    # Verification grid
    MAX_WORKERS: int = 1

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "json"  # json, text

# Global settings instance
settings = Settings()
