from typing import Optional
from pydantic import BaseSettings


class Settings(BaseSettings):
    # Run Mode
    DEBUG: Optional[bool] = False
    TESTING: bool = False

    # LOGGER
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None

    # PARALLELISM
    WORKERS: int = 1

    # ARITHMETIC
    EXACT_BIT_CAP: int = 10**7
    DISPLAY_DIGITS_CAP: int = 10**4
    LOG2_PRECISION: int = 60
    CHERNOFF_SLACK: float = 1e-12

    # ENUMERATION
    ENUMERATION_MAX_N: int = 28
    ENUMERATION_MAX_EDGE_BITS: int = 30
    ENUMERATION_CHUNK_BITS: int = 16
    ENUMERATION_CHUNK_CELLS: int = 2**24

    # CONSTRUCTION
    CONSTRUCT_MAX_TRIALS: int = 1000
    CONSTRUCT_MAX_VERTICES: int = 64
    CONSTRUCT_MAX_SUBSETS: int = 2**20

    class Config:
        env_file = ".env"


settings = Settings()
