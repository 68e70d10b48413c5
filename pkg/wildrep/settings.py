from pathlib import Path
from typing import Optional

from pydantic import BaseSettings, FilePath, validator

_APP_PATH = Path(__file__).resolve().parent

__pdoc__ = {'_Settings': True}


class _Settings(BaseSettings):
    DEBUG: bool = False

    APP_TITLE: str = 'wildrep'
    APP_DESCRIPTION: str = '''Exact l-adic Galois representations of elliptic curves
over unramified extensions of Q_3, with brute-force verification oracles.
'''
    SCHEMA_VERSION: str = '1.0'

    LOGGING_CONFIG_FILE: FilePath = str(_APP_PATH / 'logging.dictConfig.json')  # type: ignore
    LOG_LEVEL: Optional[str] = None
    LOG_FILE: Optional[str] = None

    # Batch processing of curve lists (classify, rep)
    N_WORKERS: int = 1
    TASK_TIMEOUT_SECONDS: Optional[float] = None

    # Capacity bounds. Everything is enumerated, so these are hard limits.
    MAX_FIELD_DEGREE: int = 16
    MAX_COUNT_DEGREE: int = 8
    MAX_SYS_DEGREE: int = 5
    MAX_RAW_SYS_DEGREE: int = 1

    # Complex approximations are display-only
    APPROX_DIGITS: int = 10

    class Config:
        env_file = '.env'
        allow_mutation = False

    @validator('*')
    def ensure_paths_are_str(cls, v: object):
        return str(v) if isinstance(v, Path) else v

    @validator('N_WORKERS', 'MAX_FIELD_DEGREE', 'MAX_COUNT_DEGREE',
               'MAX_SYS_DEGREE', 'MAX_RAW_SYS_DEGREE')
    def ensure_positive(cls, v: int):
        assert v >= 1, 'must be a positive integer'
        return v


settings = _Settings()
"""
Global project settings namespace.
Import and reference values from this object.
"""
