# ldikit/config.py
"""
Runtime configuration.

Values come from the environment (optionally a .env file in the working
directory). Services read them through get_settings(); explicit keyword
arguments and CLI flags take precedence.
"""
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class Settings(BaseModel):
    search_budget: int = Field(50_000_000, ge=1)  # brute-force candidate vectors
    support_budget: int = Field(2_000_000, ge=1)  # support sets scanned by d*
    threads: int = Field(1, ge=1)  # worker processes for enumeration
    block_limit: int = Field(262_144, ge=1)  # candidates vectorized per block
    state_budget: int = Field(16384, ge=1)  # amplitudes in a dense state
    sign_search_limit: int = Field(65536, ge=1)  # sign patterns tried per lift
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        env = {
            "search_budget": os.getenv("LDI_SEARCH_BUDGET"),
            "support_budget": os.getenv("LDI_SUPPORT_BUDGET"),
            "threads": os.getenv("LDI_THREADS"),
            "block_limit": os.getenv("LDI_BLOCK_LIMIT"),
            "state_budget": os.getenv("LDI_STATE_BUDGET"),
            "sign_search_limit": os.getenv("LDI_SIGN_SEARCH_LIMIT"),
            "log_level": os.getenv("LDI_LOG_LEVEL"),
        }
        return cls(**{k: v for k, v in env.items() if v not in (None, "")})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    settings = Settings.from_env()
    return settings
