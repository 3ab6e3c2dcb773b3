"""Application configuration."""
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict

# Find project root (where .env is located)
PROJECT_ROOT = Path(__file__).parent.parent.parent.parent
ENV_FILE = PROJECT_ROOT / ".env"
BUNDLED_CATALOG = Path(__file__).parent / "data" / "catalog.tsv"


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=str(ENV_FILE),
        env_prefix="TURAEV_",
        case_sensitive=False,
        extra="ignore",
    )

    # State enumeration
    state_cap: int = 20  # brute-force 2^c loops refuse beyond this
    bruteforce_crossings: int = 10  # bracket() switches to the sweep above this

    # Bracket sweep
    sweep_width_cap: int = 12  # strands cut by the sweep line

    # Khovanov homology
    khovanov_cap: int = 12
    khovanov_field: Literal["q", "f2"] = "q"

    # Batch runs
    jobs: int = 1
    catalog_path: str = str(BUNDLED_CATALOG)
    random_seed: int = 20190601

    # Output
    log_level: str = "WARNING"
    pretty: bool = False
    schema_version: str = "1"


settings = Settings()
