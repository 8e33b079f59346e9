from pydantic_settings import BaseSettings
from dotenv import load_dotenv
from pathlib import Path
from functools import lru_cache
from typing import List

PROJECT_ROOT_CONFIG_PERSPECTIVE = Path(__file__).parent.parent.resolve()
ENV_PATH = PROJECT_ROOT_CONFIG_PERSPECTIVE / ".env"

if ENV_PATH.exists():
    load_dotenv(dotenv_path=ENV_PATH)


class Settings(BaseSettings):
    """
    Toolkit settings.
    Values are loaded from environment variables (and the optional .env file).
    Every CLI default is taken from here.
    """
    APP_NAME: str = "Bound Quiver Algebra Toolkit"
    APP_VERSION: str = "1.0.0"

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s"
    LOG_DATE_FORMAT: str = "%Y-%m-%d %H:%M:%S"

    # Base field: "Q" for the rationals, "F <p>" for a prime field
    DEFAULT_FIELD: str = "Q"

    # Syzygy / stabilization iteration cap
    ITERATION_CAP: int = 64

    # Seed for generic elements and sampled property checks
    RANDOM_SEED: int = 20140813
    ISO_RANDOM_TRIES: int = 4

    # Bounded coefficient set for deterministic searches
    SEARCH_COEFFICIENTS: str = "1,-1,2,-2"

    # Presentation verification
    PRESENTATION_NEWTON_STEPS: int = 12
    PRESENTATION_MAX_ATTEMPTS: int = 64

    # Paths (relative to the project root)
    FIXTURES_PATH: str = "fixtures"
    REPORTS_PATH: str = "reports"

    # Treat inconclusive verdicts as failures (exit code 3)
    STRICT: bool = False

    class Config:
        env_file = str(ENV_PATH)
        env_file_encoding = 'utf-8'
        extra = 'ignore'

    def search_coefficients(self) -> List[int]:
        return [int(c) for c in self.SEARCH_COEFFICIENTS.split(",") if c.strip()]

    def fixtures_dir(self) -> Path:
        return PROJECT_ROOT_CONFIG_PERSPECTIVE / self.FIXTURES_PATH

    def reports_dir(self) -> Path:
        return PROJECT_ROOT_CONFIG_PERSPECTIVE / self.REPORTS_PATH


@lru_cache()
def get_settings() -> Settings:
    return Settings()


def ensure_env_file():
    """Ensures a .env file exists at the project root."""
    env_path_to_check = PROJECT_ROOT_CONFIG_PERSPECTIVE / ".env"
    if not env_path_to_check.exists():
        default_env_content = (
            "LOG_LEVEL=INFO\n"
            "DEFAULT_FIELD=Q\n"
            "ITERATION_CAP=64\n"
            "RANDOM_SEED=20140813\n"
            "SEARCH_COEFFICIENTS=1,-1,2,-2\n"
            "FIXTURES_PATH=fixtures\n"
            "REPORTS_PATH=reports\n"
            "STRICT=false\n"
        )
        try:
            with open(env_path_to_check, "w") as f:
                f.write(default_env_content)
        except IOError as e:
            print(f"Error creating default .env file: {e}")
