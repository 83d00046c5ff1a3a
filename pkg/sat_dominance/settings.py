from loguru import logger
from pydantic import ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # --- Search heuristics. ---

    # Variable activity (VSIDS)
    VAR_DECAY: float = 0.95
    # Clause activity (CVSIDS)
    CLAUSE_DECAY: float = 0.999
    ACTIVITY_RESCALE_LIMIT: float = 1e100

    # Restarts (Luby sequence, in conflicts)
    LUBY_UNIT: int = 100

    # Random decisions are disabled by default.
    RANDOM_SEED: int = 91648253
    RANDOM_VAR_FREQ: float = 0.0

    # --- Learned-clause database reduction. ---

    REDUCE_BASE: int = 2000
    REDUCE_INC: int = 300
    DEFAULT_STRATEGY: str = "degcomp"
    DEFAULT_MEASURES: str = "size,lbd,cvsids"

    # --- Benchmark harness. ---

    TIMEOUT_CHECK_INTERVAL: int = 1024
    DEFAULT_TIMEOUT_SECONDS: float = 60.0

    # --- Brute-force oracles. ---

    ORACLE_MAX_VARS: int = 25
    ORACLE_MAX_DATABASE: int = 4096
    ORACLE_CHUNK_BITS: int = 16

    @classmethod
    def load_settings(cls) -> "Settings":
        """
        Loads the settings from the '.env' file. If the file holds invalid values, it falls back to the defaults.

        Returns:
            Settings: The initialized settings object.
        """

        logger.info("Loading settings from the environment and the '.env' file.")
        try:
            settings = Settings()
        except ValidationError:
            logger.warning("Failed to validate the settings from the '.env' file. Defaulting to the built-in values.")
            settings = Settings(_env_file=None)

        return settings


settings = Settings.load_settings()
