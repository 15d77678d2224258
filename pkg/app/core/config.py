from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings loaded from the environment (and an optional .env file).
    This class is the central configuration point for the solver, the
    Central/Satellite services and the HTTP API.
    """

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")

    # Service identification
    API_VERSION: str = "1.0.0"
    PROJECT_NAME: str = "NDE Spanning Tree Solver"
    ENVIRONMENT: str = "development"
    LOG_LEVEL: str = "INFO"

    # Distributed mode
    NDE_BIND: str = "127.0.0.1:7464"
    HANDSHAKE_TIMEOUT_S: float = 10.0
    IO_TIMEOUT_S: float = 300.0
    RESULT_REISSUE_LIMIT: int = 3

    # Solver
    DEFAULT_POPULATION_SIZE: int = 16
    DEBUG_CHECKS: bool = False


# Creating a single instance of Settings to be used throughout the application
settings = Settings()
