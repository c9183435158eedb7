from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from typing import Optional
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="FLAGTORIC_", extra="ignore")

    ENV: str = Field("local")
    LOG_LEVEL: str = Field("WARNING")

    # worker threads for independent checks; None means one per core
    THREADS: Optional[int] = Field(None, ge=1)

    ORACLE_MAX_EDGES: int = Field(10)
    ORACLE_MAX_DEGREE: int = Field(3)
    HULL_MAX_DIMENSION: int = Field(7)
    HULL_MAX_POINTS: int = Field(20)
    SCAN_MAX_POINTS: int = Field(200000)

settings = Settings()
