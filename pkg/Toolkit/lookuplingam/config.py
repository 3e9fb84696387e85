import os

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict

# Load environment variables from .env file
load_dotenv()


class Settings(BaseModel):
    """Process-wide settings. Nothing here changes numeric results."""

    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    model_config = ConfigDict(frozen=True)


def get_settings() -> Settings:
    return Settings(
        log_level=os.getenv("LOOKUPLINGAM_LOG_LEVEL", "WARNING").upper(),
        log_format=os.getenv(
            "LOOKUPLINGAM_LOG_FORMAT",
            "%(asctime)s %(levelname)s %(name)s: %(message)s",
        ),
    )
