import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Union

from dotenv import dotenv_values

logger = logging.getLogger(__name__)

ENV_PREFIX = "E6LENS_"


class SettingsError(ValueError):
    """A malformed E6LENS_* value."""

    def __init__(self, key: str, raw: str, reason: str):
        super().__init__(f"{key} must be {reason}, got {raw!r}")
        self.key = key
        self.raw = raw


@dataclass(frozen=True)
class Settings:
    pmax: int = 48
    corollary_pmax: int = 60
    precision: int = 128
    workers: int = 1
    float_digits: int = 10


def load_settings(path: Union[str, Path] = ".env") -> Settings:
    """
    Settings from E6LENS_* keys of a dotenv file. Missing keys (or a missing
    file) keep their defaults.
    """
    config = dotenv_values(path)
    values = {}
    for field in fields(Settings):
        key = ENV_PREFIX + field.name.upper()
        raw = config.get(key)
        if raw is None or raw == "":
            continue
        try:
            values[field.name] = int(raw)
        except ValueError:
            raise SettingsError(key, raw, "an integer") from None
        if values[field.name] < 1:
            raise SettingsError(key, raw, "positive")

    logger.debug("Loaded settings %s from %s", values, path)
    return Settings(**values)
