"""Runtime configuration for the command-line interface."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Optional

from .errors import FileFormatError

CONFIG_ENV_VAR = "LEXNET_CONFIG"


@dataclass
class Config:
    dictionary: Optional[str] = None
    counts: Optional[str] = None
    morph: Optional[str] = None
    network: Optional[str] = None
    episodes: Optional[str] = None
    extra_dictionary: Optional[str] = None
    steps: int = 10
    top_k: int = 10
    norm_tolerance: float = 1e-9

    def __post_init__(self):
        if self.steps < 1:
            raise ValueError(f"steps must be >= 1, got {self.steps}")


_PATH_FIELDS = ("dictionary", "counts", "morph", "network", "episodes",
                "extra_dictionary")


def load_config(path) -> Config:
    with open(path, encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"bad config file {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise FileFormatError(f"config must be a JSON object: {path}")
    known = set(_PATH_FIELDS) | {"steps", "top_k", "norm_tolerance"}
    unknown = set(obj) - known
    if unknown:
        raise FileFormatError(f"unknown config keys: {sorted(unknown)}")
    try:
        return Config(**obj)
    except (TypeError, ValueError) as exc:
        raise FileFormatError(f"bad config values in {path}: {exc}") from exc


def config_from_env() -> Config:
    path = os.environ.get(CONFIG_ENV_VAR)
    if path:
        return load_config(path)
    return Config()
