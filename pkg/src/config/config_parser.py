"""
Configuration parser for the model change toolkit.
Reads config.txt and provides access to all settings.
"""

import configparser
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from ..oracle.universe import DEFAULT_BUDGET, MAX_CONCEPT_NAMES, MAX_DEPTH, MAX_ROLE_NAMES

logger = logging.getLogger(__name__)


@dataclass
class Config:
    """Container for all configuration settings."""

    # Oracle universe caps
    max_concept_names: int = MAX_CONCEPT_NAMES
    max_role_names: int = MAX_ROLE_NAMES
    max_depth: int = MAX_DEPTH
    budget: int = DEFAULT_BUDGET

    # Random request sampling
    seed: int = 0
    requests: int = 50

    # Output
    unicode: bool = False

    # Logging
    log_level: str = "WARNING"

    @property
    def caps(self) -> Tuple[int, int, int]:
        return self.max_concept_names, self.max_role_names, self.max_depth


class ConfigParser:
    """Parser for config.txt file."""

    DEFAULT_CONFIG_PATH = Path(__file__).parent.parent.parent / "config.txt"

    def __init__(self, config_path: Optional[Path] = None):
        """
        Initialize parser with config file path.

        Args:
            config_path: Path to config.txt. If None, uses default location.
        """
        self._config_path = Path(config_path) if config_path else self.DEFAULT_CONFIG_PATH
        self._parser = configparser.ConfigParser()
        self._config: Optional[Config] = None

    def parse(self) -> Config:
        """
        Parse the configuration file and return Config object.

        Returns:
            Config object with all settings.

        Raises:
            FileNotFoundError: If config file doesn't exist.
            ValueError: If a numeric or boolean setting is malformed.
        """
        if not self._config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {self._config_path}")

        self._parser.read(self._config_path, encoding="utf-8")

        config = Config()

        if self._parser.has_section("oracle"):
            config.max_concept_names = self._parser.getint("oracle", "max_concept_names",
                                                           fallback=MAX_CONCEPT_NAMES)
            config.max_role_names = self._parser.getint("oracle", "max_role_names", fallback=MAX_ROLE_NAMES)
            config.max_depth = self._parser.getint("oracle", "max_depth", fallback=MAX_DEPTH)
            config.budget = self._parser.getint("oracle", "budget", fallback=DEFAULT_BUDGET)

        if self._parser.has_section("sampling"):
            config.seed = self._parser.getint("sampling", "seed", fallback=0)
            config.requests = self._parser.getint("sampling", "requests", fallback=50)

        if self._parser.has_section("output"):
            config.unicode = self._parser.getboolean("output", "unicode", fallback=False)

        if self._parser.has_section("logging"):
            config.log_level = self._parser.get("logging", "level", fallback="WARNING").upper()

        for key in ("max_concept_names", "max_role_names", "max_depth", "budget", "requests"):
            if getattr(config, key) < 0:
                raise ValueError(f"{self._config_path}: {key} must be non-negative")

        self._config = config
        return config

    def get_config(self) -> Config:
        """Get parsed config, parsing if not already done."""
        if self._config is None:
            return self.parse()
        return self._config


def load_config(config_path: Optional[Path] = None) -> Config:
    """
    Convenience function to load configuration.

    Args:
        config_path: Optional path to config file.

    Returns:
        Config object with all settings.
    """
    parser = ConfigParser(config_path)
    return parser.parse()


def load_config_or_default(config_path: Optional[Path] = None) -> Config:
    """Like load_config, but fall back to the defaults when the file is missing."""
    try:
        return load_config(config_path)
    except FileNotFoundError as e:
        logger.warning(f"{e}; using defaults")
        return Config()
