"""
Settings management for Centrex.

This module provides functions to manage application settings,
including loading, saving, and accessing configuration values.
"""

import copy
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from centrex.models.result_models import OutputFormat

logger = logging.getLogger(__name__)


class Settings:
    """
    Settings manager for Centrex.

    Values come from the built-in defaults, deep-merged with the JSON file in
    the per-user configuration directory when it exists. Command-line flags
    override both.
    """

    DEFAULT_SETTINGS = {
        "output": {
            "format": "text",
        },
        "wild": {
            "trials": 100,
            "seed": 0,
        },
        "verify": {
            "random_samples": 8,
        },
        "advanced": {
            "debug_mode": False,
            "log_level": "WARNING",
            "log_file": "",
        },
    }

    def __init__(self, config_dir: Optional[Path] = None):
        """
        Initialize the settings manager.

        Args:
            config_dir (Optional[Path]): Override for the configuration directory.
        """
        self.settings = copy.deepcopy(self.DEFAULT_SETTINGS)
        self.config_dir = Path(config_dir) if config_dir else self._get_config_dir()
        self.config_file = self.config_dir / "settings.json"

        if self.config_file.exists():
            self.load()

    def _get_config_dir(self) -> Path:
        """
        Get the configuration directory for the application.

        Returns:
            Path: Path to the configuration directory.
        """
        home = Path.home()
        if sys.platform.startswith("win"):
            return home / "AppData" / "Roaming" / "Centrex"
        if sys.platform == "darwin":
            return home / "Library" / "Application Support" / "Centrex"
        return home / ".config" / "centrex"

    def load(self) -> bool:
        """
        Load settings from the configuration file.

        Returns:
            bool: True if successful, False otherwise.
        """
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                loaded_settings = json.load(f)
            if not isinstance(loaded_settings, dict):
                raise ValueError("settings file must hold a JSON object")
            self._update_nested_dict(self.settings, loaded_settings)
            return True

        except (json.JSONDecodeError, ValueError, IOError) as e:
            logger.warning("Error loading settings from %s: %s", self.config_file, e)
            return False

    def save(self) -> bool:
        """
        Save settings to the configuration file, creating the directory.

        Returns:
            bool: True if successful, False otherwise.
        """
        try:
            self.config_dir.mkdir(parents=True, exist_ok=True)
            with open(self.config_file, "w", encoding="utf-8") as f:
                json.dump(self.settings, f, indent=2)
            return True

        except IOError as e:
            logger.warning("Error saving settings to %s: %s", self.config_file, e)
            return False

    def _update_nested_dict(self, target: Dict, source: Dict) -> None:
        for key, value in source.items():
            if (
                key in target
                and isinstance(target[key], dict)
                and isinstance(value, dict)
            ):
                self._update_nested_dict(target[key], value)
            else:
                target[key] = value

    def get(self, section: str, key: str, default: Any = None) -> Any:
        """
        Get a setting value.

        Args:
            section (str): Settings section.
            key (str): Setting key.
            default (Any): Default value if not found.

        Returns:
            Any: Setting value or default.
        """
        try:
            return self.settings[section][key]
        except (KeyError, TypeError):
            return default

    def set(self, section: str, key: str, value: Any) -> bool:
        """
        Set a setting value.

        Returns:
            bool: True if successful, False otherwise.
        """
        section_values = self.settings.setdefault(section, {})
        if not isinstance(section_values, dict):
            return False
        section_values[key] = value
        return True

    def get_all(self) -> Dict[str, Dict[str, Any]]:
        return copy.deepcopy(self.settings)

    def reset_to_defaults(self) -> None:
        """Reset all settings to default values."""
        self.settings = copy.deepcopy(self.DEFAULT_SETTINGS)

    def reset_section(self, section: str) -> bool:
        """
        Reset a section to default values.

        Args:
            section (str): Settings section.

        Returns:
            bool: True if successful, False otherwise.
        """
        if section in self.DEFAULT_SETTINGS:
            self.settings[section] = copy.deepcopy(self.DEFAULT_SETTINGS[section])
            return True
        return False

    def get_log_file_path(self) -> Optional[Path]:
        """
        Get the path to the log file.

        Returns:
            Optional[Path]: Path to the log file, or None if not set.
        """
        log_file = self.get("advanced", "log_file", "")

        if log_file:
            return Path(log_file)
        elif self.get("advanced", "debug_mode", False):
            return self.config_dir / "centrex.log"
        else:
            return None

    def get_output_format(self) -> OutputFormat:
        """Configured output format; unknown values fall back to text."""
        try:
            return OutputFormat(self.get("output", "format", "text"))
        except ValueError:
            return OutputFormat.TEXT

    def _positive_int(self, section: str, key: str) -> int:
        value = self.get(section, key)
        if isinstance(value, int) and not isinstance(value, bool) and value > 0:
            return value
        return self.DEFAULT_SETTINGS[section][key]

    def get_wild_trials(self) -> int:
        return self._positive_int("wild", "trials")

    def get_wild_seed(self) -> int:
        value = self.get("wild", "seed")
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        return self.DEFAULT_SETTINGS["wild"]["seed"]

    def get_random_samples(self) -> int:
        return self._positive_int("verify", "random_samples")


# Global settings instance
settings = Settings()
