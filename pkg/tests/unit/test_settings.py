"""
Unit tests for the settings module.

This module tests the settings management functionality including:
- Settings initialization and defaults
- Loading and saving settings
- Configuration directory detection
- Settings access and modification
- Typed getters used by the CLI
"""

import json
from pathlib import Path
from unittest.mock import patch

import pytest

from centrex.config.settings import Settings
from centrex.models.result_models import OutputFormat


@pytest.fixture
def isolated_settings(tmp_path):
    """Settings bound to an empty temporary configuration directory."""
    return Settings(config_dir=tmp_path / "config")


@pytest.mark.unit
class TestSettingsInitialization:
    """Test settings initialization and defaults."""

    def test_defaults(self, isolated_settings):
        settings = isolated_settings
        assert settings.settings["output"]["format"] == "text"
        assert settings.settings["wild"]["trials"] == 100
        assert settings.settings["wild"]["seed"] == 0
        assert settings.settings["verify"]["random_samples"] == 8
        assert settings.settings["advanced"]["debug_mode"] is False
        assert settings.settings["advanced"]["log_level"] == "WARNING"

    def test_default_settings_structure(self, isolated_settings):
        assert set(isolated_settings.settings) == {"output", "wild", "verify", "advanced"}
        advanced = isolated_settings.settings["advanced"]
        assert {"debug_mode", "log_level", "log_file"} <= set(advanced)

    def test_defaults_are_not_shared(self, tmp_path):
        first = Settings(config_dir=tmp_path / "a")
        first.set("wild", "trials", 5)
        second = Settings(config_dir=tmp_path / "b")
        assert second.get("wild", "trials") == 100
        assert Settings.DEFAULT_SETTINGS["wild"]["trials"] == 100

    def test_missing_directory_is_not_created(self, tmp_path):
        config_dir = tmp_path / "never"
        Settings(config_dir=config_dir)
        assert not config_dir.exists()


@pytest.mark.unit
class TestConfigurationDirectory:
    """Test configuration directory detection."""

    @pytest.mark.parametrize(
        "platform,parts",
        [
            ("win32", ("AppData", "Roaming", "Centrex")),
            ("darwin", ("Library", "Application Support", "Centrex")),
            ("linux", (".config", "centrex")),
        ],
    )
    def test_platform_paths(self, tmp_path, platform, parts):
        with patch("centrex.config.settings.sys.platform", platform), patch(
            "centrex.config.settings.Path.home", return_value=tmp_path
        ):
            settings = Settings()
        assert settings.config_dir == tmp_path.joinpath(*parts)
        assert settings.config_file == tmp_path.joinpath(*parts) / "settings.json"

    def test_explicit_directory(self, tmp_path):
        settings = Settings(config_dir=str(tmp_path))
        assert settings.config_dir == tmp_path


@pytest.mark.unit
class TestSettingsLoadSave:
    """Test loading and saving settings."""

    def test_save_then_load(self, isolated_settings):
        isolated_settings.set("wild", "trials", 250)
        assert isolated_settings.save()
        assert isolated_settings.config_file.exists()
        reloaded = Settings(config_dir=isolated_settings.config_dir)
        assert reloaded.get("wild", "trials") == 250

    def test_load_merges_nested_sections(self, tmp_path):
        (tmp_path / "settings.json").write_text(
            json.dumps({"wild": {"seed": 42}, "custom": {"flag": True}}), encoding="utf-8"
        )
        settings = Settings(config_dir=tmp_path)
        assert settings.get("wild", "seed") == 42
        assert settings.get("wild", "trials") == 100
        assert settings.get("custom", "flag") is True

    def test_load_invalid_json(self, tmp_path):
        (tmp_path / "settings.json").write_text("{not json", encoding="utf-8")
        with patch("centrex.config.settings.logger") as mock_logger:
            settings = Settings(config_dir=tmp_path)
        assert settings.get("wild", "trials") == 100
        mock_logger.warning.assert_called_once()
        assert "Error loading settings" in mock_logger.warning.call_args.args[0]

    def test_load_non_object(self, tmp_path):
        (tmp_path / "settings.json").write_text("[1, 2]", encoding="utf-8")
        settings = Settings(config_dir=tmp_path)
        assert settings.load() is False
        assert settings.get_all() == Settings.DEFAULT_SETTINGS

    def test_save_failure(self, isolated_settings):
        with patch("builtins.open", side_effect=IOError("read-only")):
            assert isolated_settings.save() is False


@pytest.mark.unit
class TestSettingsAccess:
    """Test settings access and modification."""

    def test_get_missing(self, isolated_settings):
        assert isolated_settings.get("nope", "key") is None
        assert isolated_settings.get("wild", "nope", "fallback") == "fallback"

    def test_set_new_section(self, isolated_settings):
        assert isolated_settings.set("extra", "value", 1)
        assert isolated_settings.get("extra", "value") == 1

    def test_set_into_non_dict_section(self, isolated_settings):
        isolated_settings.settings["broken"] = 3
        assert isolated_settings.set("broken", "key", 1) is False

    def test_get_all_is_a_copy(self, isolated_settings):
        snapshot = isolated_settings.get_all()
        snapshot["wild"]["trials"] = 1
        assert isolated_settings.get("wild", "trials") == 100

    def test_reset(self, isolated_settings):
        isolated_settings.set("wild", "trials", 7)
        isolated_settings.set("verify", "random_samples", 2)
        assert isolated_settings.reset_section("wild")
        assert isolated_settings.get("wild", "trials") == 100
        assert isolated_settings.get("verify", "random_samples") == 2
        assert not isolated_settings.reset_section("unknown")
        isolated_settings.reset_to_defaults()
        assert isolated_settings.get_all() == Settings.DEFAULT_SETTINGS


@pytest.mark.unit
class TestTypedGetters:
    """Test the getters that feed command defaults."""

    def test_output_format(self, isolated_settings):
        assert isolated_settings.get_output_format() is OutputFormat.TEXT
        isolated_settings.set("output", "format", "json")
        assert isolated_settings.get_output_format() is OutputFormat.JSON
        isolated_settings.set("output", "format", "yaml")
        assert isolated_settings.get_output_format() is OutputFormat.TEXT

    @pytest.mark.parametrize("value", [0, -3, "12", True, None])
    def test_invalid_trials_fall_back(self, isolated_settings, value):
        isolated_settings.set("wild", "trials", value)
        assert isolated_settings.get_wild_trials() == 100

    def test_valid_values(self, isolated_settings):
        isolated_settings.set("wild", "trials", 12)
        isolated_settings.set("wild", "seed", -4)
        isolated_settings.set("verify", "random_samples", 3)
        assert isolated_settings.get_wild_trials() == 12
        assert isolated_settings.get_wild_seed() == -4
        assert isolated_settings.get_random_samples() == 3

    def test_invalid_seed_falls_back(self, isolated_settings):
        isolated_settings.set("wild", "seed", "seven")
        assert isolated_settings.get_wild_seed() == 0


@pytest.mark.unit
class TestLogFilePath:
    def test_no_log_file_by_default(self, isolated_settings):
        assert isolated_settings.get_log_file_path() is None

    def test_explicit_log_file(self, isolated_settings, tmp_path):
        isolated_settings.set("advanced", "log_file", str(tmp_path / "run.log"))
        assert isolated_settings.get_log_file_path() == tmp_path / "run.log"

    def test_debug_mode_uses_config_dir(self, isolated_settings):
        isolated_settings.set("advanced", "debug_mode", True)
        assert isolated_settings.get_log_file_path() == Path(
            isolated_settings.config_dir / "centrex.log"
        )
