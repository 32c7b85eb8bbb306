# -*- coding: utf-8 -*-
"""
Tests for configuration and logging setup.
"""
import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import config as config_module
from config import Config, setup_logging


class TestConfig:
    """Tests for the configuration classes."""

    def test_testing_config_selected(self):
        assert config_module.config is config_module.TestingConfig
        assert config_module.config_map['testing'] is config_module.TestingConfig

    def test_rank_caps(self):
        caps = config_module.TestingConfig.rank_caps()
        assert caps == {'A': 5, 'B': 4, 'C': 4, 'D': 5, 'E': 7}

    def test_admits(self):
        assert config_module.TestingConfig.admits('A', 5)
        assert not config_module.TestingConfig.admits('A', 6)
        assert config_module.TestingConfig.admits('E', 6)
        assert not config_module.TestingConfig.admits('E', 8)
        assert not config_module.TestingConfig.admits('F', 4)

    def test_defaults_are_valid(self):
        assert Config.validate() == []

    def test_validate_reports_issues(self, monkeypatch):
        monkeypatch.setattr(Config, 'WORKERS', 0)
        monkeypatch.setattr(Config, 'E_RANKS', (5,))
        monkeypatch.setattr(Config, 'LOG_LEVEL', 'LOUD')
        issues = Config.validate()
        assert len(issues) == 3
        assert any("Worker" in issue for issue in issues)

    def test_ensure_folders(self, tmp_path, monkeypatch):
        monkeypatch.setattr(Config, 'REPORTS_FOLDER', str(tmp_path / 'reports'))
        monkeypatch.setattr(Config, 'LOGS_FOLDER', str(tmp_path / 'logs'))
        Config.ensure_folders()
        assert (tmp_path / 'reports').is_dir()
        assert (tmp_path / 'logs').is_dir()

    def test_print_config(self, capsys):
        config_module.TestingConfig.print_config()
        assert "Minuscule Homomesy Engine" in capsys.readouterr().out


class TestLogging:
    """Tests for logging setup."""

    def test_level_applied(self):
        setup_logging(logging.DEBUG)
        assert logging.getLogger().level == logging.DEBUG
        setup_logging(logging.WARNING)
        assert logging.getLogger().level == logging.WARNING

    def test_log_level_follows_debug_flag(self, monkeypatch):
        monkeypatch.setattr(Config, 'DEBUG', True)
        assert Config.log_level() == logging.DEBUG
        monkeypatch.setattr(Config, 'DEBUG', False)
        monkeypatch.setattr(Config, 'LOG_LEVEL', 'WARNING')
        assert Config.log_level() == logging.WARNING
