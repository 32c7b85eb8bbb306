"""
Configuration module for the minuscule homomesy engine.

Usage:
    from config import config

    caps = config.rank_caps()
    workers = config.WORKERS

All settings come from environment variables (prefix MINUSCULE_).
"""
import os
import logging
from pathlib import Path

# Base directory
BASE_DIR = Path(__file__).resolve().parent


def setup_logging(level=logging.INFO, log_file=None):
    """
    Configure logging for the application.

    Args:
        level: Logging level (default: INFO)
        log_file: Optional log file name, written under logs/
    """
    log_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    handlers = [logging.StreamHandler()]

    if log_file:
        log_dir = BASE_DIR / 'logs'
        log_dir.mkdir(exist_ok=True)
        handlers.append(logging.FileHandler(log_dir / log_file, encoding='utf-8'))

    logging.basicConfig(
        level=level,
        format=log_format,
        handlers=handlers,
        force=True,
    )


def _int_env(name, default):
    return int(os.environ.get(name, str(default)))


class Config:
    """Base configuration class."""

    # Application
    APP_NAME = 'Minuscule Homomesy Engine'
    VERSION = '1.0'
    DEBUG = os.environ.get('MINUSCULE_DEBUG', 'false').lower() == 'true'
    LOG_LEVEL = os.environ.get('MINUSCULE_LOG_LEVEL', 'INFO').upper()

    # Desk-scale rank caps; not a correctness boundary
    MAX_RANK_A = _int_env('MINUSCULE_MAX_RANK_A', 9)
    MAX_RANK_B = _int_env('MINUSCULE_MAX_RANK_B', 6)
    MAX_RANK_C = _int_env('MINUSCULE_MAX_RANK_C', 6)
    MAX_RANK_D = _int_env('MINUSCULE_MAX_RANK_D', 7)
    E_RANKS = tuple(
        int(r) for r in os.environ.get('MINUSCULE_E_RANKS', '6,7').split(',') if r.strip()
    )

    # Parallel audits
    WORKERS = _int_env('MINUSCULE_WORKERS', 1)

    # Exhaustive per-ideal checks run only below this many ideals
    EXHAUSTIVE_LIMIT = _int_env('MINUSCULE_EXHAUSTIVE_LIMIT', 10_000)

    # Folders
    REPORTS_FOLDER = os.environ.get('MINUSCULE_REPORTS_FOLDER', str(BASE_DIR / 'reports'))
    LOGS_FOLDER = str(BASE_DIR / 'logs')

    @classmethod
    def rank_caps(cls):
        """Per-family upper bounds on rank, as a dict family -> max rank."""
        return {
            'A': cls.MAX_RANK_A,
            'B': cls.MAX_RANK_B,
            'C': cls.MAX_RANK_C,
            'D': cls.MAX_RANK_D,
            'E': max(cls.E_RANKS) if cls.E_RANKS else 0,
        }

    @classmethod
    def admits(cls, family, rank):
        """Whether (family, rank) is inside the configured caps."""
        if family == 'E':
            return rank in cls.E_RANKS
        return rank <= cls.rank_caps().get(family, 0)

    @classmethod
    def log_level(cls):
        """Root log level: DEBUG when the debug flag is set, else LOG_LEVEL."""
        if cls.DEBUG:
            return logging.DEBUG
        return getattr(logging, cls.LOG_LEVEL, logging.INFO)

    @classmethod
    def ensure_folders(cls):
        """Create output folders if they don't exist."""
        for folder in (cls.REPORTS_FOLDER, cls.LOGS_FOLDER):
            Path(folder).mkdir(parents=True, exist_ok=True)

    @classmethod
    def validate(cls):
        """Validate configuration values."""
        issues = []

        for family, cap in cls.rank_caps().items():
            if family != 'E' and cap < 1:
                issues.append(f"Rank cap for type {family} must be >= 1, got {cap}")

        bad_e = [r for r in cls.E_RANKS if r not in (6, 7, 8)]
        if bad_e:
            issues.append(f"Exceptional ranks must be among 6, 7, 8: {bad_e}")

        if cls.WORKERS < 1:
            issues.append(f"Worker count must be >= 1, got {cls.WORKERS}")

        if not isinstance(logging.getLevelName(cls.LOG_LEVEL), int):
            issues.append(f"Unknown log level: {cls.LOG_LEVEL}")

        return issues

    @classmethod
    def print_config(cls):
        """Print current configuration (for debugging)."""
        print("=" * 50)
        print(f"  {cls.APP_NAME} v{cls.VERSION}")
        print("=" * 50)
        print(f"  DEBUG: {cls.DEBUG}")
        print(f"  Log level: {cls.LOG_LEVEL}")
        print(f"  Rank caps: {cls.rank_caps()} (E ranks {list(cls.E_RANKS)})")
        print(f"  Workers: {cls.WORKERS}")
        print(f"  Exhaustive limit: {cls.EXHAUSTIVE_LIMIT} ideals")
        print(f"  Reports: {cls.REPORTS_FOLDER}")
        print("=" * 50)


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration: small default caps."""
    DEBUG = False
    MAX_RANK_A = 5
    MAX_RANK_B = 4
    MAX_RANK_C = 4
    MAX_RANK_D = 5
    E_RANKS = (6, 7)


# Configuration mapping
config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}

# Get configuration based on environment
env = os.environ.get('MINUSCULE_ENV', 'default')
config = config_map.get(env, DevelopmentConfig)


if __name__ == '__main__':
    config.print_config()

    issues = config.validate()
    if issues:
        print("\nConfiguration Issues:")
        for issue in issues:
            print(f"  - {issue}")
    else:
        print("\nConfiguration is valid.")
