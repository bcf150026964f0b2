import os
import logging
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

# Toolkit Configuration
CONFIG = {
    "WEIGHTLAT_GUARD": os.getenv('WEIGHTLAT_GUARD', '').strip(),
    "WEIGHTLAT_LOG_LEVEL": os.getenv('WEIGHTLAT_LOG_LEVEL', 'WARNING').strip().upper(),
    "WEIGHTLAT_TOL": os.getenv('WEIGHTLAT_TOL', '1e-10').strip(),
    "WEIGHTLAT_MAX_ITER": os.getenv('WEIGHTLAT_MAX_ITER', '10000').strip(),
}

VALID_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def _parse_guard(raw: str):
    """Return None (unset), 'override', or a positive int ceiling."""
    if raw == '':
        return None
    if raw.lower() == 'override':
        return 'override'
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"[Config] WEIGHTLAT_GUARD must be a positive integer or 'override', got '{raw}'")
    if value <= 0:
        raise ValueError(f"[Config] WEIGHTLAT_GUARD must be positive, got {value}")
    return value


def _parse_tol(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"[Config] WEIGHTLAT_TOL must be a number, got '{raw}'")
    if not value > 0:
        raise ValueError(f"[Config] WEIGHTLAT_TOL must be > 0, got {value}")
    return value


def _parse_max_iter(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"[Config] WEIGHTLAT_MAX_ITER must be an integer, got '{raw}'")
    if value <= 0:
        raise ValueError(f"[Config] WEIGHTLAT_MAX_ITER must be positive, got {value}")
    return value


if CONFIG["WEIGHTLAT_LOG_LEVEL"] not in VALID_LOG_LEVELS:
    raise ValueError(f"[Config] WEIGHTLAT_LOG_LEVEL must be one of {VALID_LOG_LEVELS}, got '{CONFIG['WEIGHTLAT_LOG_LEVEL']}'")

GUARD_SETTING = _parse_guard(CONFIG["WEIGHTLAT_GUARD"])
DEFAULT_TOL = _parse_tol(CONFIG["WEIGHTLAT_TOL"])
DEFAULT_MAX_ITER = _parse_max_iter(CONFIG["WEIGHTLAT_MAX_ITER"])
LOG_LEVEL = CONFIG["WEIGHTLAT_LOG_LEVEL"]


def configure_logging(level: str = None):
    """Configure root logging on standard error for the command line tool"""
    logging.basicConfig(
        level=getattr(logging, level or LOG_LEVEL),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
