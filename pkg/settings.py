# settings.py
import os
import logging
from typing import Optional

from dotenv import load_dotenv
from pythonjsonlogger import jsonlogger
from rich.console import Console
from rich.logging import RichHandler

from errors import ConfigurationError

load_dotenv()

# --- Numerical policy ---
DEFAULT_TOL_REL = 1e-9
NEAR_DEGENERATE_FACTOR = 10.0
POLE_TOLERANCE = 1e-12
DEFAULT_GRID_RESOLUTION = 16
DET_REFINEMENT_DEPTH = 8

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def _env_number(name: str, default, kind):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return kind(raw)
    except ValueError:
        raise ConfigurationError(f"{name}={raw!r} is not a valid {kind.__name__}", variable=name) from None


def tolerance(override: Optional[float] = None) -> float:
    """Relative eigenvalue threshold: explicit override, then KASHAEV_TOL, then the default."""
    value = float(override) if override is not None else _env_number("KASHAEV_TOL", DEFAULT_TOL_REL, float)
    if not value > 0.0:
        raise ConfigurationError(f"tolerance must be positive, got {value}", tolerance=value)
    return value


def grid_jobs(override: Optional[int] = None) -> int:
    value = int(override) if override is not None else _env_number("KASHAEV_JOBS", 1, int)
    if value < 1:
        raise ConfigurationError(f"grid workers must be at least 1, got {value}", jobs=value)
    return value


def _env_flag(name: str) -> bool:
    return os.getenv(name, "").strip().lower() in {"1", "true", "yes", "on"}


def configure_logging(json_logs: Optional[bool] = None, level: Optional[str] = None) -> logging.Logger:
    """Install a single root handler: rich on a terminal, JSON lines when requested."""
    if json_logs is None:
        json_logs = _env_flag("KASHAEV_LOG_JSON")
    level = (level or os.getenv("KASHAEV_LOG_LEVEL", "INFO")).upper()

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    if json_logs:
        handler: logging.Handler = logging.StreamHandler()
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler = RichHandler(console=Console(stderr=True), show_path=False, markup=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(message)s"))

    root.addHandler(handler)
    root.setLevel(level)
    return root
