import os
import json
import logging
from typing import Dict, Any, Optional
from pathlib import Path

from constants import (
    DEFAULT_HORIZON, DEFAULT_LATTICE_HORIZON, DEFAULT_MAX_DEPTH, DEFAULT_SAMPLES,
    DEFAULT_SEED, DEFAULT_STATE_CAP, MODE_POSITIVE, MODES, STATE_CAP_ENV
)

# Get logger
logger = logging.getLogger('klang')

# Default configuration file location
DEFAULT_CONFIG_FILE = "klang_config.json"

DEFAULT_CONFIG = {
    'mode': MODE_POSITIVE,
    'samples': DEFAULT_SAMPLES,
    'seed': DEFAULT_SEED,
    'horizon': DEFAULT_HORIZON,
    'lattice_horizon': DEFAULT_LATTICE_HORIZON,
    'max_depth': DEFAULT_MAX_DEPTH,
    'log_file': None,
}


def get_config_path(file_path: Optional[str] = None) -> str:
    """
    Get the configuration file path

    Args:
        file_path: Optional explicit path to the configuration file

    Returns:
        Path to configuration file
    """
    if file_path:
        path = Path(file_path)
    else:
        xdg_config = os.environ.get('XDG_CONFIG_HOME', '')
        if xdg_config:
            path = Path(xdg_config) / "klang" / DEFAULT_CONFIG_FILE
        else:
            path = Path.home() / ".config" / "klang" / DEFAULT_CONFIG_FILE

    logger.debug(f"Using config path: {path}")
    return str(path)


def _is_valid(key: str, value: Any) -> bool:
    if key == 'mode':
        return value in MODES
    if key == 'log_file':
        return value is None or isinstance(value, str)
    if key in ('seed',):
        return isinstance(value, int) and not isinstance(value, bool)
    if key in ('horizon', 'lattice_horizon'):
        return isinstance(value, int) and not isinstance(value, bool) and value >= 0
    # samples, max_depth
    return isinstance(value, int) and not isinstance(value, bool) and value >= 1


def load_config(file_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from a JSON file, merged over the defaults

    A missing file is not an error; unreadable files and invalid values fall
    back to the defaults with a warning.

    Args:
        file_path: Path to the configuration file

    Returns:
        Configuration dictionary
    """
    merged_config = dict(DEFAULT_CONFIG)
    config_path = get_config_path(file_path)

    if not os.path.exists(config_path):
        if file_path:
            logger.warning(f"Config file {config_path} does not exist, using defaults")
        else:
            logger.debug(f"Config file {config_path} does not exist, using defaults")
        return merged_config

    try:
        with open(config_path, 'r') as f:
            config = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Error decoding JSON from config file {config_path}: {e}")
        return merged_config
    except IOError as e:
        logger.error(f"Error reading config file {config_path}: {e}")
        return merged_config

    if not isinstance(config, dict):
        logger.warning(f"Config file {config_path} does not contain an object, using defaults")
        return merged_config

    logger.debug(f"Loaded configuration from {config_path}")

    for key, value in config.items():
        if key not in merged_config:
            logger.warning(f"Ignoring unknown config key '{key}'")
            continue
        if not _is_valid(key, value):
            logger.warning(f"Invalid value {value!r} for '{key}', using {merged_config[key]!r}")
            continue
        merged_config[key] = value

    return merged_config


def get_state_cap() -> int:
    """
    Get the subset-construction state cap

    Returns:
        KLANG_STATE_CAP from the environment when it is a positive integer,
        otherwise the built-in default
    """
    raw = os.environ.get(STATE_CAP_ENV)
    if raw is None:
        return DEFAULT_STATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        logger.warning(f"Invalid {STATE_CAP_ENV}={raw!r}, using {DEFAULT_STATE_CAP}")
        return DEFAULT_STATE_CAP
    if cap < 1:
        logger.warning(f"Invalid {STATE_CAP_ENV}={raw!r}, using {DEFAULT_STATE_CAP}")
        return DEFAULT_STATE_CAP
    return cap
