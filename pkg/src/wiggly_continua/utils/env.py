"""Environment variable helpers."""

import os

TRUTHY_VALUES = ("true", "1", "yes")


def is_env_flag_enabled(name: str, default: str = "false") -> bool:
    """Check whether a boolean environment variable is switched on.

    Args:
        name: Name of the environment variable
        default: Value assumed when the variable is unset

    Returns:
        True if the value is one of "true", "1" or "yes" (case-insensitive)
    """
    return os.getenv(name, default).lower() in TRUTHY_VALUES


def env_float(name: str, default: float) -> float:
    """Read a float from the environment.

    Raises:
        ValueError: If the variable is set but not a number
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        error_msg = f"{name} must be a number, got {raw!r}"
        raise ValueError(error_msg) from None


def env_int(name: str, default: int) -> int:
    """Read an integer from the environment.

    Raises:
        ValueError: If the variable is set but not an integer
    """
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    if not raw.strip().lstrip("-").isdigit():
        error_msg = f"{name} must be an integer, got {raw!r}"
        raise ValueError(error_msg)
    return int(raw)
