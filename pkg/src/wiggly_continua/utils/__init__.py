"""
Utility functions for wiggly-continua.
"""

from .env import env_float, env_int, is_env_flag_enabled
from .logging import log_config_param, setup_logging
from .parallel import parallel_map, thread_count

__all__ = [
    "env_float",
    "env_int",
    "is_env_flag_enabled",
    "log_config_param",
    "parallel_map",
    "setup_logging",
    "thread_count",
]
