import logging
import os
from importlib.metadata import PackageNotFoundError, version

import click
from dotenv import load_dotenv

from .utils.env import is_env_flag_enabled
from .utils.logging import setup_logging

try:
    __version__ = version("wiggly-continua")
except PackageNotFoundError:
    # package is not installed
    __version__ = "0.0.0"

# Initialize logging with appropriate level
logging_level = logging.WARNING
if is_env_flag_enabled("WIGGLY_VERBOSE"):
    logging_level = logging.DEBUG

# Set up logging using the utility function
logger = setup_logging(logging_level)

from .commands import COMMANDS  # noqa: E402


@click.version_option(__version__, prog_name="wiggly-continua")
@click.group()
@click.option(
    "-v",
    "--verbose",
    count=True,
    help="Increase verbosity (can be used multiple times)",
)
@click.option(
    "--env-file", type=click.Path(exists=True, dir_okay=False), help="Path to .env file"
)
def main(verbose: int, env_file: str | None) -> None:
    """wiggly-continua - multiscale wiggliness and dimension bounds for continua

    Generate example continua, measure β numbers and scale densities on
    them, build corona measures and turn the results into dimension bounds.
    Settings are read from WIGGLY_* environment variables; command flags
    override them.
    """
    # Environment files are loaded before the verbosity lookup
    if env_file:
        load_dotenv(env_file, override=True)
    else:
        load_dotenv(override=True)

    # Logging level logic
    if verbose == 1:
        current_logging_level = logging.INFO
    elif verbose >= 2:  # -vv or more
        current_logging_level = logging.DEBUG
    else:
        # DEBUG if WIGGLY_VERY_VERBOSE is set, else INFO if WIGGLY_VERBOSE, else WARNING
        if is_env_flag_enabled("WIGGLY_VERY_VERBOSE"):
            current_logging_level = logging.DEBUG
        elif is_env_flag_enabled("WIGGLY_VERBOSE"):
            current_logging_level = logging.INFO
        else:
            current_logging_level = logging.WARNING

    global logger
    logger = setup_logging(current_logging_level)
    logger.debug(f"Logging level set to: {logging.getLevelName(current_logging_level)}")
    if env_file:
        logger.debug(f"Loaded environment from file: {env_file}")
    logger.debug(f"Worker threads: {os.getenv('WIGGLY_THREADS', 'cpu count')}")


for _command in COMMANDS:
    main.add_command(_command)


__all__ = ["main", "__version__"]

if __name__ == "__main__":
    main()
