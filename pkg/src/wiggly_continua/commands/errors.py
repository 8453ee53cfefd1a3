"""Exit-code mapping for the command-line surface."""

import logging
import sys
from collections.abc import Callable
from functools import wraps
from typing import Any

import click

from ..exceptions import MeasureConstructionStuckError

logger = logging.getLogger("wiggly-continua.commands")

EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3


def _message(error: BaseException) -> str:
    # KeyError wraps its message in quotes
    if isinstance(error, KeyError) and error.args:
        return str(error.args[0])
    return str(error) or type(error).__name__


def exit_codes(func: Callable) -> Callable:
    """
    Decorator mapping package errors onto process exit codes.

    Invalid input (any ValueError, KeyError or OSError) exits with 2; a
    stuck construction or a failed invariant check exits with 3.

    Args:
        func: The command callback to wrap.

    Returns:
        The wrapped callback.
    """

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except MeasureConstructionStuckError as e:
            logger.debug(f"Construction diagnostics: {e.diagnostics}")
            click.echo(f"Error: {_message(e)}", err=True)
            sys.exit(EXIT_CONSTRUCTION)
        except AssertionError as e:
            click.echo(f"Error: invariant check failed: {_message(e)}", err=True)
            sys.exit(EXIT_CONSTRUCTION)
        except (ValueError, KeyError, OSError) as e:
            click.echo(f"Error: {_message(e)}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper
