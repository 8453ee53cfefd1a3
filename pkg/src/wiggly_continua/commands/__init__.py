"""Command-line surface of wiggly-continua."""

from .analyze import AnalysisSelection, analyze_command, run_analysis
from .context import AnalysisContext
from .corpus import corpus_command, run_corpus
from .errors import EXIT_CONSTRUCTION, EXIT_USAGE, exit_codes
from .generate import generate_command
from .plot import plot_command

COMMANDS = (generate_command, analyze_command, plot_command, corpus_command)

__all__ = [
    "COMMANDS",
    "EXIT_CONSTRUCTION",
    "EXIT_USAGE",
    "AnalysisContext",
    "AnalysisSelection",
    "analyze_command",
    "corpus_command",
    "exit_codes",
    "generate_command",
    "plot_command",
    "run_analysis",
    "run_corpus",
]
