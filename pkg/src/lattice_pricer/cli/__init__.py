"""CLI module for lattice_pricer."""

from .app import CLIApplication, main
from .command_handler import CommandHandler
from .converge_handler import ConvergeHandler
from .hedge_handler import HedgeHandler
from .models_handler import ModelsHandler
from .moments_handler import MomentsHandler
from .price_handler import PriceHandler
from .run_config import GridConfig, PayoffConfig, RunConfig, load_run_config, parse_run_config
from .tree_handler import TreeHandler

__all__ = [
    "CLIApplication",
    "main",
    "CommandHandler",
    "ConvergeHandler",
    "HedgeHandler",
    "ModelsHandler",
    "MomentsHandler",
    "PriceHandler",
    "TreeHandler",
    "GridConfig",
    "PayoffConfig",
    "RunConfig",
    "load_run_config",
    "parse_run_config",
]
