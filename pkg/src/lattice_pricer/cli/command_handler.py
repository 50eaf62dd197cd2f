"""Base command handler class for CLI commands."""

import argparse
import sys
from typing import Any, Dict, Optional

from ..common import ReportWriter
from ..config import DEFAULT_OUTPUT_FORMAT
from .run_config import RunConfig, load_run_config


class CommandHandler:
    """Base class for command handlers."""

    command = ""
    default_format: Optional[str] = None

    def __init__(self, args: argparse.Namespace):
        self.args = args

    def execute(self) -> Dict[str, Any]:
        """Execute the command and return results."""
        raise NotImplementedError

    def load_config(self) -> RunConfig:
        config = load_run_config(self.args.config, self.command)
        if getattr(self.args, "world", None):
            config = config.with_world(self.args.world)
        return config

    @property
    def writer(self) -> ReportWriter:
        output_format = getattr(self.args, "format", None) or self.default_format or DEFAULT_OUTPUT_FORMAT
        return ReportWriter(output_format)

    @staticmethod
    def emit(text: str) -> None:
        """Report output; the only thing written to stdout."""
        print(text)

    @staticmethod
    def progress(message: str) -> None:
        print(message, file=sys.stderr)
