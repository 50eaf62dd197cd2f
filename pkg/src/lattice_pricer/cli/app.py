"""CLI application: argument parsing and command dispatch."""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from ..config import LOG_LEVEL, OUTPUT_FORMATS
from ..errors import LatticePricingError
from ..lattice import CONVENTIONS, WORLDS
from .converge_handler import ConvergeHandler
from .hedge_handler import HedgeHandler
from .models_handler import ModelsHandler
from .moments_handler import MomentsHandler
from .price_handler import PriceHandler
from .tree_handler import TreeHandler

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INTERRUPTED = 130


class CLIApplication:
    """Main CLI application class."""

    def __init__(self):
        self.parser = self._create_parser()
        self.command_handlers = {
            "price": PriceHandler,
            "moments": MomentsHandler,
            "converge": ConvergeHandler,
            "hedge": HedgeHandler,
            "tree": TreeHandler,
            "models": ModelsHandler,
        }

    def _create_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser with all commands."""
        parser = argparse.ArgumentParser(
            prog="lattice-pricer",
            description="Lattice Pricer - binomial and trinomial option pricing trees",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  %(prog)s price --config run.json
  %(prog)s moments --config run.json --zetas 0.5,1,2,3,4
  %(prog)s converge --config run.json --steps-list 100,200,400 --models crr-td,tri-new
  %(prog)s hedge --config run.json --format csv
  %(prog)s tree --config run.json --probabilities
            """,
        )
        parser.add_argument("-v", "--verbose", action="count", default=0, help="More log output on stderr")

        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--config", required=True, help="Path to the JSON run configuration")
        common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")

        subparsers = parser.add_subparsers(dest="cmd", required=True, help="Available commands")

        subparsers.add_parser("price", parents=[common], help="Backward-induction price at the root")

        p_moments = subparsers.add_parser("moments", parents=[common], help="One-step moments against GBM")
        p_moments.add_argument("--zetas", default=None, help="Comma-separated moment orders")
        p_moments.add_argument("--world", choices=WORLDS, default=None, help="Override the config world")

        p_converge = subparsers.add_parser("converge", parents=[common], help="Error against the closed form")
        p_converge.add_argument("--steps-list", dest="steps_list", default=None, help="Comma-separated step counts")
        p_converge.add_argument("--models", default=None, help="Comma-separated model names to compare")

        p_hedge = subparsers.add_parser("hedge", parents=[common], help="Per-node hedge ratios")
        p_hedge.add_argument("--exact", action="store_true", help="Use (G+ - G-)/(S(u - d)) for CRR")

        p_tree = subparsers.add_parser("tree", parents=[common], help="Dump lattice node prices")
        p_tree.add_argument("--probabilities", action="store_true", help="Append step probabilities")
        p_tree.add_argument("--world", choices=WORLDS, default=None, help="Override the config world")
        p_tree.add_argument(
            "--convention", choices=CONVENTIONS, default=None, help="Binomial node convention for varying factors"
        )

        p_models = subparsers.add_parser("models", help="List registered models")
        p_models.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")

        return parser

    @staticmethod
    def _configure_logging(verbosity: int) -> None:
        level = logging.DEBUG if verbosity > 1 else logging.INFO if verbosity == 1 else LOG_LEVEL
        logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    def run(self, args: Optional[List[str]] = None) -> Dict[str, Any]:
        """Run the CLI application."""
        parsed_args = self.parser.parse_args(args)
        self._configure_logging(parsed_args.verbose)

        handler_class = self.command_handlers[parsed_args.cmd]
        handler = handler_class(parsed_args)

        try:
            result = handler.execute()
            result["exit_code"] = EXIT_OK
            return result
        except LatticePricingError as e:
            field = getattr(e, "field", None)
            prefix = f"[{field}] " if field else ""
            print(f"❌ {prefix}{e}", file=sys.stderr)
            return {"status": "error", "error": str(e), "field": field, "exit_code": e.exit_code}
        except KeyboardInterrupt:
            print("\n⚠️  Operation interrupted by user", file=sys.stderr)
            return {"status": "interrupted", "exit_code": EXIT_INTERRUPTED}
        except Exception as e:
            print(f"❌ Unexpected error: {e}", file=sys.stderr)
            return {"status": "error", "error": str(e), "exit_code": EXIT_FAILURE}


def main(args: Optional[List[str]] = None) -> None:
    """Main entry point for the CLI."""
    app = CLIApplication()
    result = app.run(args)
    sys.exit(result["exit_code"])


if __name__ == "__main__":
    main()
