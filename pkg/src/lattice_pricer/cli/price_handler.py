"""Price command handler."""

from typing import Any, Dict

from ..common import Stopwatch
from ..pricing import price_model
from ..verification import bs_price_for_market
from .command_handler import CommandHandler


class PriceHandler(CommandHandler):
    """Handles the price command."""

    command = "price"

    def execute(self) -> Dict[str, Any]:
        """Backward-induction price at the root, with the closed-form oracle alongside."""
        config = self.load_config()
        model = config.build_model()
        grid = config.grid.to_grid()
        payoff = config.payoff

        self.progress(f"🚀 Pricing {payoff.kind} K={payoff.strike} with {model.name}, N={grid.steps}")
        watch = Stopwatch()
        result = price_model(model, config.spot, grid, payoff.to_payoff(), keep_values=config.keep_values)

        oracle = None
        if config.oracle:
            oracle = bs_price_for_market(config.market, config.spot, payoff.strike, grid.maturity, payoff.kind)
        record = {
            "model": model.name,
            "root_price": result.root_value,
            "N": grid.steps,
            "oracle_price": oracle,
            "abs_error": abs(result.root_value - oracle) if oracle is not None else None,
        }
        self.emit(self.writer.render_record(record))
        self.progress(f"⏱️  Done in {watch.formatted()}")
        return {"status": "success", "result": record}
