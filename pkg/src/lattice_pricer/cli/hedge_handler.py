"""Hedge command handler."""

from typing import Any, Dict

from ..pricing import hedge_report, step_probabilities
from .command_handler import CommandHandler

COLUMNS = ["n", "j", "S", "value", "psi"]


class HedgeHandler(CommandHandler):
    """Handles the hedge command: per-node hedge ratios on binomial models."""

    command = "hedge"

    def execute(self) -> Dict[str, Any]:
        config = self.load_config()
        model = config.build_model()
        model.require_hedging()
        grid = config.grid.to_grid()

        self.progress(f"🛡️  Hedge ratios for {model.name}, N={grid.steps}")
        lattice = model.build(config.spot, grid, "risk-neutral")
        result = hedge_report(
            lattice,
            step_probabilities(lattice),
            model.discounts(grid),
            config.payoff.to_payoff(),
            model,
            exact=bool(getattr(self.args, "exact", False)),
        )
        rows = []
        for n, ratios in enumerate(result.hedge_ratios):
            for j, (price, value, psi) in enumerate(zip(lattice.level(n), result.values[n], ratios)):
                rows.append({"n": n, "j": j, "S": float(price), "value": float(value), "psi": float(psi)})
        self.emit(self.writer.render(COLUMNS, rows))
        return {"status": "success", "result": rows}
