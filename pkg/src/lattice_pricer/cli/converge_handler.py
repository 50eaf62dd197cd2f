"""Converge command handler."""

from typing import Any, Dict

from ..common import Stopwatch, format_sweep_progress, parse_int_list
from ..config import DEFAULT_STEPS_LIST
from ..verification import bs_price_for_market, compare_models
from .command_handler import CommandHandler

COLUMNS = ["model", "N", "lattice_price", "oracle_price", "abs_error", "order"]


class ConvergeHandler(CommandHandler):
    """Handles the converge command: error against the closed-form oracle per step count."""

    command = "converge"
    default_format = "csv"

    def execute(self) -> Dict[str, Any]:
        config = self.load_config()
        ns = parse_int_list(getattr(self.args, "steps_list", None), DEFAULT_STEPS_LIST, "steps-list")
        raw_models = getattr(self.args, "models", None)
        names = [n.strip() for n in raw_models.split(",") if n.strip()] if raw_models else [config.model]
        models = {name: config.build_model(name) for name in names}
        payoff = config.payoff
        oracle = bs_price_for_market(config.market, config.spot, payoff.strike, config.grid.maturity, payoff.kind)

        watch = Stopwatch()
        self.progress(f"📈 Convergence of {', '.join(names)} over N={ns}, oracle={oracle:.7g}")
        rows = []
        for idx, (name, model) in enumerate(models.items(), start=1):
            self.progress(format_sweep_progress(idx, len(models), name, ns))
            rows.extend(compare_models({name: model}, config.spot, config.grid.maturity, ns, payoff.to_payoff(), oracle))

        table = [
            {
                "model": row.model,
                "N": row.steps,
                "lattice_price": row.lattice_price,
                "oracle_price": row.oracle_price,
                "abs_error": row.abs_error,
                "order": row.order,
            }
            for row in rows
        ]
        self.emit(self.writer.render(COLUMNS, table))
        self.progress(f"⏱️  Total time: {watch.formatted()}")
        return {"status": "success", "result": table}
