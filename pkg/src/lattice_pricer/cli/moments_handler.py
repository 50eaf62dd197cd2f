"""Moments command handler."""

from typing import Any, Dict

from ..common import parse_float_list
from ..config import DEFAULT_ZETAS
from ..verification import moment_table
from .command_handler import CommandHandler

COLUMNS = ["model", "world", "zeta", "dt", "lattice_moment", "analytic_moment", "exact_moment", "residual"]


class MomentsHandler(CommandHandler):
    """Handles the moments command: one-step lattice moments against GBM moments."""

    command = "moments"

    def execute(self) -> Dict[str, Any]:
        config = self.load_config()
        zetas = parse_float_list(getattr(self.args, "zetas", None), DEFAULT_ZETAS, "zetas")
        model = config.build_model()
        grid = config.grid.to_grid()
        world = config.world

        model.check_world(world)
        model.check_grid(grid)
        t_end = grid.step_end(0)
        step = model.step(t_end, grid.dt, world)
        market = config.market
        drift = market.mu_at(t_end) if world == "natural" else market.rate_at(t_end)

        self.progress(f"📐 Moments of {model.name} ({world}) at dt={grid.dt}")
        reports = moment_table(step, zetas, drift, market.sigma_at(t_end))
        rows = [
            {
                "model": model.name,
                "world": world,
                "zeta": report.zeta,
                "dt": report.dt,
                "lattice_moment": report.lattice_moment,
                "analytic_moment": report.analytic_moment,
                "exact_moment": report.exact_moment,
                "residual": report.residual,
            }
            for report in reports
        ]
        self.emit(self.writer.render(COLUMNS, rows))
        return {"status": "success", "result": rows}
