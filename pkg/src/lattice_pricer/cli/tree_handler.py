"""Tree command handler."""

from typing import Any, Dict, List

from ..lattice import MOMENT_MATCHED
from .command_handler import CommandHandler


class TreeHandler(CommandHandler):
    """Handles the tree command: node prices level by level."""

    command = "tree"

    def execute(self) -> Dict[str, Any]:
        config = self.load_config()
        columns: List[str] = ["n", "j", "S"]

        if config.grid.steps == 0:
            rows = [{"n": 0, "j": 0, "S": config.spot}]
        else:
            model = config.build_model()
            convention = getattr(self.args, "convention", None) or MOMENT_MATCHED
            lattice = model.build(config.spot, config.grid.to_grid(), config.world, convention)
            self.progress(f"🌳 {lattice.kind} lattice of {model.name} ({config.world}), N={lattice.grid.steps}")
            with_probs = bool(getattr(self.args, "probabilities", False))
            prob_columns = ["prob_down", "prob_up"] if lattice.is_binomial else ["prob_down", "prob_mid", "prob_up"]
            if with_probs:
                columns += prob_columns
            rows = []
            for n, j, price in lattice.node_rows():
                row = {"n": n, "j": j, "S": price}
                if with_probs and n < lattice.grid.steps:
                    row.update(zip(prob_columns, lattice.steps[n].probabilities))
                rows.append(row)

        self.emit(self.writer.render(columns, rows))
        return {"status": "success", "result": rows}
