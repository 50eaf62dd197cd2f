"""Models command handler."""

from typing import Any, Dict

from ..models import get_model_info, list_models
from .command_handler import CommandHandler

COLUMNS = ["name", "branches", "supports_hedging", "worlds", "description"]


class ModelsHandler(CommandHandler):
    """Handles the models command: list the registered lattice models."""

    command = "models"

    def execute(self) -> Dict[str, Any]:
        rows = []
        for name in list_models():
            info = get_model_info(name)
            rows.append({**info, "worlds": "|".join(info["worlds"])})
        self.emit(self.writer.render(COLUMNS, rows))
        return {"status": "success", "result": rows}
