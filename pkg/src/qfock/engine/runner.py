import logging
from typing import Any, Dict

from ..commands.factoriality import FactorialityCommand
from ..commands.table import TableCommand
from ..commands.verify import VerifyCommand
from .config import create_config

logger = logging.getLogger(__name__)


class CommandRunner:
    def __init__(self):
        # Command classes; each run builds one with its own configuration
        self.commands = {
            'VERIFY': VerifyCommand,
            'FACTORIALITY': FactorialityCommand,
            'TABLE': TableCommand,
        }

    def execute(self, parsed_query: Dict[str, Any]) -> Dict[str, Any]:
        """Execute a parsed command line using the appropriate command handler"""
        command_type = parsed_query.get('type', '').upper()

        if command_type not in self.commands:
            return {"status": "error", "message": f"Unsupported command type: {command_type}"}

        try:
            config = create_config(parsed_query.get('config'))
        except ValueError as e:
            return {"status": "error", "message": f"Invalid configuration: {e}"}

        try:
            command = self.commands[command_type](config)
            result = command.execute(parsed_query)
        except ValueError as e:
            # Guard, basis, cap and domain errors all derive from ValueError
            return {"status": "error", "message": str(e), "config": config}
        result["config"] = config
        return result
