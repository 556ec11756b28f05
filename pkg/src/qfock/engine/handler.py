import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from ..settings import log_level
from ..utils.report_encoder import dump_report, rows_to_strings
from .arg_parser import ArgParser
from .runner import CommandRunner

logger = logging.getLogger(__name__)

REPORT_SCHEMA = 1

EXIT_CODES = {
    "success": 0,
    "failed": 1,
    "error": 2,
}


class CommandHandler:
    def __init__(self):
        self.parser = ArgParser()
        self.runner = CommandRunner()

    def execute(self, argv: Sequence[str]) -> Dict[str, Any]:
        """
        1. Parseamos la linea de comandos
        2. Construimos la configuracion
        3. Ejecutamos el comando correspondiente
        """
        try:
            parsed = self.parser.parse(argv)

            if "error" in parsed:
                return {
                    "status": "error",
                    "message": parsed["error"]
                }

            result = self.runner.execute(parsed)
            result["command"] = parsed["type"].lower()
            return result

        except Exception as e:
            logger.exception("Unexpected failure")
            return {
                "status": "error",
                "message": str(e)
            }


def build_report(result: Dict[str, Any]) -> Dict[str, Any]:
    """Versioned report with the configuration echoed first"""
    report: Dict[str, Any] = {"schema": REPORT_SCHEMA, "command": result.get("command")}
    config = result.get("config")
    report["config"] = config.to_dict() if config is not None else None
    report["status"] = result["status"]
    report.update(result.get("report", {}))
    return report


def render(result: Dict[str, Any], fmt: str) -> str:
    if fmt == "csv" and "table" in result:
        header, rows = result["table"]
        text = rows_to_strings(header, rows)
        if result.get("extra_table") and result["extra_table"][1]:
            extra_header, extra_rows = result["extra_table"]
            text += "\n" + rows_to_strings(extra_header, extra_rows)
        return text
    return dump_report(build_report(result))


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=log_level(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    argv = sys.argv[1:] if argv is None else argv

    result = CommandHandler().execute(argv)
    status = result.get("status", "error")
    if status == "error":
        logger.error(result.get("message", "unknown error"))
        print(f"error: {result.get('message')}")
        return EXIT_CODES["error"]

    config = result["config"]
    text = render(result, config.format)
    if config.report_path:
        with open(config.report_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        for line in result.get("summary", []):
            print(line)
        print(result.get("message", ""))
    else:
        sys.stdout.write(text)
        logger.info(result.get("message", ""))
    return EXIT_CODES.get(status, EXIT_CODES["error"])
