import argparse
import re
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..utils.errors import UsageError

LETTER_NAMES = {"e": 0, "f": 1, "g": 2, "h": 3}
VACUUM_NAMES = {"", "omega", "Ω", "vacuum"}
TABLE_KINDS = ("pn", "moments", "estimate")

# Flags shared by every command, mapped to RunConfig fields
CONFIG_FLAGS = ("q", "dim", "max_level", "tol", "cut", "steps", "seed", "samples", "format", "report_path")


class QFockArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting"""

    def error(self, message: str):
        raise UsageError(message)

    def exit(self, status: int = 0, message: Optional[str] = None):
        if status:
            raise UsageError(message or f"exit status {status}")
        super().exit(status, message)


def parse_letter(token: str) -> int:
    token = token.strip().lower()
    if token in LETTER_NAMES:
        return LETTER_NAMES[token]
    match = re.fullmatch(r"e(\d)", token)
    if match:
        return int(match.group(1))
    raise UsageError(f"Unknown letter {token!r}; use e, f, g, h or e0..e9")


def parse_word(text: str, dim: Optional[int] = None) -> Tuple[int, ...]:
    """'e,f' -> (0, 1); 'omega' -> ()"""
    text = text.strip()
    if text.lower() in VACUUM_NAMES:
        return ()
    word = tuple(parse_letter(token) for token in text.split(","))
    if dim is not None and any(letter >= dim for letter in word):
        raise UsageError(f"Word {text!r} uses letters outside a {dim}-letter alphabet")
    return word


class ArgParser:
    def __init__(self):
        self.parser = self._build()

    def _build(self) -> QFockArgumentParser:
        common = QFockArgumentParser(add_help=False)
        common.add_argument("--q", type=float)
        common.add_argument("--dim", type=int)
        common.add_argument("--max-level", dest="max_level", type=int)
        common.add_argument("--tol", type=float)
        common.add_argument("--cut", type=int)
        common.add_argument("--steps", type=int)
        common.add_argument("--seed", type=int)
        common.add_argument("--samples", type=int)
        common.add_argument("--report", dest="report_path")
        common.add_argument("--format", choices=("json", "csv"))

        parser = QFockArgumentParser(prog="qfock", description="Truncated q-Fock space verification and experiments")
        commands = parser.add_subparsers(dest="command")

        commands.add_parser("verify", parents=[common], help="run the identity suite")

        factoriality = commands.add_parser("factoriality", parents=[common], help="decay experiment and key estimate")
        factoriality.add_argument("--z", default="f")
        factoriality.add_argument("--t", default="omega")

        table = commands.add_parser("table", parents=[common], help="emit a golden table")
        table.add_argument("kind", choices=TABLE_KINDS)
        table.add_argument("--level", type=int, default=2)
        table.add_argument("--k-min", dest="k_min", type=int, default=5)
        table.add_argument("--k-max", dest="k_max", type=int)
        return parser

    def parse(self, argv: Sequence[str]) -> Dict[str, Any]:
        """Entrada principal del parser"""
        try:
            args = self.parser.parse_args(list(argv))
        except UsageError as e:
            return {"error": f"Usage error: {e}"}
        if not args.command:
            return {"error": "Usage error: a command is required (verify, factoriality, table)"}

        values = vars(args)
        parsed: Dict[str, Any] = {
            "type": args.command.upper(),
            "config": {flag: values.get(flag) for flag in CONFIG_FLAGS},
        }
        extras: List[str] = [key for key in values if key not in CONFIG_FLAGS and key != "command"]
        for key in extras:
            parsed[key] = values[key]
        return parsed
