from .config import RunConfig, create_config
from .arg_parser import ArgParser, parse_letter, parse_word

# runner and handler import the commands package, which imports this one;
# use qfock.engine.handler.main as the entry point.
__all__ = [
    'RunConfig',
    'create_config',
    'ArgParser',
    'parse_letter',
    'parse_word',
]
