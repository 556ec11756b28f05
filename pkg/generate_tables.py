import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from qfock.engine.arg_parser import ArgParser
from qfock.engine.config import create_config
from qfock.commands.table import TableCommand
from qfock.engine.handler import render


# Ensure output directory exists
os.makedirs('tables', exist_ok=True)

parser = ArgParser()

# Golden tables: P_2 on two letters, moments and the key estimate at q = 1/2
queries = {
    'pn_n2_d2.json': ['table', 'pn', '--level', '2', '--dim', '2', '--q', '0.5'],
    'moments_q0.5.csv': ['table', 'moments', '--q', '0.5', '--format', 'csv'],
    'estimate_q0.5.csv': ['table', 'estimate', '--q', '0.5', '--format', 'csv'],
}

for filename, argv in queries.items():
    parsed = parser.parse(argv)
    print(f'Parsed command: {parsed}')
    config = create_config(parsed['config'])
    result = TableCommand(config).execute(parsed)
    result['config'] = config
    result['command'] = 'table'
    print(f"Result: {result['status']} - {result['message']}")
    with open(os.path.join('tables', filename), 'w', encoding='utf-8', newline='') as handle:
        handle.write(render(result, config.format))
