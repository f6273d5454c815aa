"""Command-line interface for diamgraph."""
import argparse
import logging
import sys
from typing import List, Optional

from .. import constants
from ..core.version import get_version
from ..utils.exceptions import (
    ConfigValidationError,
    DiamgraphError,
    InvalidInputError,
    TheoremPreconditionError,
)
from .commands import analyze as analyze_commands
from .commands import config as config_commands
from .commands import cover as cover_commands
from .commands import formula as formula_commands
from .commands import gen as gen_commands
from .commands import search as search_commands
from .commands import verify as verify_commands


def _common_parser() -> argparse.ArgumentParser:
    """Flags shared by every computing subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--epsilon', type=float, help='Relative diameter tolerance (default from config, 1e-9)')
    common.add_argument('--seed', type=int, help='Master random seed (default from config, 0)')
    common.add_argument('--threads', type=int,
                        help=f'Sweep worker threads (overrides {constants.THREADS_ENV_VAR})')
    common.add_argument('-o', '--output', help='Write the result to this file instead of stdout')
    return common


def create_parser() -> argparse.ArgumentParser:
    """Create the command-line argument parser."""
    parser = argparse.ArgumentParser(prog="diamgraph",
                                     description="Diameter graphs in R^4 and on 3-spheres: formulas, constructions, verification")
    parser.add_argument('-V', '--version', action='version', version=f'diamgraph {get_version()}')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log progress to stderr')
    subparsers = parser.add_subparsers(dest='command', required=False)
    common = _common_parser()

    # Formula command
    formula_parser = subparsers.add_parser('formula', parents=[common], help='Tabulate t2, F2, F3 and U4')
    formula_parser.add_argument('--n-min', type=int, default=5, help='First n (>= 5)')
    formula_parser.add_argument('--n-max', type=int, default=12, help='Last n (<= 10^6)')
    formula_parser.set_defaults(func=formula_commands.formula_command)

    # Generator command
    gen_parser = subparsers.add_parser('gen', parents=[common], help='Generate a point set')
    gen_parser.add_argument('kind', choices=gen_commands.GEN_KINDS, help='Construction to generate')
    gen_parser.add_argument('--n', type=int, help='Number of points (lenz-* and random-sphere)')
    gen_parser.add_argument('--m', type=int, help='Part size (kmm)')
    gen_parser.add_argument('--r', type=float, help='Sphere radius (random-sphere)')
    gen_parser.set_defaults(func=gen_commands.gen_command)

    # Analyze command
    analyze_parser = subparsers.add_parser('analyze', parents=[common], help='Analyze a point set file')
    analyze_parser.add_argument('--input', required=True, help='PointSet JSON file')
    analyze_parser.add_argument('--dimacs', help='Also export the diameter graph in DIMACS format')
    analyze_parser.set_defaults(func=analyze_commands.analyze_command)

    # Verify command
    verify_parser = subparsers.add_parser('verify', parents=[common], help='Run a verification suite')
    verify_parser.add_argument('suite', choices=verify_commands.SUITES, help='Suite to run')
    verify_parser.add_argument('--input', help='Verify one PointSet JSON file instead of a random sweep')
    verify_parser.add_argument('--trials', type=int, default=100, help='Instances per radius (default: 100)')
    verify_parser.add_argument('--n-max', type=int, default=12, help='Largest random instance (default: 12)')
    verify_parser.add_argument('--r', type=float, nargs='+',
                               help='Sphere radii to sweep (default: 0.72 0.8 1.0 2.0)')
    verify_parser.add_argument('--n', type=int, help='Vertex count for the kst suite (default: 52)')
    verify_parser.add_argument('--s', type=int, default=7, help='Part size s of K_{s,3} (default: 7)')
    verify_parser.add_argument('--anneal-steps', type=int, help='Anneal Schur sweep instances for this many steps')
    verify_parser.add_argument('--format', choices=['json', 'csv'], default='json', help='Report format')
    verify_parser.set_defaults(func=verify_commands.verify_command)

    # Search command
    search_parser = subparsers.add_parser('search', parents=[common], help='Anneal for many diameter cliques')
    search_parser.add_argument('--n', type=int, required=True, help='Number of points')
    search_parser.add_argument('--l', type=int, required=True, choices=[2, 3, 4], help='Clique size')
    search_parser.add_argument('--space', choices=['R4', 'S3'], default='R4', help='Search space')
    search_parser.add_argument('--r', type=float, help='Sphere radius for --space S3')
    search_parser.add_argument('--steps', type=int, help='Annealing steps (default from config)')
    search_parser.add_argument('--trials', type=int, default=1, help='Independent chains')
    search_parser.add_argument('--initial', help='Start from this PointSet JSON file')
    search_parser.set_defaults(func=search_commands.search_command)

    # Cover command
    cover_parser = subparsers.add_parser('cover', parents=[common], help='Build the double cover drawing')
    cover_parser.add_argument('--input', required=True, help='PointSet JSON file on S^3_r')
    cover_parser.add_argument('--samples', type=int, help='Hull boundary samples per vertex')
    cover_parser.set_defaults(func=cover_commands.cover_command)

    # Config commands
    config_parser = subparsers.add_parser('config', help='Global configuration',
                                          description="Global keys: " + ", ".join(constants.DEFAULT_CONFIG.keys()))
    config_subparsers = config_parser.add_subparsers(dest='config_command')
    config_show = config_subparsers.add_parser('show', help='Print the global config')
    config_show.set_defaults(func=config_commands.print_config_command)
    config_set = config_subparsers.add_parser('set', help='Set global config keys')
    config_set.add_argument('pairs', nargs='+', help='KEY=VALUE pairs')
    config_set.set_defaults(func=config_commands.handle_set_command)

    return parser

def exit_code_for(error: Exception) -> int:
    """Map an exception to the stable exit code contract."""
    if isinstance(error, (InvalidInputError, ConfigValidationError)):
        return constants.EXIT_USAGE
    if isinstance(error, TheoremPreconditionError):
        return constants.EXIT_PRECONDITION
    return constants.EXIT_FAILURE

def main(args: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI.

    Args:
        args: Command line arguments, if None uses sys.argv[1:]

    Returns:
        int: Exit code (0 ok, 1 failure, 2 usage or input error, 3 precondition violation)
    """
    if args is None:
        args = sys.argv[1:]

    parser = create_parser()
    parsed_args = parser.parse_args(args)
    if parsed_args.verbose:
        logging.basicConfig(level=logging.INFO, format='%(levelname)s %(name)s: %(message)s')

    try:
        if hasattr(parsed_args, 'func'):
            parsed_args.func(parsed_args)
            return constants.EXIT_OK
        parser.print_help()
        return constants.EXIT_USAGE
    except DiamgraphError as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return constants.EXIT_FAILURE

if __name__ == '__main__':
    sys.exit(main())
