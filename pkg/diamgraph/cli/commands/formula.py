"""Formula table command."""
from ...core import lenz
from ...utils import serialization
from ...utils.exceptions import InvalidInputError
from .common import run_config, version, write_output

FORMULA_MAX_N = 10 ** 6


def formula_command(args) -> None:
    """Print n,t2,F2,F3,U4 for every n in [n_min, n_max].

    Args:
        args: Command line arguments containing n_min, n_max and output
    """
    if not 5 <= args.n_min <= FORMULA_MAX_N or not 5 <= args.n_max <= FORMULA_MAX_N:
        raise InvalidInputError(f"The n range must lie within [5, {FORMULA_MAX_N}]")
    cfg = run_config(args)
    rows = lenz.formula_table(args.n_min, args.n_max)
    write_output(args, serialization.csv_header(cfg.to_dict(), version()) + serialization.formula_csv(rows))
