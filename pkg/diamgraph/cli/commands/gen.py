"""Point set generator command."""
import numpy as np

from ...core import lenz
from ...services import extremal, sweeps
from ...utils import serialization
from ...utils.exceptions import InvalidInputError
from .common import run_config, version, write_output

LENZ_KINDS = {
    'lenz-edges': lenz.gen_edge_optimal,
    'lenz-triangles': lenz.gen_triangle_optimal,
    'lenz-4cliques': lenz.gen_clique4,
    'lenz-schur': lenz.gen_schur_extremal,
}
GEN_KINDS = list(LENZ_KINDS) + ['simplex', 'kmm', 'random-sphere']


def _require(args, name: str, kind: str):
    value = getattr(args, name, None)
    if value is None:
        raise InvalidInputError(f"'gen {kind}' needs --{name}")
    return value


def gen_command(args) -> None:
    """Generate a point set and write its PointSet JSON.

    Args:
        args: Command line arguments containing kind and its parameters
    """
    cfg = run_config(args)
    config = None
    if args.kind in LENZ_KINDS:
        config = LENZ_KINDS[args.kind](_require(args, 'n', args.kind))
        ps = lenz.realize(config)
    elif args.kind == 'simplex':
        ps = extremal.counterexample_borsuk_sqrt25()
    elif args.kind == 'kmm':
        ps = extremal.counterexample_vazsonyi_sqrt2(_require(args, 'm', args.kind))
    elif args.kind == 'random-sphere':
        n = _require(args, 'n', args.kind)
        r = _require(args, 'r', args.kind)
        ps = sweeps.random_sphere_instance(n, r, np.random.default_rng(cfg.seed))
    else:
        raise InvalidInputError(f"Unknown generator '{args.kind}'; use one of {', '.join(GEN_KINDS)}")
    write_output(args, serialization.dump_pointset(ps, config, cfg.to_dict(), version()))
