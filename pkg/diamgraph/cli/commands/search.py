"""Annealing search command."""
from typing import Any, Dict

from ...services import search
from ...utils import serialization
from .common import load_pointset, run_config, version, write_output


def search_command(args) -> None:
    """Anneal toward many l-cliques and write the best state.

    Args:
        args: Command line arguments containing n, l, space, r, steps, trials and initial
    """
    cfg = run_config(args)
    initial = load_pointset(args.initial) if args.initial else None
    schedule = search.Schedule(steps=cfg.anneal_steps)
    states = search.search_trials(args.n, args.l, args.trials, cfg.seed, space=args.space, schedule=schedule,
                                  sphere_radius=args.r, initial=initial, eps=cfg.epsilon)
    best = states[0]
    result: Dict[str, Any] = {
        "version": version(),
        "config": cfg.to_dict(),
        "search": {
            "n": args.n,
            "clique_size": best.clique_size,
            "space": best.space,
            "count": best.count,
            "reference": best.reference,
            "bound": best.bound,
            "gap": best.gap,
            "seed": best.seed,
            "steps": best.steps_run,
            "trial_counts": [s.count for s in states],
        },
        **serialization.pointset_to_dict(best.points),
    }
    write_output(args, serialization.dumps(result))
