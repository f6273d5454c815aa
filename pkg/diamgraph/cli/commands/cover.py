"""Double cover command."""
from ...core import cover
from ...utils import serialization
from ...utils.exceptions import VerificationFailure
from .common import load_pointset, run_config, version, write_output


def cover_command(args) -> None:
    """Run the cover pipeline on a PointSet JSON file and write the DoubleCover JSON.

    A failed stage is raised as VerificationFailure once the file is written.

    Args:
        args: Command line arguments containing input and output
    """
    cfg = run_config(args)
    ps = load_pointset(args.input)
    result = cover.run_pipeline(ps, cfg.epsilon, cfg.hull_samples, cfg.odd_cycle_cap)
    status = {
        "kept": result.kept,
        "pole": result.pole,
        "lemma5_ok": None if result.lemma5 is None else result.lemma5.ok,
        "bipartite": result.bipartite,
        "edges_doubled": result.edges_doubled,
        "planar_ok": None if result.drawing is None else result.drawing.planar_ok,
        "crossings": [] if result.drawing is None else [list(c[:2]) for c in result.drawing.crossings],
        "ok": result.ok,
    }
    if result.cover is None:
        empty = {"n_base": len(result.kept), "vertices": [], "edges": [], "arcs": []}
        text = serialization.dumps({"version": version(), "config": cfg.to_dict(), **empty, **status})
    else:
        text = serialization.dump_double_cover(result.cover, cfg.to_dict(), version(), status)
    write_output(args, text)
    if not result.ok:
        raise VerificationFailure(f"Cover checks failed for {args.input}")
