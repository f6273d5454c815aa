"""Analyze command: diameter graph statistics and bound comparisons."""
import logging
from pathlib import Path
from typing import Any, Dict

from ... import constants
from ...core import graph as graph_mod
from ...utils import file_utils, serialization
from ...utils.exceptions import SizeCapError
from .common import load_pointset, run_config, version, write_output

logger = logging.getLogger(__name__)


def analyze_command(args) -> None:
    """Report counts, chromatic number and bounds for a PointSet JSON file.

    Args:
        args: Command line arguments containing input, dimacs and output
    """
    cfg = run_config(args)
    ps = load_pointset(args.input)
    g = graph_mod.build(ps, cfg.epsilon)
    notes = []
    counts = graph_mod.clique_report(g).counts
    n, e = ps.n, g.edge_count

    result: Dict[str, Any] = {
        "version": version(),
        "config": cfg.to_dict(),
        "n": n,
        "dim": ps.dim,
        "sphere_radius": ps.sphere_radius,
        "diameter": g.diam,
        "counts": {str(k): v for k, v in sorted(counts.items())},
        "degree_sequence": graph_mod.degree_sequence(g),
    }
    try:
        result["chromatic_number"] = graph_mod.chromatic_number(g, cfg.chromatic_cap)
    except SizeCapError as err:
        result["chromatic_number"] = None
        notes.append(str(err))

    bounds: Dict[str, Any] = {}
    if ps.on_sphere and ps.dim == 4:
        ratio = ps.sphere_radius / g.diam
        bounds["edges <= 2n-2"] = {"value": e, "bound": 2 * n - 2, "ok": e <= 2 * n - 2,
                                   "applies": ratio > constants.THEOREM1_RADIUS, "radius_ratio": ratio}
    triangles = graph_mod.triangle_bound_check(g)
    bounds["triangles <= 4e/3 - 2n/3"] = {"value": triangles.triangles, "bound": triangles.bound,
                                          "effective_bound": triangles.effective_bound, "ok": triangles.ok}
    if ps.dim == 4:
        bounds["edges <= n^2/4 + n"] = {"value": e, "bound": n * n // 4 + n, "ok": e <= n * n // 4 + n}
        bounds["5-cliques <= 1"] = {"value": counts.get(5, 0), "bound": 1, "ok": counts.get(5, 0) <= 1}
        if n >= 5:
            bounds["4-cliques <= n"] = {"value": counts.get(4, 0), "bound": n, "ok": counts.get(4, 0) <= n}
    result["bounds"] = bounds
    if notes:
        result["notes"] = notes

    if args.dimacs:
        file_utils.write_file(Path(args.dimacs), serialization.write_dimacs(g, [version()]))
        logger.info("DIMACS export written to %s", args.dimacs)
    write_output(args, serialization.dumps(result))
