"""Canonical text formats: PointSet JSON, graph JSON, DIMACS, reports and CSV tables.

Floats are written with 17 significant digits and keys in a fixed order, so
identical inputs give byte-identical files.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..core import graph as graph_mod
from ..core.cover import DoubleCover
from ..core.geometry import PointSet
from ..core.lenz import FormulaRow, LenzConfig
from .exceptions import InvalidInputError


def format_float(x: float) -> str:
    text = format(float(x), '.17g')
    if 'e' not in text and '.' not in text and 'n' not in text:
        text += '.0'
    return text


def _encode(obj: Any, indent: int = 0) -> str:
    pad = '  ' * indent
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, Fraction):
        return json.dumps(str(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = [f'{pad}  {json.dumps(str(k))}: {_encode(v, indent + 1)}' for k, v in obj.items()]
        return '{\n' + ',\n'.join(items) + f'\n{pad}}}'
    if isinstance(obj, (list, tuple)):
        # Rows of scalars stay on one line
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return '[' + ', '.join(_encode(v) for v in obj) + ']'
        items = [f'{pad}  {_encode(v, indent + 1)}' for v in obj]
        return '[\n' + ',\n'.join(items) + f'\n{pad}]'
    raise TypeError(f"Cannot serialize {type(obj).__name__}")


def dumps(obj: Dict[str, Any]) -> str:
    """Canonical JSON text with a trailing newline."""
    return _encode(obj) + '\n'


def _header(config: Optional[Dict[str, Any]], version: Optional[str]) -> Dict[str, Any]:
    header: Dict[str, Any] = {}
    if version is not None:
        header["version"] = version
    if config is not None:
        header["config"] = config
    return header


def pointset_to_dict(ps: PointSet, lenz: Optional[LenzConfig] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {"dim": ps.dim, "sphere_radius": ps.sphere_radius, "points": ps.points}
    if lenz is not None:
        data["lenz"] = {"a": lenz.a, "r1": lenz.r1, "r2": lenz.r2}
    return data


def dump_pointset(ps: PointSet, lenz: Optional[LenzConfig] = None,
                  config: Optional[Dict[str, Any]] = None, version: Optional[str] = None) -> str:
    return dumps({**_header(config, version), **pointset_to_dict(ps, lenz)})


def load_pointset(text: str) -> PointSet:
    """Parse PointSet JSON; extra keys such as headers are ignored.

    Raises:
        InvalidInputError: On malformed JSON or point data
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Malformed PointSet JSON: {e}")
    if not isinstance(data, dict) or "dim" not in data or "points" not in data:
        raise InvalidInputError("PointSet JSON needs 'dim' and 'points'")
    try:
        dim = int(data["dim"])
        points = np.array(data["points"], dtype=float)
        radius = data.get("sphere_radius")
        radius = None if radius is None else float(radius)
    except (TypeError, ValueError) as e:
        raise InvalidInputError(f"Malformed point data: {e}")
    if dim < 2:
        raise InvalidInputError(f"Dimension must be an integer >= 2, got {dim}")
    if points.size == 0:
        points = points.reshape(0, dim)
    if points.ndim != 2 or points.shape[1] != dim:
        raise InvalidInputError(f"Every point must be a list of exactly {dim} coordinates")
    return PointSet(dim, points, radius)


def graph_to_dict(g: graph_mod.DiameterGraph) -> Dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def dump_graph(g: graph_mod.DiameterGraph) -> str:
    return dumps(graph_to_dict(g))


def write_dimacs(g: graph_mod.DiameterGraph, comments: Sequence[str] = ()) -> str:
    """DIMACS edge format with 1-indexed vertices."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.edge_count}")
    lines.extend(f"e {i + 1} {j + 1}" for i, j in g.edges())
    return '\n'.join(lines) + '\n'


def read_dimacs(text: str) -> graph_mod.DiameterGraph:
    """Parse DIMACS edge format into an abstract graph.

    Raises:
        InvalidInputError: On a missing header, a bad line or an edge count mismatch
    """
    n: Optional[int] = None
    declared = 0
    edges: List[Tuple[int, int]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        try:
            if fields[0] == 'p':
                if len(fields) != 4 or fields[1] not in ('edge', 'col'):
                    raise ValueError("expected 'p edge n m'")
                n, declared = int(fields[2]), int(fields[3])
            elif fields[0] == 'e':
                if n is None:
                    raise ValueError("edge before the problem line")
                edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
            else:
                raise ValueError(f"unknown line type '{fields[0]}'")
        except (ValueError, IndexError) as e:
            raise InvalidInputError(f"DIMACS line {lineno}: {e}")
    if n is None:
        raise InvalidInputError("DIMACS input has no problem line")
    g = graph_mod.from_edges(n, edges)
    if g.edge_count != declared:
        raise InvalidInputError(f"DIMACS header declares {declared} edges, found {g.edge_count}")
    return g


def formula_csv(rows: Iterable[FormulaRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(["n", "t2", "F2", "F3", "U4"])
    for row in rows:
        writer.writerow([row.n, row.t2, row.F2, row.F3, row.U4])
    return out.getvalue()


def report_to_dict(report) -> Dict[str, Any]:
    """Report JSON object for a TheoremReport."""
    data: Dict[str, Any] = {
        "theorem": report.theorem,
        "claims": [{"name": c.name, "pass": c.passed, "witness": c.witness} for c in report.claims],
        "instance": report.instance,
    }
    if not report.hypothesis_ok:
        data["hypothesis_ok"] = False
    if report.notes:
        data["notes"] = report.notes
    return data


def dump_reports(reports: Sequence, summary: Optional[Dict[str, Any]] = None,
                 config: Optional[Dict[str, Any]] = None, version: Optional[str] = None) -> str:
    data = _header(config, version)
    if summary is not None:
        data["summary"] = summary
    data["reports"] = [report_to_dict(r) for r in reports]
    return dumps(data)


def csv_header(config: Optional[Dict[str, Any]], version: Optional[str]) -> str:
    """`#` comment lines carrying the tool version and resolved config."""
    lines = []
    if version is not None:
        lines.append(f"# {version}")
    if config is not None:
        lines.append(f"# config {json.dumps(config, sort_keys=True)}")
    return ''.join(line + '\n' for line in lines)


def sweep_csv(reports: Sequence, config: Optional[Dict[str, Any]] = None, version: Optional[str] = None) -> str:
    """One row per instance: index, seed, n, r, hypothesis flag and one column per claim."""
    names: List[str] = []
    for report in reports:
        for claim in report.claims:
            if claim.name not in names:
                names.append(claim.name)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(["index", "seed", "n", "r", "hypothesis_ok"] + names)
    for report in reports:
        inst = report.instance
        passed = {c.name: c.passed for c in report.claims}
        r = inst.get("r")
        writer.writerow([inst.get("index", ""), inst.get("seed", ""), inst.get("n", ""),
                         "" if r is None else format_float(r), report.hypothesis_ok]
                        + ["" if passed.get(name) is None else passed[name] for name in names])
    return csv_header(config, version) + out.getvalue()


def double_cover_to_dict(dc: DoubleCover) -> Dict[str, Any]:
    return {
        "n_base": dc.base_n,
        "vertices": dc.vertices,
        "edges": [list(e) for e in dc.edges],
        "arcs": [[arc.start, arc.end] for arc in dc.arcs],
    }


def dump_double_cover(dc: DoubleCover, config: Optional[Dict[str, Any]] = None,
                      version: Optional[str] = None, extra: Optional[Dict[str, Any]] = None) -> str:
    return dumps({**_header(config, version), **double_cover_to_dict(dc), **(extra or {})})
