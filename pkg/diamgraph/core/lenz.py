"""Extremal count formulas and Lenz configuration generators.

A Lenz configuration places points on two circles in orthogonal planes of R^4
with radii r1^2 + r2^2 = 1, so every pair taken across the circles is at
distance exactly 1.
"""
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from .. import constants
from ..utils.exceptions import InvalidInputError
from . import graph as graph_mod
from .geometry import PointSet


@dataclass(frozen=True)
class LenzConfig:
    """Point placement on C1 (plane x1x2, radius r1) and C2 (plane x3x4, radius r2)."""
    a: int
    r1: float
    r2: float
    angles1: Tuple[float, ...]
    angles2: Tuple[float, ...]

    def __post_init__(self):
        if len(self.angles1) != self.a:
            raise InvalidInputError(f"Expected {self.a} angles on C1, got {len(self.angles1)}")
        if abs(self.r1 ** 2 + self.r2 ** 2 - 1) > 1e-12:
            raise InvalidInputError(f"Radii must satisfy r1^2 + r2^2 = 1, got {self.r1!r}, {self.r2!r}")
        object.__setattr__(self, 'angles1', tuple(float(t) for t in self.angles1))
        object.__setattr__(self, 'angles2', tuple(float(t) for t in self.angles2))

    @property
    def n(self) -> int:
        return self.a + len(self.angles2)

    @property
    def b(self) -> int:
        return len(self.angles2)


@dataclass(frozen=True)
class FormulaRow:
    n: int
    t2: int
    F2: int
    F3: int
    U4: int


def _require_n(n: int, minimum: int = 5) -> None:
    if not isinstance(n, (int, np.integer)) or n < minimum:
        raise InvalidInputError(f"n must be an integer >= {minimum}, got {n}")


def t2(n: int) -> int:
    """Edges of the balanced complete bipartite graph on n vertices."""
    _require_n(n, 0)
    return (n // 2) * ((n + 1) // 2)


def F2(n: int) -> int:
    """Maximum number of diameters of an n-point set in R^4."""
    _require_n(n)
    base = t2(n) + (n + 1) // 2
    return base if n % 4 == 3 else base + 1


def F3(n: int) -> int:
    """Maximum number of diameter triangles of an n-point set in R^4 (large n)."""
    _require_n(n)
    if n % 2 == 0:
        return n * (n - 2) // 4 + n
    if n % 4 == 1:
        return (n - 1) ** 2 // 4 + n
    return (n - 1) ** 2 // 4 + n - 1


def U4_edges(n: int) -> int:
    """Maximum number of unit distances among n points of R^4."""
    _require_n(n)
    extra = n if n % 8 == 0 or n % 10 == 0 else n - 1
    return n * n // 4 + extra


def max_circle_diameters(k: int, radius: float) -> int:
    """Maximum number of unit chords among k points on a circle of the given radius,
    assuming the point set has diameter 1."""
    if k < 1:
        raise InvalidInputError(f"k must be positive, got {k}")
    if radius < 0.5 - 1e-12:
        return 0
    if abs(radius - 0.5) <= 1e-12:
        return k // 2
    if k == 1:
        return 0
    if radius > 1 / math.sqrt(3):
        return 1
    return k if k % 2 else k - 1


def lenz_triangles_formula(n: int, a: int) -> int:
    """Triangles of a Lenz configuration with an odd star of a points on C1 and one diameter on C2."""
    _require_n(n)
    if not 2 <= a <= n - 2:
        raise InvalidInputError(f"Split a must lie in [2, n-2], got a={a} for n={n}")
    return n + 2 * (n - a) * ((a - 1) // 2)


def diam1(a: int) -> int:
    """Diameters realizable by a points on the first circle."""
    return a if a % 2 else a - 1


def formula_table(n_lo: int, n_hi: int) -> List[FormulaRow]:
    return [FormulaRow(n, t2(n), F2(n), F3(n), U4_edges(n)) for n in range(n_lo, n_hi + 1)]


def star_radius(k: int) -> float:
    """Radius of the circle on which the odd k-star has unit longest chords."""
    return 1 / (2 * math.sin((k // 2) * math.pi / k))


def _part_on_c1(a: int) -> Tuple[float, Tuple[float, ...]]:
    """Odd star for odd a, the (a+1)-star minus one vertex for even a."""
    k = a if a % 2 else a + 1
    return star_radius(k), tuple(2 * math.pi * j / k for j in range(a))


def _one_chord_angles(m: int, r2: float) -> Tuple[float, ...]:
    """m points on a sub-arc of C2 with exactly one unit chord between the arc ends."""
    if m == 1:
        return (0.0,)
    phi = 2 * math.asin(1 / (2 * r2))
    return tuple(phi * j / (m - 1) for j in range(m))


def lenz_config(n: int, a: int) -> LenzConfig:
    """Lenz configuration with a points on C1 (star placement) and n - a on C2 (one diameter)."""
    if not 2 <= a <= n - 1:
        raise InvalidInputError(f"Split a must lie in [2, n-1], got a={a} for n={n}")
    r1, angles1 = _part_on_c1(a)
    r2 = math.sqrt(1 - r1 * r1)
    return LenzConfig(a, r1, r2, angles1, _one_chord_angles(n - a, r2))


def gen_edge_optimal(n: int) -> LenzConfig:
    """Lenz configuration with exactly F2(n) diameters."""
    _require_n(n)
    a = max(range(2, n - 1), key=lambda s: s * (n - s) + diam1(s) + 1)
    return lenz_config(n, a)


def gen_triangle_optimal(n: int) -> LenzConfig:
    """Lenz configuration maximizing the split triangle formula over odd a.

    Ties go to the larger a. For n >= 7 the triangle count is F3(n); at n = 5, 6
    only a = 3 fits and its unit triangle on C1 adds one more.
    """
    _require_n(n)
    odd_splits = range(3, n - 1, 2)
    a = max(reversed(odd_splits), key=lambda s: lenz_triangles_formula(n, s))
    return lenz_config(n, a)


def gen_clique4(n: int) -> LenzConfig:
    """Star of n-2 (n odd) or n-3 diameters on C1 times one diameter on C2."""
    _require_n(n)
    return lenz_config(n, n - 2)


def gen_schur_extremal(n: int) -> LenzConfig:
    """Unit triangle on C1 and n-3 points with one diameter on C2: exactly n 4-cliques."""
    _require_n(n)
    return lenz_config(n, 3)


def realize(config: LenzConfig) -> PointSet:
    """Embed a Lenz configuration as points of R^4."""
    pts = [(config.r1 * math.cos(t), config.r1 * math.sin(t), 0.0, 0.0) for t in config.angles1]
    pts += [(0.0, 0.0, config.r2 * math.cos(t), config.r2 * math.sin(t)) for t in config.angles2]
    return PointSet(4, np.array(pts))


def _circle_graph(radius: float, angles: Sequence[float], eps: float) -> graph_mod.DiameterGraph:
    edges = []
    for i in range(len(angles)):
        for j in range(i + 1, len(angles)):
            chord = 2 * radius * abs(math.sin((angles[i] - angles[j]) / 2))
            if chord >= 1 - eps:
                edges.append((i, j))
    return graph_mod.from_edges(len(angles), edges)


def circle_chord_margin(radius: float, angles: Sequence[float], eps: float = constants.DEFAULT_EPSILON) -> float:
    """Gap between 1 and the longest chord that is not a diameter (1.0 if none)."""
    longest = 0.0
    for i in range(len(angles)):
        for j in range(i + 1, len(angles)):
            chord = 2 * radius * abs(math.sin((angles[i] - angles[j]) / 2))
            if chord < 1 - eps:
                longest = max(longest, chord)
    return 1 - longest


def lenz_counts(config: LenzConfig, eps: float = constants.DEFAULT_EPSILON) -> Dict[int, int]:
    """Clique counts of the realized diameter graph predicted from the per-circle structure.

    Every cross pair is a diameter, so a clique is a clique on C1 joined to a
    clique on C2.
    """
    g1 = _circle_graph(config.r1, config.angles1, eps)
    g2 = _circle_graph(config.r2, config.angles2, eps)
    per1 = {0: 1, 1: config.a, **{k: graph_mod.count_cliques(g1, k) for k in range(2, 6)}}
    per2 = {0: 1, 1: config.b, **{k: graph_mod.count_cliques(g2, k) for k in range(2, 6)}}
    return {l: sum(per1[k] * per2[l - k] for k in range(l + 1)) for l in range(2, 6)}
