"""Simulated annealing search for point sets with many diameter cliques."""
import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares
from scipy.spatial.distance import pdist, squareform

from .. import constants
from ..core import graph as graph_mod
from ..core import lenz
from ..core.geometry import PointSet
from ..utils.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

SPACES = ("R4", "S3")
# Relative distance bands whose pairs are pulled to exactly one when polishing
POLISH_MARGINS = (0.02, 0.05, 0.1, 0.2, 1.0)


@dataclass(frozen=True)
class Schedule:
    """Geometric annealing schedule for step size and temperature."""
    steps: int = constants.DEFAULT_CONFIG["anneal_steps"]
    sigma_start: float = 0.1
    sigma_end: float = 1e-4
    temp_start: float = 1.0
    temp_end: float = 1e-3

    def __post_init__(self):
        if self.steps < 1:
            raise InvalidInputError(f"Schedule needs at least one step, got {self.steps}")
        if not 0 < self.sigma_end <= self.sigma_start:
            raise InvalidInputError("Schedule needs 0 < sigma_end <= sigma_start")
        if not 0 < self.temp_end <= self.temp_start:
            raise InvalidInputError("Schedule needs 0 < temp_end <= temp_start")

    def sigma(self, step: int) -> float:
        frac = step / max(1, self.steps - 1)
        return self.sigma_start * (self.sigma_end / self.sigma_start) ** frac

    def temperature(self, step: int) -> float:
        frac = step / max(1, self.steps - 1)
        return self.temp_start * (self.temp_end / self.temp_start) ** frac


@dataclass
class SearchState:
    """Best state of a search, rescaled to diameter 1."""
    points: PointSet
    clique_size: int
    count: int
    reference: Optional[int]
    bound: Optional[int]
    space: str
    seed: int
    schedule: Schedule
    steps_run: int

    @property
    def gap(self) -> Optional[int]:
        """Distance to the best known value (negative never happens for proven values)."""
        return None if self.reference is None else self.reference - self.count


def reference_value(n: int, l: int, space: str) -> Optional[int]:
    """Best known count for the objective."""
    if space == "S3":
        return 2 * n - 2 if l == 2 else None
    if n < 5:
        return None
    return {2: lenz.F2(n), 3: lenz.F3(n), 4: n, 5: 1}.get(l)


def proven_bound(n: int, l: int, space: str) -> Optional[int]:
    """Upper bound a genuine diameter graph can never exceed."""
    if space == "S3" and l == 2:
        return 2 * n - 2
    if l == 2:
        return n * n // 4 + n
    if l == 3:
        return (n * n + 2 * n) // 3
    if l == 4 and n >= 5:
        return n
    if l == 5:
        return 1
    return None


class _SoftObjective:
    """Clique count with pair weights ramping from 0 at 1 - width to 1 at distance 1.

    Only pairs with positive weight are walked, so the cost follows the number of
    near-cliques rather than every l-subset.
    """

    def __init__(self, n: int, l: int):
        self.n = n
        self.l = l

    def __call__(self, dists: np.ndarray, width: float) -> float:
        weights = squareform(np.clip(1 - (1 - dists) / width, 0.0, 1.0))
        active = weights > 0
        return self._extend(weights, active, [], np.arange(self.n), 1.0)

    def _extend(self, weights: np.ndarray, active: np.ndarray, chosen: List[int],
                candidates: np.ndarray, partial: float) -> float:
        if len(chosen) == self.l - 1:
            if not chosen:
                return float(len(candidates))
            return partial * float(np.prod(weights[np.ix_(chosen, candidates)], axis=0).sum())
        total = 0.0
        for k, v in enumerate(candidates):
            rest = candidates[k + 1:]
            rest = rest[active[v, rest]]
            if len(rest) < self.l - 1 - len(chosen):
                continue
            factor = float(np.prod(weights[chosen, v])) if chosen else 1.0
            total += self._extend(weights, active, chosen + [int(v)], rest, partial * factor)
        return total


def _project(points: np.ndarray, radius: Optional[float]) -> np.ndarray:
    if radius is None:
        return points
    return points * (radius / np.linalg.norm(points, axis=1))[:, None]


def _initial_points(n: int, space: str, radius: Optional[float], rng: np.random.Generator) -> np.ndarray:
    if space == "R4":
        return rng.normal(size=(n, 4))
    # A cap of angular radius arcsin(1/(2r)) has chordal diameter 1
    alpha = math.asin(min(1.0, 1 / (2 * radius)))
    tangent = rng.normal(size=(n, 3))
    tangent /= np.linalg.norm(tangent, axis=1)[:, None]
    theta = alpha * np.sqrt(rng.random(n))
    pts = np.zeros((n, 4))
    pts[:, :3] = tangent * np.sin(theta)[:, None]
    pts[:, 3] = np.cos(theta)
    return pts * radius


def _exact(points: np.ndarray, l: int, radius: Optional[float], eps: float) -> Tuple[PointSet, int]:
    """Rescale to diameter 1 and count exact l-cliques."""
    diam = float(pdist(points).max())
    sphere = None if radius is None else radius / diam
    ps = PointSet(4, points / diam, sphere)
    g = graph_mod.build(ps, eps)
    return ps, graph_mod.count_cliques(g, l)


def polish(points: np.ndarray, l: int, radius: Optional[float] = None,
           eps: float = constants.DEFAULT_EPSILON) -> Tuple[PointSet, int]:
    """Pull near-diameter pairs to exactly distance 1 with least squares.

    Each margin in POLISH_MARGINS selects the pairs within that relative band of
    the diameter; the best exact count over all attempts (and the unpolished
    state) wins. On a sphere every point is also held to the radius and
    attempts that push the diameter above 1 are discarded.
    """
    best_ps, best = _exact(points, l, radius, eps)
    n = len(points)
    rows, cols = np.triu_indices(n, k=1)
    for tau in POLISH_MARGINS:
        dists = pdist(points)
        target = np.flatnonzero(dists >= dists.max() * (1 - tau))
        ti, tj = rows[target], cols[target]

        def residuals(flat: np.ndarray) -> np.ndarray:
            p = flat.reshape(n, 4)
            res = np.linalg.norm(p[ti] - p[tj], axis=1) - 1.0
            if radius is not None:
                res = np.concatenate([res, np.linalg.norm(p, axis=1) - radius])
            return res

        x0 = (points / dists.max()).ravel() if radius is None else points.ravel()
        fit = least_squares(residuals, x0, xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=200)
        cand = _project(fit.x.reshape(n, 4), radius)
        if radius is not None and pdist(cand).max() > 1 + 1e-12:
            continue
        ps, count = _exact(cand, l, radius, eps)
        if count > best:
            best_ps, best = ps, count
    return best_ps, best


def anneal_search(n: int, l: int, space: str = "R4", schedule: Optional[Schedule] = None, seed: int = 0,
                  sphere_radius: Optional[float] = None, initial: Optional[PointSet] = None,
                  eps: float = constants.DEFAULT_EPSILON) -> SearchState:
    """Anneal a point set toward many l-cliques of diameters.

    Moves perturb one point by a Gaussian step whose size follows the schedule.
    In R^4 every accepted state is rescaled to diameter 1. On S^3_r states stay
    on the sphere and moves raising the diameter above 1 are rejected; the
    returned state is rescaled, so it lives on S^3_{r/D} with r/D >= r.

    Args:
        n: Number of points (5 <= n <= 64)
        l: Clique size (2, 3 or 4)
        space: "R4" or "S3"
        schedule: Annealing schedule
        seed: Seed for the random generator
        sphere_radius: Radius r for space "S3"
        initial: Optional starting point set with n points in R^4
        eps: Diameter tolerance for exact counts

    Returns:
        SearchState: Best exact-count state seen (updated only on strict improvement)

    Raises:
        InvalidInputError: On an invalid schedule, space, size or clique size
    """
    schedule = schedule or Schedule()
    if space not in SPACES:
        raise InvalidInputError(f"Unknown search space '{space}'; use one of {', '.join(SPACES)}")
    if not 5 <= n <= constants.SEARCH_CAP:
        raise InvalidInputError(f"Search needs 5 <= n <= {constants.SEARCH_CAP}, got {n}")
    if l not in (2, 3, 4):
        raise InvalidInputError(f"Clique size must be 2, 3 or 4, got {l}")
    radius = None
    if space == "S3":
        if sphere_radius is None or sphere_radius <= 0.5:
            raise InvalidInputError("Sphere search needs a radius r > 1/2")
        radius = float(sphere_radius)

    rng = np.random.default_rng(seed)
    if initial is not None:
        if initial.n != n or initial.dim != 4:
            raise InvalidInputError(f"Initial state must hold {n} points of R^4")
        points = np.array(initial.points, dtype=float)
        if radius is not None:
            points = _project(points, radius)
            points /= max(1.0, float(pdist(points).max()))
            points = _project(points, radius)
    else:
        points = _initial_points(n, space, radius, rng)
    if radius is None:
        points = points / pdist(points).max()

    objective = _SoftObjective(n, l)
    best_ps, best = _exact(points, l, radius, eps)
    dists = pdist(points)
    width = max(schedule.sigma_start, 10 * eps)
    current = objective(dists, width)
    for step in range(schedule.steps):
        sigma = schedule.sigma(step)
        width = max(sigma, 10 * eps)
        i = int(rng.integers(n))
        cand = points.copy()
        cand[i] += rng.normal(scale=sigma, size=4)
        cand = _project(cand, radius)
        cand_d = pdist(cand)
        diam = float(cand_d.max())
        if radius is None:
            cand /= diam
            cand_d /= diam
        elif diam > 1.0:
            continue
        current = objective(dists, width)
        score = objective(cand_d, width)
        delta = score - current
        if delta >= 0 or rng.random() < math.exp(delta / schedule.temperature(step)):
            points, dists, current = cand, cand_d, score
            if step % 50 == 0 or delta > 0:
                ps, count = _exact(points, l, radius, eps)
                if count > best:
                    best_ps, best = ps, count
                    logger.info("step %d: %d %d-cliques", step, count, l)

    ps, count = polish(points, l, radius, eps)
    if count > best:
        best_ps, best = ps, count
    return SearchState(best_ps, l, best, reference_value(n, l, space), proven_bound(n, l, space),
                       space, int(seed), schedule, schedule.steps)


def small_n_oracle(n: int, l: int, trials: int = 4, steps: int = 4000, seed: int = 0) -> int:
    """Best exact l-clique count over independent annealing runs with polishing.

    Raises:
        InvalidInputError: If n exceeds the oracle cap
    """
    if n > constants.ORACLE_CAP:
        raise InvalidInputError(f"The oracle is limited to n <= {constants.ORACLE_CAP}, got {n}")
    seeds = [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(seed).spawn(trials)]
    best = 0
    for trial_seed in seeds:
        state = anneal_search(n, l, "R4", Schedule(steps=steps), trial_seed)
        best = max(best, state.count)
    return best


def search_trials(n: int, l: int, trials: int, seed: int = 0, **kwargs) -> List[SearchState]:
    """Independent searches with seeds spawned from one master seed, best first."""
    seeds = [int(child.generate_state(1)[0]) for child in np.random.SeedSequence(seed).spawn(trials)]
    states = [anneal_search(n, l, seed=s, **kwargs) for s in seeds]
    return sorted(states, key=lambda s: -s.count)
