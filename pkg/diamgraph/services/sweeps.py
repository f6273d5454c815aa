"""Seeded random unit-diameter instances and parallel verification sweeps."""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from scipy.linalg import null_space

from .. import constants
from ..core import graph as graph_mod
from ..core.geometry import PointSet
from ..utils.exceptions import DiamgraphError, InvalidInputError
from . import extremal, search

logger = logging.getLogger(__name__)

T = TypeVar("T")

# Non-planted pairs must stay this far below the diameter
PLANT_MARGIN = 1e-6
MAX_ATTEMPTS = 200
MAX_RESTARTS = 50


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def sample_in_cap(rng: np.random.Generator, pole: np.ndarray, alpha: float) -> np.ndarray:
    """Unit vector within angle alpha of the pole, uniform in angle and direction."""
    pole = _unit(np.asarray(pole, dtype=float))
    tangent = null_space(pole[None, :]) @ rng.normal(size=len(pole) - 1)
    theta = alpha * rng.random()
    return math.cos(theta) * pole + math.sin(theta) * _unit(tangent)


def _toward(rng: np.random.Generator, base: np.ndarray, target: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Unit direction in span(basis) leaning from base toward target."""
    coords = basis.T @ (target - base)
    norm = np.linalg.norm(coords)
    lean = coords / norm if norm > 1e-12 else np.zeros_like(coords)
    return _unit(basis @ (lean + rng.normal(scale=0.7, size=len(coords))))


def _sphere_plant(rng, units: np.ndarray, anchors: Sequence[int], cos_gamma: float) -> Optional[np.ndarray]:
    """Unit vector at angle gamma from every anchor, or None if no such point exists."""
    center = _unit(units.sum(axis=0))
    if len(anchors) == 1:
        u = units[anchors[0]]
        direction = _toward(rng, u, center, null_space(u[None, :]))
        return cos_gamma * u + math.sqrt(max(0.0, 1 - cos_gamma ** 2)) * direction
    u, w = units[anchors[0]], units[anchors[1]]
    lam = cos_gamma / (1 + float(u @ w))
    rest = 1 - 2 * lam * lam * (1 + float(u @ w))
    if rest < 0:
        return None
    basis = null_space(np.vstack([u, w]))
    direction = _toward(rng, lam * (u + w), center, basis)
    return lam * (u + w) + math.sqrt(rest) * direction


def _accept(points: np.ndarray, x: np.ndarray, anchors: Sequence[int]) -> bool:
    dists = np.linalg.norm(points - x, axis=1)
    others = np.delete(dists, list(anchors))
    return bool(np.all(others < 1 - PLANT_MARGIN))


def random_sphere_instance(n: int, r: float, rng: np.random.Generator, dim: int = 4) -> PointSet:
    """Unit-diameter set of n points on the sphere of radius r in R^dim with planted diameters.

    Every new point is placed at distance exactly 1 from one or two existing
    points (or freely inside the set's cap) and kept only if all its other
    distances stay below 1 - PLANT_MARGIN.

    Raises:
        InvalidInputError: If n < 2 or r <= 1/2
        DiamgraphError: If no instance is found after repeated restarts
    """
    if n < 2:
        raise InvalidInputError(f"An instance needs at least 2 points, got {n}")
    if r <= 0.5:
        raise InvalidInputError(f"A unit diameter needs r > 1/2, got {r}")
    cos_gamma = 1 - 1 / (2 * r * r)
    alpha = math.asin(1 / (2 * r))
    for _ in range(MAX_RESTARTS):
        units = [sample_in_cap(rng, np.eye(dim)[-1], math.pi)]
        first = _sphere_plant(rng, np.array(units), [0], cos_gamma)
        units.append(first)
        while len(units) < n:
            current = np.array(units)
            placed = False
            for _ in range(MAX_ATTEMPTS):
                mode = rng.choice(3, p=(0.45, 0.35, 0.2))
                if mode == 2:
                    anchors: List[int] = []
                    x = sample_in_cap(rng, current.sum(axis=0), alpha)
                else:
                    anchors = sorted(rng.choice(len(current), size=mode + 1, replace=False).tolist())
                    x = _sphere_plant(rng, current, anchors, cos_gamma)
                    if x is None:
                        continue
                if _accept(current * r, x * r, anchors):
                    units.append(x)
                    placed = True
                    break
            if not placed:
                break
        if len(units) == n:
            pts = np.array(units)
            pts /= np.linalg.norm(pts, axis=1)[:, None]
            return PointSet(dim, pts * r, r)
        logger.debug("Restarting sphere instance after %d points", len(units))
    raise DiamgraphError(f"No unit-diameter instance with n={n} on radius {r} after {MAX_RESTARTS} restarts")


def _euclidean_plant(rng, points: np.ndarray, anchors: Sequence[int]) -> Optional[np.ndarray]:
    """Point of R^d at distance 1 from every anchor, or None if the anchors are too spread."""
    support = points[list(anchors)]
    base = support[0]
    A = support[1:] - base
    if len(A):
        lam = np.linalg.lstsq(A @ A.T, 0.5 * np.einsum('ij,ij->i', A, A), rcond=None)[0]
        center = base + A.T @ lam
        basis = null_space(A)
    else:
        center = base
        basis = np.eye(points.shape[1])
    rest = 1 - float(np.sum((center - base) ** 2))
    if rest <= 0 or basis.shape[1] == 0:
        return None
    direction = _toward(rng, center, points.mean(axis=0), basis)
    return center + math.sqrt(rest) * direction


def random_r4_instance(n: int, rng: np.random.Generator) -> PointSet:
    """Unit-diameter set of n points in R^4, each new point planted at distance 1 from 1 to 3 others."""
    if n < 2:
        raise InvalidInputError(f"An instance needs at least 2 points, got {n}")
    for _ in range(MAX_RESTARTS):
        pts = [np.zeros(4), _unit(rng.normal(size=4))]
        while len(pts) < n:
            current = np.array(pts)
            placed = False
            for _ in range(MAX_ATTEMPTS):
                k = int(rng.integers(1, min(3, len(current)) + 1))
                anchors = sorted(rng.choice(len(current), size=k, replace=False).tolist())
                x = _euclidean_plant(rng, current, anchors)
                if x is not None and _accept(current, x, anchors):
                    pts.append(x)
                    placed = True
                    break
            if not placed:
                break
        if len(pts) == n:
            return PointSet(4, np.array(pts))
        logger.debug("Restarting R^4 instance after %d points", len(pts))
    raise DiamgraphError(f"No unit-diameter instance with n={n} in R^4 after {MAX_RESTARTS} restarts")


def run_sweep(fn: Callable[[int, np.random.Generator], T], count: int, seed: int = 0,
              threads: Optional[int] = None) -> List[T]:
    """Run fn(index, rng) for every instance index on a thread pool.

    Each instance owns a generator spawned from the master seed, so results do
    not depend on the thread count; they are returned in index order.
    """
    if count < 0:
        raise InvalidInputError(f"Instance count must be non-negative, got {count}")
    children = np.random.SeedSequence(seed).spawn(count)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(fn, i, np.random.default_rng(child)) for i, child in enumerate(children)]
        results = []
        for i, future in enumerate(futures):
            results.append(future.result())
            if (i + 1) % 100 == 0:
                logger.info("Sweep progress: %d/%d", i + 1, count)
    return results


def theorem1_sweep(count: int, r: float, n_max: int = 12, seed: int = 0, threads: Optional[int] = None,
                   eps: float = constants.DEFAULT_EPSILON, n_min: int = 3) -> List[extremal.TheoremReport]:
    """verify_theorem1 over random unit-diameter sets on S^3_r with n in [n_min, n_max]."""
    def one(i: int, rng: np.random.Generator) -> extremal.TheoremReport:
        n = int(rng.integers(n_min, n_max + 1))
        ps = random_sphere_instance(n, r, rng)
        report = extremal.verify_theorem1(ps, eps)
        report.instance.update(index=i, seed=seed)
        report.claims.extend(extremal.verify_lemma8(graph_mod.build(ps, eps)).claims)
        return report

    return run_sweep(one, count, seed, threads)


def lemma3_sweep(count: int, r: float, n_max: int = 12, seed: int = 0, threads: Optional[int] = None,
                 eps: float = constants.DEFAULT_EPSILON) -> List[extremal.TheoremReport]:
    """Diameter-arc intersection over random unit-diameter sets on S^2_r."""
    def one(i: int, rng: np.random.Generator) -> extremal.TheoremReport:
        ps = random_sphere_instance(int(rng.integers(3, n_max + 1)), r, rng, dim=3)
        report = extremal.verify_lemma3(ps, eps)
        report.instance.update(index=i, seed=seed)
        return report

    return run_sweep(one, count, seed, threads)


def schur_sweep(count: int, n_max: int = 10, seed: int = 0, threads: Optional[int] = None,
                anneal_steps: int = 0, eps: float = constants.DEFAULT_EPSILON) -> List[extremal.TheoremReport]:
    """4-clique, 5-clique and triangle bounds over random (optionally annealed) sets in R^4."""
    def one(i: int, rng: np.random.Generator) -> extremal.TheoremReport:
        n = int(rng.integers(5, n_max + 1))
        ps = random_r4_instance(n, rng)
        if anneal_steps:
            state = search.anneal_search(n, 4, "R4", search.Schedule(steps=anneal_steps),
                                         int(rng.integers(2 ** 32)), initial=ps, eps=eps)
            ps = state.points
        report = extremal.verify_schur(ps, eps)
        report.claims.extend(extremal.verify_d5_cliques(ps, eps).claims)
        report.claims.extend(extremal.verify_lemma8(graph_mod.build(ps, eps)).claims)
        report.instance.update(index=i, seed=seed, anneal_steps=anneal_steps)
        return report

    return run_sweep(one, count, seed, threads)


def cover_sweep(count: int, r: float, n_max: int = 12, seed: int = 0, threads: Optional[int] = None,
                eps: float = constants.DEFAULT_EPSILON,
                samples: int = constants.HULL_SAMPLES) -> List[extremal.TheoremReport]:
    """Double-cover pipeline over random unit-diameter sets on S^3_r."""
    def one(i: int, rng: np.random.Generator) -> extremal.TheoremReport:
        ps = random_sphere_instance(int(rng.integers(3, n_max + 1)), r, rng)
        report = extremal.verify_cover(ps, eps, samples)
        report.instance.update(index=i, seed=seed)
        return report

    return run_sweep(one, count, seed, threads)
