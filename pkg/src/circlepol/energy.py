"""Pairwise inverse-power energy on the circle and the energy route to
polarization.

For equally spaced points the double sum collapses to a single sum over
chord lengths, and the polarization of n equally spaced points equals the
difference of per-point energies at 2n and n points — an exact identity
that gives an O(n) cross-check of the arc-search machinery.
"""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from .circle_config import TWO_PI, Configuration, config_from_gaps
from .optimizer import OptimizeOptions, nelder_mead, project_gaps

__all__ = [
    "energy_equally_spaced",
    "polarization_via_energy",
    "config_energy",
    "energy_numeric_min",
]


def energy_equally_spaced(s: float, n: int) -> float:
    """Pairwise energy sum_{j != k} |z_j - z_k|**(-s) for n equally spaced points.

    Equals n * sum_{k=1}^{n-1} (2 sin(pi k / n))**(-s).
    """
    if n < 2:
        raise ValueError("energy needs n >= 2 (no pairs otherwise)")
    if s <= 0.0:
        raise ValueError(f"need s > 0, got {s!r}")
    k = np.arange(1, n)
    return float(n * np.sum((2.0 * np.sin(np.pi * k / n)) ** (-s)))


def polarization_via_energy(s: float, n: int) -> float:
    """Polarization of n equally spaced points from the energy identity.

    Equals (per-point energy of 2n points) - (per-point energy of n points),
    with the n = 1 term taken as 0 (a single point has no pairs).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n!r}")
    doubled = energy_equally_spaced(s, 2 * n) / (2 * n)
    single = 0.0 if n == 1 else energy_equally_spaced(s, n) / n
    return doubled - single


def config_energy(s: float, config: Configuration) -> float:
    """Pairwise energy of an arbitrary configuration; +inf on coincident points."""
    if s <= 0.0:
        raise ValueError(f"need s > 0, got {s!r}")
    if config.n < 2:
        raise ValueError("energy needs at least two points")
    theta = config.angle_array
    i, j = np.triu_indices(config.n, k=1)
    chords = 2.0 * np.abs(np.sin((theta[i] - theta[j]) / 2.0))
    with np.errstate(divide="ignore"):
        terms = chords ** (-s)
    return float(2.0 * terms.sum())


def energy_numeric_min(
    s: float,
    n: int,
    opts: Optional[OptimizeOptions] = None,
) -> Tuple[Configuration, float]:
    """Minimize the pairwise energy by direct search over gap vectors.

    Small-n sanity check that equally spaced points minimize the energy;
    first point pinned at angle 0.  Returns the best configuration found
    and its energy.
    """
    if not 2 <= n <= 12:
        raise ValueError(f"supported range is 2 <= n <= 12, got {n!r}")
    opts = opts or OptimizeOptions()
    rng = np.random.default_rng(opts.seed)
    equal = np.full(n, TWO_PI / n)

    def objective(x: np.ndarray) -> float:
        return config_energy(s, config_from_gaps(project_gaps(x)))

    best_gaps = None
    best_value = np.inf
    for r in range(opts.restarts):
        start = equal if r == 0 else rng.dirichlet(np.ones(n)) * TWO_PI
        x, value, _ = nelder_mead(objective, start, step=0.2 * TWO_PI / n,
                                  max_iters=opts.max_iters, tol=opts.tol)
        if value < best_value:
            best_value = value
            best_gaps = project_gaps(x)
    assert best_gaps is not None
    return config_from_gaps(best_gaps), float(best_value)
