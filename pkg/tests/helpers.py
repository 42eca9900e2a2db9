"""Shared test utilities: random configurations and brute-force oracles."""

import numpy as np

from circlepol import TWO_PI, Configuration, config_from_gaps, potential_values


def random_config(rng, n, min_sep=0.0, rotate=True):
    """Random n-point configuration from a flat Dirichlet on the gap simplex."""
    while True:
        gaps = rng.dirichlet(np.ones(n)) * TWO_PI
        if gaps.min() >= min_sep:
            anchor = rng.uniform(0.0, TWO_PI) if rotate else 0.0
            return config_from_gaps(gaps, anchor=anchor)


def dense_scan_minimum(kernel, config, resolution=1_000_000):
    """Global minimum of the potential by brute-force uniform sampling."""
    zs = TWO_PI * np.arange(resolution) / resolution
    return float(potential_values(kernel, config, zs).min())


def sup_gap_deviation(config: Configuration) -> float:
    """Largest deviation of any gap from the equal-spacing value."""
    target = TWO_PI / config.n
    return max(abs(g - target) for g in config.gaps)


def cyclic_allclose(got, want, atol=1e-9):
    """True when one tuple is a cyclic rotation of the other (within atol)."""
    got = np.asarray(got, dtype=float)
    want = np.asarray(want, dtype=float)
    if got.size != want.size:
        return False
    return any(
        np.allclose(got, np.roll(want, r), rtol=0.0, atol=atol)
        for r in range(got.size)
    )
