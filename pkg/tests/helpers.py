"""Shared test helpers: ambient brute-force oracles independent of the package.

The brute-force extrema sample A-unit vectors directly in the ambient space
and evaluate <Tx,x>_A and ||Tx||_A from the definition, never touching the
package's compression or ascent machinery.
"""

from __future__ import annotations

import numpy as np


def ambient_forms(a: np.ndarray, t: np.ndarray, xs: np.ndarray):
    """Rows of <Tx,x>_A and ||Tx||_A^2 for ambient row vectors xs."""
    tx = xs @ t.T
    atx = tx @ a.T
    forms = np.einsum("ki,ki->k", atx, xs.conj())
    norms_sq = np.einsum("ki,ki->k", atx, tx.conj()).real
    return forms, norms_sq


def ambient_unit_samples(a: np.ndarray, samples: int, seed: int) -> np.ndarray:
    """A-unit ambient vectors (rows); rejects near-null directions."""
    n = a.shape[0]
    rng = np.random.default_rng(seed)
    xs = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
    na = np.sqrt(np.maximum(np.einsum("ki,ij,kj->k", xs.conj(), a, xs).real, 0.0))
    keep = na > 1e-8
    return xs[keep] / na[keep, None]


def brute_dw(a: np.ndarray, t: np.ndarray, samples: int = 150_000, seed: int = 0) -> float:
    xs = ambient_unit_samples(a, samples, seed)
    forms, norms_sq = ambient_forms(a, t, xs)
    return float(np.sqrt(np.abs(forms) ** 2 + norms_sq ** 2).max())


def brute_numrad(a: np.ndarray, t: np.ndarray, samples: int = 150_000, seed: int = 0) -> float:
    xs = ambient_unit_samples(a, samples, seed)
    forms, _ = ambient_forms(a, t, xs)
    return float(np.abs(forms).max())


def brute_crawford(a: np.ndarray, t: np.ndarray, samples: int = 150_000, seed: int = 0) -> float:
    xs = ambient_unit_samples(a, samples, seed)
    forms, _ = ambient_forms(a, t, xs)
    return float(np.abs(forms).min())


def brute_seminorm(a: np.ndarray, t: np.ndarray, samples: int = 150_000, seed: int = 0) -> float:
    xs = ambient_unit_samples(a, samples, seed)
    _, norms_sq = ambient_forms(a, t, xs)
    return float(np.sqrt(norms_sq.max()))
