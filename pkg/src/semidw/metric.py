"""Positive-semidefinite metric workspace.

A Hermitian positive-semidefinite matrix ``A`` induces the semi-inner
product ``<x, y>_A = <Ax, y>`` (linear in the first slot) and the seminorm
``||x||_A = sqrt(<x, x>_A)``. :func:`build_metric` factorizes ``A`` once and
caches everything the rest of the package needs: ``A^{1/2}``, the
pseudoinverses ``A^dagger`` and ``(A^{1/2})^dagger``, the orthogonal
projection onto ``range(A)`` and an orthonormal basis of that range.

:func:`compress` is the workhorse reduction: for an A-bounded operator ``T``
it produces the pair ``(N, W)`` with ``N = B* A^{1/2} T (A^{1/2})^dagger B``
(r x r) and ``W = A^{1/2} T (A^{1/2})^dagger B`` (n x r), where ``B`` is the
range basis. For every unit coordinate vector ``c`` the A-unit vector
``x = (A^{1/2})^dagger B c`` satisfies ``<Tx, x>_A = c* N c`` and
``||Tx||_A = ||W c||``, and conversely; every A-seminorm functional becomes
an ordinary Euclidean problem on ``(N, W)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyMatrix,
    NotABounded,
    NotHermitian,
    NotPositiveSemidefinite,
)

DEFAULT_RANK_TOL = 1e-10
HERMITIAN_RTOL = 1e-12
BOUNDED_TOL = 1e-9


@dataclass(frozen=True)
class Metric:
    """Spectral workspace of a positive-semidefinite metric.

    Attributes
    ----------
    dim : ambient dimension n.
    a : the (symmetrized) metric matrix A.
    eigvals : eigenvalues of A, descending, clamped at the rank cutoff.
    eigvecs : matching orthonormal eigenvector columns.
    rank : numerical rank r under ``rank_tol``.
    sqrt_a, pinv_sqrt_a, pinv_a : A^{1/2}, (A^{1/2})^dagger, A^dagger.
    proj : orthogonal projection onto range(A).
    basis : n x r orthonormal columns spanning range(A).
    rank_tol : relative eigenvalue cutoff used at construction.
    """

    dim: int
    a: np.ndarray
    eigvals: np.ndarray
    eigvecs: np.ndarray
    rank: int
    sqrt_a: np.ndarray
    pinv_sqrt_a: np.ndarray
    pinv_a: np.ndarray
    proj: np.ndarray
    basis: np.ndarray
    rank_tol: float


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _hermitian_part(z: np.ndarray) -> np.ndarray:
    return 0.5 * (z + z.conj().T)


def as_operator(t, dim: int | None = None) -> np.ndarray:
    """Validate and coerce an operator to a square complex array.

    Raises :class:`EmptyMatrix` for empty or non-2D input,
    :class:`DimensionMismatch` for non-square input or a dimension that does
    not match ``dim``, and :class:`DimensionMismatch` for non-finite entries.
    """
    arr = np.asarray(t, dtype=complex)
    if arr.ndim != 2 or arr.size == 0:
        raise EmptyMatrix(f"expected a nonempty square matrix, got shape {arr.shape}")
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"matrix is not square: shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise DimensionMismatch(f"operator dimension {arr.shape[0]} != metric dimension {dim}")
    if not np.all(np.isfinite(arr.view(float))):
        raise DimensionMismatch("operator has non-finite entries")
    return arr


def build_metric(a, rank_tol: float = DEFAULT_RANK_TOL) -> Metric:
    """Build the spectral workspace of a Hermitian PSD matrix.

    Eigenvalues in ``(-rank_tol*lmax, rank_tol*lmax)`` are clamped to zero;
    anything more negative raises :class:`NotPositiveSemidefinite`. The input
    is symmetrized after the Hermiticity check so downstream arithmetic sees
    an exactly Hermitian matrix.
    """
    arr = np.asarray(a, dtype=complex)
    if arr.ndim != 2 or arr.size == 0:
        raise EmptyMatrix(f"expected a nonempty square matrix, got shape {arr.shape}")
    if arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"metric is not square: shape {arr.shape}")
    norm_a = float(np.linalg.norm(arr))
    herm_res = float(np.linalg.norm(arr - arr.conj().T))
    if not np.isfinite(norm_a) or herm_res > HERMITIAN_RTOL * (1.0 + norm_a):
        raise NotHermitian(f"metric is not Hermitian: residual {herm_res:.3e}")
    arr = _hermitian_part(arr)

    eigvals, eigvecs = np.linalg.eigh(arr)
    lmax = float(eigvals[-1]) if eigvals.size else 0.0
    cutoff = rank_tol * max(lmax, 0.0)
    if np.any(eigvals < -cutoff - (0.0 if cutoff > 0 else np.finfo(float).eps * max(norm_a, 1.0))):
        raise NotPositiveSemidefinite(
            f"metric has negative eigenvalue {float(eigvals[0]):.3e} below -{cutoff:.3e}"
        )
    eigvals = np.where(eigvals < cutoff, 0.0, eigvals)

    # descending order, support first; stable so equal eigenvalues (e.g. A = I)
    # keep the factorization's basis order and compression acts as identity
    order = np.argsort(-eigvals, kind="stable")
    eigvals = eigvals[order]
    eigvecs = eigvecs[:, order]
    rank = int(np.count_nonzero(eigvals > 0.0))

    support = eigvals > 0.0
    sq = np.sqrt(eigvals)
    inv = np.where(support, 1.0, 0.0) / np.where(support, eigvals, 1.0)
    inv_sq = np.where(support, 1.0, 0.0) / np.where(support, sq, 1.0)

    def _assemble(diag: np.ndarray) -> np.ndarray:
        return _freeze(_hermitian_part((eigvecs * diag) @ eigvecs.conj().T))

    return Metric(
        dim=arr.shape[0],
        a=_freeze(arr),
        eigvals=_freeze(eigvals),
        eigvecs=_freeze(eigvecs),
        rank=rank,
        sqrt_a=_assemble(sq),
        pinv_sqrt_a=_assemble(inv_sq),
        pinv_a=_assemble(inv),
        proj=_assemble(support.astype(float)),
        basis=_freeze(eigvecs[:, :rank].copy()),
        rank_tol=float(rank_tol),
    )


def semi_inner(m: Metric, x, y) -> complex:
    """Semi-inner product ``<x, y>_A = <Ax, y>``, linear in ``x``."""
    xv = np.asarray(x, dtype=complex).reshape(-1)
    yv = np.asarray(y, dtype=complex).reshape(-1)
    if xv.shape[0] != m.dim or yv.shape[0] != m.dim:
        raise DimensionMismatch(f"vectors of length {xv.shape[0]}, {yv.shape[0]} under metric of dim {m.dim}")
    return complex(np.vdot(yv, m.a @ xv))


def semi_norm_vec(m: Metric, x) -> float:
    """Seminorm ``||x||_A``; zero exactly on the null space of A."""
    val = semi_inner(m, x, x).real
    return float(np.sqrt(max(val, 0.0)))


def a_bounded_residual(m: Metric, t) -> float:
    """Relative residual of the A-boundedness test ``A^{1/2} T (I - P_A) = 0``."""
    arr = as_operator(t, m.dim)
    st = m.sqrt_a @ arr
    res = float(np.linalg.norm(st - st @ m.proj))
    return res / (1.0 + float(np.linalg.norm(st)))


def compress(m: Metric, t, tol: float = BOUNDED_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Compress an A-bounded operator to the pair ``(N, W)``.

    Raises :class:`NotABounded` when ``A^{1/2} T`` does not annihilate the
    null space of ``A`` within the relative tolerance ``tol``.
    """
    arr = as_operator(t, m.dim)
    res = a_bounded_residual(m, arr)
    if res > tol:
        raise NotABounded(f"operator is not A-bounded: residual {res:.3e} > {tol:.1e}")
    w_full = m.sqrt_a @ arr @ m.pinv_sqrt_a
    w = w_full @ m.basis
    n = m.basis.conj().T @ w
    return n, w


def to_ambient(m: Metric, c) -> np.ndarray:
    """Lift a coordinate vector ``c`` to the canonical ambient vector.

    Returns ``x = (A^{1/2})^dagger B c``, the representative with zero
    null-space component; ``||x||_A = ||c||``. Adding any null-space vector
    to ``x`` changes no A-quantity.
    """
    cv = np.asarray(c, dtype=complex).reshape(-1)
    if cv.shape[0] != m.rank:
        raise DimensionMismatch(f"coordinate length {cv.shape[0]} != metric rank {m.rank}")
    return m.pinv_sqrt_a @ (m.basis @ cv)
