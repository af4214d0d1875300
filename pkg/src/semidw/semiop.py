"""A-adjoint calculus and operator-class predicates.

The A-adjoint of ``T`` is ``T^# = A^dagger T* A``, the unique solution of
``A X = T* A`` with range inside ``range(A)``; it exists exactly when
``range(T* A) <= range(A)``. On top of it: Cartesian decomposition
``T = re_a(T) + i im_a(T)``, the A-modulus square ``|T|^2_A = T^# T``, the
A-selfadjoint / A-normal / A-unitary predicates, and 2x2 block assembly
whose block adjoint swaps the off-diagonal blocks and takes the A-adjoint
entrywise.

Predicates return booleans with relative tolerances (scaled by 1 + norm);
the companion ``*_residual`` functions expose the raw relative residuals
for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotInBA
from .metric import (
    BOUNDED_TOL,
    Metric,
    a_bounded_residual,
    as_operator,
    build_metric,
)

DEFAULT_TOL = 1e-9


def ba_residual(m: Metric, t) -> float:
    """Relative residual of the A-adjoint existence test ``(I-P_A) T* A = 0``."""
    arr = as_operator(t, m.dim)
    ta = arr.conj().T @ m.a
    res = float(np.linalg.norm(ta - m.proj @ ta))
    return res / (1.0 + float(np.linalg.norm(ta)))


def in_ba(m: Metric, t, tol: float = DEFAULT_TOL) -> bool:
    """True when ``T`` admits an A-adjoint, i.e. ``range(T* A) <= range(A)``."""
    return ba_residual(m, t) <= tol


def is_a_bounded(m: Metric, t, tol: float = DEFAULT_TOL) -> bool:
    """True when ``||Tx||_A <= c ||x||_A`` for some c (A^{1/2}T kills N(A))."""
    return a_bounded_residual(m, t) <= tol


def sharp(m: Metric, t, tol: float = DEFAULT_TOL) -> np.ndarray:
    """A-adjoint ``T^# = A^dagger T* A``; raises :class:`NotInBA` if absent."""
    arr = as_operator(t, m.dim)
    res = ba_residual(m, arr)
    if res > tol:
        raise NotInBA(f"operator admits no A-adjoint: residual {res:.3e} > {tol:.1e}")
    return m.pinv_a @ arr.conj().T @ m.a


def re_a(m: Metric, t) -> np.ndarray:
    """A-real part ``(T + T^#)/2``; A-selfadjoint by construction."""
    arr = as_operator(t, m.dim)
    return 0.5 * (arr + sharp(m, arr))


def im_a(m: Metric, t) -> np.ndarray:
    """A-imaginary part ``(T - T^#)/(2i)``; A-selfadjoint by construction."""
    arr = as_operator(t, m.dim)
    return (arr - sharp(m, arr)) / 2j


def abs_sq(m: Metric, t) -> np.ndarray:
    """A-modulus square ``|T|^2_A = T^# T``; A-positive."""
    arr = as_operator(t, m.dim)
    return sharp(m, arr) @ arr


def selfadjoint_residual(m: Metric, t) -> float:
    """Relative residual of ``A T = T* A``."""
    arr = as_operator(t, m.dim)
    at = m.a @ arr
    return float(np.linalg.norm(at - at.conj().T)) / (1.0 + float(np.linalg.norm(at)))


def is_a_selfadjoint(m: Metric, t, tol: float = DEFAULT_TOL) -> bool:
    """True when ``A T`` is Hermitian."""
    return selfadjoint_residual(m, t) <= tol


def normal_residual(m: Metric, t) -> float:
    """Relative residual of ``T T^# = T^# T``."""
    arr = as_operator(t, m.dim)
    sh = sharp(m, arr)
    comm = arr @ sh - sh @ arr
    scale = 1.0 + float(np.linalg.norm(arr @ sh)) + float(np.linalg.norm(sh @ arr))
    return float(np.linalg.norm(comm)) / scale


def is_a_normal(m: Metric, t, tol: float = DEFAULT_TOL) -> bool:
    """True when ``T`` commutes with its A-adjoint."""
    return normal_residual(m, t) <= tol


def unitary_residual(m: Metric, t) -> float:
    """Relative residual of ``U^# U = (U^#)^# U^# = P_A``."""
    arr = as_operator(t, m.dim)
    sh = sharp(m, arr)
    scale = 1.0 + float(np.linalg.norm(m.proj))
    r1 = float(np.linalg.norm(sh @ arr - m.proj))
    r2 = float(np.linalg.norm(sharp(m, sh) @ sh - m.proj))
    return max(r1, r2) / scale


def is_a_unitary(m: Metric, t, tol: float = DEFAULT_TOL) -> bool:
    """True when ``U`` is A-unitary (A-isometric together with its A-adjoint)."""
    return unitary_residual(m, t) <= tol


@dataclass(frozen=True)
class BlockOperator:
    """2x2 block operator on the doubled space with metric diag(A, A)."""

    metric: Metric
    t11: np.ndarray
    t12: np.ndarray
    t21: np.ndarray
    t22: np.ndarray
    assembled: np.ndarray
    metric2: Metric

    @property
    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        return self.t11, self.t12, self.t21, self.t22


def double_metric(m: Metric) -> Metric:
    """The block-diagonal metric diag(A, A) on the doubled space."""
    n = m.dim
    a2 = np.zeros((2 * n, 2 * n), dtype=complex)
    a2[:n, :n] = m.a
    a2[n:, n:] = m.a
    return build_metric(a2, m.rank_tol)


def block2(m: Metric, t11, t12, t21, t22, tol: float = DEFAULT_TOL) -> BlockOperator:
    """Assemble four B_A operators into a 2x2 block on diag(A, A).

    Raises :class:`NotInBA` when any block lacks an A-adjoint and
    :class:`DimensionMismatch` when blocks disagree in size.
    """
    blocks = [as_operator(b, m.dim) for b in (t11, t12, t21, t22)]
    for idx, blk in enumerate(blocks):
        res = ba_residual(m, blk)
        if res > tol:
            raise NotInBA(f"block {idx} admits no A-adjoint: residual {res:.3e}")
    assembled = np.block([[blocks[0], blocks[1]], [blocks[2], blocks[3]]])
    return BlockOperator(
        metric=m,
        t11=blocks[0],
        t12=blocks[1],
        t21=blocks[2],
        t22=blocks[3],
        assembled=assembled,
        metric2=double_metric(m),
    )


def block_sharp(b: BlockOperator) -> BlockOperator:
    """Block adjoint: off-diagonal blocks swap, every block takes its A-adjoint.

    Agrees with ``sharp(metric2, assembled)`` entrywise.
    """
    m = b.metric
    return block2(
        m,
        sharp(m, b.t11),
        sharp(m, b.t21),
        sharp(m, b.t12),
        sharp(m, b.t22),
    )


def bounded_part(m: Metric, t) -> np.ndarray:
    """Nearest A-bounded operator: zero out the ``P_A T (I - P_A)`` corner.

    In finite dimensions this also lands in B_A; the returned operator
    agrees with ``t`` whenever ``t`` was already A-bounded.
    """
    arr = as_operator(t, m.dim)
    comp = np.eye(m.dim, dtype=complex) - m.proj
    out = arr - m.proj @ arr @ comp
    if a_bounded_residual(m, out) > BOUNDED_TOL:
        raise NotInBA("projection to an A-bounded operator failed")  # pragma: no cover
    return out
