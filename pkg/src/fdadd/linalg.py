"""Dense linear-algebra primitives built around the SVD pseudo-inverse.

Every solver here resolves rank deficiency the same way: singular values at
or below ``rcond * sigma_max`` are treated as zero, so least-squares systems
yield the minimum-Euclidean-norm solution.  All functions are pure and safe
to call concurrently.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError, NumericalError

__all__ = ["default_rcond", "svd_pinv", "min_norm_lsq", "kron_min_norm_solve"]


def default_rcond(m: int, n: int) -> float:
    """Default relative singular-value cutoff for an m x n matrix."""
    return float(np.finfo(np.float64).eps) * max(m, n)


def _check_matrix(a, name: str = "A") -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise InvalidInputError(f"{name} must be a non-empty 2-d matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidInputError(f"{name} contains non-finite entries")
    return a


def _check_vector(b, name: str = "b") -> np.ndarray:
    b = np.asarray(b, dtype=np.float64)
    if b.ndim != 1 or b.size < 1:
        raise InvalidInputError(f"{name} must be a non-empty 1-d vector, got shape {b.shape}")
    if not np.isfinite(b).all():
        raise InvalidInputError(f"{name} contains non-finite entries")
    return b


def svd_pinv(a, rcond: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudo-inverse of a matrix via SVD.

    Singular values sigma_i <= rcond * sigma_max are zeroed; the remaining
    ones are inverted.  ``rcond`` defaults to machine epsilon times
    max(m, n).

    Raises
    ------
    InvalidInputError
        For non-finite entries or an out-of-range ``rcond``.
    NumericalError
        If the SVD fails to converge.
    """
    a = _check_matrix(a)
    m, n = a.shape
    if rcond is None:
        rcond = default_rcond(m, n)
    if not (0.0 <= rcond < 1.0):
        raise InvalidInputError(f"rcond must lie in [0, 1), got {rcond}")
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD did not converge for {m}x{n} input") from exc
    cutoff = rcond * s[0]
    keep = s > cutoff
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (vt.T * inv) @ u.T


def min_norm_lsq(a, b) -> np.ndarray:
    """Minimum-norm least-squares solution of ``a @ x ~= b``.

    Among all x minimizing ``||b - a x||`` this returns the one with the
    smallest Euclidean norm, i.e. ``pinv(a) @ b``, computed from a single
    SVD of ``a`` with the default cutoff of :func:`svd_pinv`.
    """
    a = _check_matrix(a)
    b = _check_vector(b)
    if a.shape[0] != b.shape[0]:
        raise InvalidInputError(
            f"dimension mismatch: A is {a.shape[0]}x{a.shape[1]}, b has length {b.shape[0]}"
        )
    try:
        u, s, vt = np.linalg.svd(a, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD did not converge for {a.shape[0]}x{a.shape[1]} input") from exc
    cutoff = default_rcond(*a.shape) * s[0]
    keep = s > cutoff
    coef = np.zeros_like(s)
    ub = u.T @ b
    coef[keep] = ub[keep] / s[keep]
    return vt.T @ coef


def _sym_psd_eig(m, name: str, tol: float = 1e-10) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a nominally symmetric PSD matrix.

    Symmetry is checked to ``tol`` relative to the largest entry; negative
    eigenvalues within ``tol * lambda_max`` of zero are clamped, larger ones
    are rejected.
    """
    m = _check_matrix(m, name)
    if m.shape[0] != m.shape[1]:
        raise InvalidInputError(f"{name} must be square, got shape {m.shape}")
    scale = max(1.0, float(np.abs(m).max()))
    asym = float(np.abs(m - m.T).max())
    if asym > tol * scale:
        raise InvalidInputError(f"{name} is not symmetric (max asymmetry {asym:.3e})")
    lam, vecs = np.linalg.eigh((m + m.T) / 2.0)
    lam_max = max(float(lam[-1]), 0.0)
    if lam[0] < -tol * lam_max:
        raise InvalidInputError(
            f"{name} is not positive semidefinite (min eigenvalue {lam[0]:.3e})"
        )
    return np.clip(lam, 0.0, None), vecs


def kron_min_norm_solve(p, q, c) -> np.ndarray:
    """Solve ``vec(B) = pinv(P kron Q) vec(C)`` without forming the product.

    P (q x q) and Q (p x p) must be symmetric positive semidefinite and C is
    p x q.  vec is column-major, so ``(P kron Q) vec(B) = vec(Q B P^T)``.
    Using eigendecompositions P = Up Lp Up^T and Q = Uq Lq Uq^T, the solution
    is ``B = Uq (M / outer(lq, lp)) Up^T`` with ``M = Uq^T C Up`` and
    eigenvalue products at or below the pseudo-inverse cutoff of the
    materialized pq x pq product zeroed instead of inverted.
    """
    lam_p, up = _sym_psd_eig(p, "P")
    lam_q, uq = _sym_psd_eig(q, "Q")
    c = _check_matrix(c, "C")
    nq, np_ = lam_q.size, lam_p.size
    if c.shape != (nq, np_):
        raise InvalidInputError(
            f"C must be {nq}x{np_} to match Q and P, got shape {c.shape}"
        )
    d = np.outer(lam_q, lam_p)
    cutoff = default_rcond(nq * np_, nq * np_) * float(d.max())
    keep = d > cutoff
    mid = uq.T @ c @ up
    mid = np.where(keep, np.divide(mid, d, out=np.zeros_like(mid), where=keep), 0.0)
    return uq @ mid @ up.T
