"""Basis families, design matrices, and Gram matrices of L2 inner products.

Three families are provided: natural cubic splines (knots equispaced over
the domain, endpoints included), an orthonormal Fourier family, and a raw
monomial family kept for testing.  Gram matrices are computed by composite
Gauss-Legendre quadrature, with panels additionally split at spline knots
so piecewise-polynomial products integrate exactly.

The natural splines use the cardinal parameterization: basis function k is
the natural cubic spline interpolating 1 at knot k and 0 at the others, so
a coefficient vector holds the function's knot values.  This spans the
usual K-dimensional natural-spline space but stays numerically
well-conditioned at large K, where the textbook truncated-power
parameterization degrades into near-collinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from threading import Lock

import numpy as np

from .errors import InvalidInputError

__all__ = [
    "FAMILIES",
    "BasisSpec",
    "GramMatrix",
    "spline_knots",
    "eval_basis",
    "design_matrix",
    "gram_matrix",
]

FAMILIES = ("natural-cubic-spline", "fourier", "monomial-test")

# Quadrature resolution: 64 equispaced panels, 16 Gauss-Legendre nodes each.
_N_PANELS = 64
_N_NODES = 16


@dataclass(frozen=True)
class BasisSpec:
    """A basis family, its size, and the interval it lives on."""

    family: str
    n_basis: int
    domain: tuple[float, float]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidInputError(
                f"unknown basis family {self.family!r}; expected one of {FAMILIES}"
            )
        if int(self.n_basis) != self.n_basis or self.n_basis < 1:
            raise InvalidInputError(f"n_basis must be a positive integer, got {self.n_basis}")
        if self.family == "natural-cubic-spline" and self.n_basis < 2:
            raise InvalidInputError("natural-cubic-spline requires n_basis >= 2")
        a, b = self.domain
        if not (np.isfinite(a) and np.isfinite(b) and a < b):
            raise InvalidInputError(f"domain must be a finite interval with a < b, got {self.domain}")
        object.__setattr__(self, "domain", (float(a), float(b)))
        object.__setattr__(self, "n_basis", int(self.n_basis))


@dataclass(frozen=True)
class GramMatrix:
    """Matrix of pairwise L2 inner products of one basis family."""

    spec: BasisSpec
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        e = np.asarray(self.entries, dtype=np.float64)
        k = self.spec.n_basis
        if e.shape != (k, k):
            raise InvalidInputError(f"Gram entries must be {k}x{k}, got {e.shape}")
        object.__setattr__(self, "entries", e)


def spline_knots(spec: BasisSpec) -> np.ndarray:
    """The n_basis equispaced knots of a natural-cubic-spline spec."""
    if spec.family != "natural-cubic-spline":
        raise InvalidInputError(f"{spec.family} has no knots")
    a, b = spec.domain
    return np.linspace(a, b, spec.n_basis)


# Map knot values -> knot second derivatives for the cardinal natural
# spline, cached per (n_basis, domain) because design matrices are built in
# tight loops across sweep replicates.
_curvature_cache: dict[tuple, np.ndarray] = {}
_curvature_lock = Lock()


def _curvature_map(knots: np.ndarray) -> np.ndarray:
    """K x K matrix sending knot values to natural-spline second derivatives.

    Rows 0 and K-1 are zero (natural boundary conditions); the interior rows
    solve the standard tridiagonal continuity system.
    """
    k = knots.size
    key = (k, knots[0], knots[-1])
    with _curvature_lock:
        cached = _curvature_cache.get(key)
    if cached is not None:
        return cached
    p = np.zeros((k, k))
    if k > 2:
        h = np.diff(knots)
        n = k - 2
        tri = np.zeros((n, n))
        idx = np.arange(n)
        tri[idx, idx] = (h[:-1] + h[1:]) / 3.0
        tri[idx[:-1], idx[:-1] + 1] = h[1:-1] / 6.0
        tri[idx[1:], idx[1:] - 1] = h[1:-1] / 6.0
        # Second-difference operator: rhs_j = (y_{j+2}-y_{j+1})/h_{j+1} - (y_{j+1}-y_j)/h_j
        diff = np.zeros((n, k))
        diff[idx, idx] = 1.0 / h[:-1]
        diff[idx, idx + 1] = -1.0 / h[:-1] - 1.0 / h[1:]
        diff[idx, idx + 2] = 1.0 / h[1:]
        p[1:-1, :] = np.linalg.solve(tri, diff)
    with _curvature_lock:
        _curvature_cache[key] = p
    return p


def _natural_spline_matrix(t: np.ndarray, knots: np.ndarray) -> np.ndarray:
    # Cardinal natural cubic spline basis: row phi(t) maps knot values y to
    # the interpolating spline's value at t.  Linear beyond the boundary
    # knots, so the same rows provide the (exactly linear) extrapolant.
    k = knots.size
    curv = _curvature_map(knots)
    out = np.zeros((t.size, k))
    rows = np.arange(t.size)

    j = np.clip(np.searchsorted(knots, t, side="right") - 1, 0, k - 2)
    h = knots[j + 1] - knots[j]
    inside = (t >= knots[0]) & (t <= knots[-1])
    s = (t - knots[j]) / h
    a, b = 1.0 - s, s
    ca = (a**3 - a) * h**2 / 6.0
    cb = (b**3 - b) * h**2 / 6.0
    body = ca[:, None] * curv[j, :] + cb[:, None] * curv[j + 1, :]
    body[rows, j] += a
    body[rows, j + 1] += b
    out[inside] = body[inside]

    low = t < knots[0]
    if low.any():
        h0 = knots[1] - knots[0]
        # f'(xi_0) as a row over knot values: (y_1 - y_0)/h0 - h0/6 * m_1
        slope = -h0 / 6.0 * curv[1, :]
        slope[0] -= 1.0 / h0
        slope[1] += 1.0 / h0
        ext = np.zeros((int(low.sum()), k))
        ext[:, 0] = 1.0
        ext += (t[low] - knots[0])[:, None] * slope[None, :]
        out[low] = ext

    high = t > knots[-1]
    if high.any():
        h1 = knots[-1] - knots[-2]
        # f'(xi_last): (y_last - y_prev)/h1 + h1/6 * m_{last-1}
        slope = h1 / 6.0 * curv[-2, :]
        slope[-1] += 1.0 / h1
        slope[-2] -= 1.0 / h1
        ext = np.zeros((int(high.sum()), k))
        ext[:, -1] = 1.0
        ext += (t[high] - knots[-1])[:, None] * slope[None, :]
        out[high] = ext
    return out


def _fourier_matrix(t: np.ndarray, n_basis: int, a: float, b: float) -> np.ndarray:
    # phi_1 = 1/sqrt(L); pairs sin then cos at frequency j, truncated at K.
    length = b - a
    out = np.empty((t.size, n_basis))
    out[:, 0] = 1.0 / np.sqrt(length)
    amp = np.sqrt(2.0 / length)
    u = 2.0 * np.pi * (t - a) / length
    for col in range(1, n_basis):
        j = (col + 1) // 2
        if col % 2 == 1:
            out[:, col] = amp * np.sin(j * u)
        else:
            out[:, col] = amp * np.cos(j * u)
    return out


def _eval_matrix(spec: BasisSpec, t: np.ndarray) -> np.ndarray:
    a, b = spec.domain
    if spec.family == "natural-cubic-spline":
        return _natural_spline_matrix(t, spline_knots(spec))
    # Only the spline family extrapolates; the others reject outside points.
    if t.size and (t.min() < a or t.max() > b):
        raise InvalidInputError(
            f"evaluation points outside domain [{a}, {b}] are not allowed for {spec.family}"
        )
    if spec.family == "fourier":
        return _fourier_matrix(t, spec.n_basis, a, b)
    return np.vander(t, spec.n_basis, increasing=True)


def eval_basis(spec: BasisSpec, t: float) -> np.ndarray:
    """Evaluate all basis functions at one point, returning a length-K vector."""
    t_arr = np.asarray([t], dtype=np.float64)
    if not np.isfinite(t_arr).all():
        raise InvalidInputError(f"evaluation point must be finite, got {t}")
    return _eval_matrix(spec, t_arr)[0]


def design_matrix(spec: BasisSpec, times) -> np.ndarray:
    """Evaluate the basis at each time; row j is ``eval_basis(spec, times[j])``."""
    times = np.asarray(times, dtype=np.float64)
    if times.ndim != 1 or times.size < 1:
        raise InvalidInputError(f"times must be a non-empty 1-d array, got shape {times.shape}")
    if not np.isfinite(times).all():
        raise InvalidInputError("times contain non-finite entries")
    return _eval_matrix(spec, times)


def _quadrature_rule(spec: BasisSpec) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes and weights covering the domain.

    Panel edges are the equispaced base panels plus, for splines, the knots;
    products of cubics are then exact within every panel.
    """
    a, b = spec.domain
    edges = np.linspace(a, b, _N_PANELS + 1)
    if spec.family == "natural-cubic-spline":
        edges = np.union1d(edges, spline_knots(spec))
    ref_x, ref_w = np.polynomial.legendre.leggauss(_N_NODES)
    left = edges[:-1]
    half = (edges[1:] - left) / 2.0
    nodes = (left + half)[:, None] + half[:, None] * ref_x[None, :]
    weights = half[:, None] * ref_w[None, :]
    return nodes.ravel(), weights.ravel()


def gram_matrix(spec: BasisSpec) -> GramMatrix:
    """Gram matrix of pairwise L2 inner products over the domain.

    Entry (i, j) approximates the integral of phi_i * phi_j; the result is
    exactly symmetric.
    """
    nodes, weights = _quadrature_rule(spec)
    design = _eval_matrix(spec, nodes)
    g = (design * weights[:, None]).T @ design
    g = (g + g.T) / 2.0
    return GramMatrix(spec=spec, entries=g)
