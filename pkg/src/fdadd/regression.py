"""Scalar-on-function and function-on-function regression.

Both estimators are minimum-norm pseudo-inverse fits.  The scalar case
regresses responses on z_i = Gram @ w_i; the functional case solves the
Kronecker-structured normal equations for a coefficient matrix linking the
predictor and response bases.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import BasisSpec, GramMatrix, design_matrix, gram_matrix
from .errors import InvalidInputError
from .functionalize import FunctionalDatum
from .linalg import kron_min_norm_solve, min_norm_lsq

__all__ = [
    "SonFFit",
    "FonFFit",
    "sonf_design",
    "sonf_fit",
    "sonf_predict",
    "fit_sonf",
    "fonf_fit",
    "fonf_predict",
    "fit_fonf",
    "predict_curve",
]


@dataclass(frozen=True)
class SonFFit:
    """Trained scalar-on-function regression."""

    spec_x: BasisSpec
    coef: np.ndarray = field(repr=False)  # length K
    gram_x: GramMatrix = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coef, dtype=np.float64)
        if c.shape != (self.spec_x.n_basis,) or not np.isfinite(c).all():
            raise InvalidInputError("coef must be a finite vector of length spec_x.n_basis")
        object.__setattr__(self, "coef", c)


@dataclass(frozen=True)
class FonFFit:
    """Trained function-on-function regression."""

    spec_x: BasisSpec
    spec_y: BasisSpec
    coef: np.ndarray = field(repr=False)  # K1 x K2
    gram_x: GramMatrix = field(repr=False)
    gram_y: GramMatrix = field(repr=False)

    def __post_init__(self):
        c = np.asarray(self.coef, dtype=np.float64)
        shape = (self.spec_x.n_basis, self.spec_y.n_basis)
        if c.shape != shape or not np.isfinite(c).all():
            raise InvalidInputError(f"coef must be a finite {shape[0]}x{shape[1]} matrix")
        object.__setattr__(self, "coef", c)


def _check_same_spec(datum: FunctionalDatum, spec: BasisSpec, what: str):
    if datum.spec != spec:
        raise InvalidInputError(f"{what} was fitted with a different basis spec")


def sonf_design(data: list[FunctionalDatum], gram: GramMatrix) -> np.ndarray:
    """Stack regression rows z_i = Gram @ w_i for a list of fitted functions."""
    if not data:
        raise InvalidInputError("need at least one functional datum")
    for d in data:
        _check_same_spec(d, gram.spec, "a functional datum")
    w = np.stack([d.coeffs for d in data])
    return w @ gram.entries


def sonf_fit(z: np.ndarray, y) -> np.ndarray:
    """Minimum-norm least-squares regression coefficients for y on rows of z."""
    return min_norm_lsq(z, y)


def sonf_predict(fit: SonFFit, x: FunctionalDatum) -> float:
    """Predicted scalar response: w^T Gram coef, i.e. the integral of x * beta."""
    _check_same_spec(x, fit.spec_x, "the predictor")
    return float(x.coeffs @ fit.gram_x.entries @ fit.coef)


def fit_sonf(data: list[FunctionalDatum], y, gram: GramMatrix | None = None) -> SonFFit:
    """Convenience wrapper: build the design, fit, and package a SonFFit."""
    if gram is None:
        gram = gram_matrix(data[0].spec)
    z = sonf_design(data, gram)
    coef = sonf_fit(z, np.asarray(y, dtype=np.float64))
    return SonFFit(spec_x=gram.spec, coef=coef, gram_x=gram)


def fonf_fit(z: np.ndarray, v: np.ndarray, psi: GramMatrix) -> np.ndarray:
    """Coefficient matrix of the function-on-function estimator.

    Solves ``vec(B) = pinv(Psi kron Z^T Z) vec(Z^T V Psi)`` through the
    structured Kronecker solver.  When Psi has full rank this equals
    ``pinv(Z^T Z) Z^T V``.
    """
    z = np.asarray(z, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if z.ndim != 2 or v.ndim != 2 or z.shape[0] != v.shape[0]:
        raise InvalidInputError(
            f"Z and V must be 2-d with matching row counts, got {z.shape} and {v.shape}"
        )
    k2 = psi.spec.n_basis
    if v.shape[1] != k2:
        raise InvalidInputError(f"V must have {k2} columns to match Psi, got {v.shape[1]}")
    ztz = z.T @ z
    ztz = (ztz + ztz.T) / 2.0
    c = z.T @ v @ psi.entries
    return kron_min_norm_solve(psi.entries, ztz, c)


def fonf_predict(fit: FonFFit, x: FunctionalDatum) -> FunctionalDatum:
    """Predicted response function, as coefficients over the response basis."""
    _check_same_spec(x, fit.spec_x, "the predictor")
    v = fit.coef.T @ fit.gram_x.entries @ x.coeffs
    return FunctionalDatum(spec=fit.spec_y, coeffs=v)


def fit_fonf(
    data_x: list[FunctionalDatum],
    data_y: list[FunctionalDatum],
    gram_x: GramMatrix | None = None,
    gram_y: GramMatrix | None = None,
) -> FonFFit:
    """Convenience wrapper fitting the coefficient matrix from paired data."""
    if len(data_x) != len(data_y) or not data_x:
        raise InvalidInputError("data_x and data_y must be equally sized and non-empty")
    if gram_x is None:
        gram_x = gram_matrix(data_x[0].spec)
    if gram_y is None:
        gram_y = gram_matrix(data_y[0].spec)
    z = sonf_design(data_x, gram_x)
    for d in data_y:
        _check_same_spec(d, gram_y.spec, "a response datum")
    v = np.stack([d.coeffs for d in data_y])
    coef = fonf_fit(z, v, gram_y)
    return FonFFit(
        spec_x=gram_x.spec, spec_y=gram_y.spec, coef=coef, gram_x=gram_x, gram_y=gram_y
    )


def predict_curve(fit: FonFFit, x: FunctionalDatum, times) -> np.ndarray:
    """Evaluate the predicted response function at the given times."""
    datum = fonf_predict(fit, x)
    return design_matrix(fit.spec_y, times) @ datum.coeffs
