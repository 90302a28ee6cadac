"""Turn discrete longitudinal measurements into fitted basis functions.

Fitting uses the minimum-norm least-squares solve, so the same code covers
both regimes: with fewer basis functions than observations it is ordinary
least squares, with more it is the minimum-norm interpolant through the
data.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .basis import BasisSpec, design_matrix, eval_basis
from .errors import InvalidInputError
from .linalg import min_norm_lsq

__all__ = ["LongitudinalSample", "FunctionalDatum", "fit_coefficients", "evaluate"]


@dataclass(frozen=True)
class LongitudinalSample:
    """One subject's (time, value) measurement pairs."""

    times: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        t = np.asarray(self.times, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        if t.ndim != 1 or v.ndim != 1 or t.size < 1:
            raise InvalidInputError("times and values must be non-empty 1-d arrays")
        if t.shape != v.shape:
            raise InvalidInputError(
                f"times and values must have equal length, got {t.size} and {v.size}"
            )
        if not (np.isfinite(t).all() and np.isfinite(v).all()):
            raise InvalidInputError("times and values must be finite")
        object.__setattr__(self, "times", t)
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return self.times.size


@dataclass(frozen=True)
class FunctionalDatum:
    """A fitted function: basis spec plus coefficient vector."""

    spec: BasisSpec
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.coeffs, dtype=np.float64)
        if w.shape != (self.spec.n_basis,):
            raise InvalidInputError(
                f"coefficients must have length {self.spec.n_basis}, got shape {w.shape}"
            )
        if not np.isfinite(w).all():
            raise InvalidInputError("coefficients must be finite")
        object.__setattr__(self, "coeffs", w)


def fit_coefficients(sample: LongitudinalSample, spec: BasisSpec) -> FunctionalDatum:
    """Fit basis coefficients to a sample with the minimum-norm interpolator.

    The coefficients solve ``min ||w||`` subject to w minimizing
    ``||values - Phi w||`` where Phi is the design matrix at the sample
    times.  Duplicate or conflicting time points are handled naturally by
    the least-squares formulation.
    """
    phi = design_matrix(spec, sample.times)
    w = min_norm_lsq(phi, sample.values)
    return FunctionalDatum(spec=spec, coeffs=w)


def evaluate(datum: FunctionalDatum, t: float) -> float:
    """Evaluate the fitted function at one point: ``coeffs . phi(t)``."""
    return float(datum.coeffs @ eval_basis(datum.spec, t))
