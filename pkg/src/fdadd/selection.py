"""Choosing the number of basis functions: k-fold CV and corrected AIC.

The corrected AIC is the small-sample Gaussian form
``n ln(rss/n) + 2k + 2k(k+1)/(n - k - 1)``; candidates whose parameter
count reaches n - 1 are ineligible rather than scored, so the criterion can
never select a model at or past the interpolation threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidInputError, NoViableCandidateError

__all__ = ["SelectionResult", "kfold_split", "cv_select", "caic_score", "caic_select"]


@dataclass(frozen=True)
class SelectionResult:
    """Outcome of a selection method: the winner plus all candidate scores.

    ``scores`` pairs each candidate with its score; ineligible candidates
    carry ``None``.
    """

    chosen_k: int
    scores: tuple[tuple[int, float | None], ...]
    method: str


def kfold_split(n: int, folds: int, seed: int) -> list[np.ndarray]:
    """Deterministically partition indices 0..n-1 into shuffled folds.

    Fold sizes differ by at most one; the split is a function of
    (n, folds, seed) only.
    """
    if folds < 2:
        raise InvalidInputError(f"folds must be >= 2, got {folds}")
    if n < folds:
        raise InvalidInputError(f"need n >= folds, got n={n}, folds={folds}")
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    return [np.sort(part) for part in np.array_split(perm, folds)]


def cv_select(
    n: int,
    candidates: Sequence[int],
    fit_eval: Callable[[np.ndarray, np.ndarray, int], float],
    folds: int = 5,
    seed: int = 0,
) -> SelectionResult:
    """Score candidates by k-fold cross-validation and pick the argmin.

    ``fit_eval(train_idx, test_idx, k)`` returns the held-out loss of a
    model of size k; non-finite losses mark the candidate ineligible.  Ties
    break toward the smallest k.
    """
    if not candidates:
        raise InvalidInputError("candidates must be non-empty")
    splits = kfold_split(n, folds, seed)
    all_idx = np.arange(n)
    scores: list[tuple[int, float | None]] = []
    for k in candidates:
        losses = []
        for test_idx in splits:
            train_idx = np.setdiff1d(all_idx, test_idx)
            losses.append(float(fit_eval(train_idx, test_idx, k)))
        mean = float(np.mean(losses))
        scores.append((int(k), mean if math.isfinite(mean) else None))
    return _argmin_result(scores, "cv")


def caic_score(rss: float, n: int, k_params: int) -> float | None:
    """Corrected AIC for a Gaussian model, or None when ineligible.

    Ineligible when the degrees-of-freedom correction blows up
    (n - k_params - 1 <= 0) or when rss is not strictly positive.
    """
    if rss < 0:
        raise InvalidInputError(f"rss must be non-negative, got {rss}")
    if n < 1:
        raise InvalidInputError(f"n must be >= 1, got {n}")
    dof = n - k_params - 1
    if dof <= 0 or rss <= 0:
        return None
    return n * math.log(rss / n) + 2 * k_params + 2 * k_params * (k_params + 1) / dof


def caic_select(candidates: Sequence[tuple[int, float, int, int]]) -> SelectionResult:
    """Pick the candidate (k, rss, k_params, n) with the smallest corrected AIC.

    Ineligible candidates are skipped; ties break toward the smallest k.
    """
    if not candidates:
        raise InvalidInputError("candidates must be non-empty")
    scores = [(int(k), caic_score(rss, n, k_params)) for k, rss, k_params, n in candidates]
    return _argmin_result(scores, "caic")


def _argmin_result(scores: list[tuple[int, float | None]], method: str) -> SelectionResult:
    eligible = [(k, s) for k, s in scores if s is not None]
    if not eligible:
        raise NoViableCandidateError(f"no eligible candidate for {method}")
    chosen = min(eligible, key=lambda ks: (ks[1], ks[0]))[0]
    return SelectionResult(chosen_k=chosen, scores=tuple(scores), method=method)
