"""Seeded Gaussian-process data generation for the simulation scenarios.

Latent curves are drawn from a GP with a squared-exponential kernel on an
equispaced grid, observed at randomly chosen grid points with additive
Gaussian noise.  Responses are either the trapezoid-rule integral of
x * beta (scalar response) or the integral of beta(s, t) * x(s) evaluated
on a coarser response grid (functional response).

Reproducibility contract: every random quantity is drawn from a stream
``default_rng(SeedSequence(entropy=seed, spawn_key=(role, index)))`` where
role 0 / index 0 is the replicate-level coefficient function and role 1 /
index i is subject i (training subjects first, then test subjects).  Within
a subject stream the draw order is: GP normals for x, observation-point
choice for x, x noise, then for functional responses the observation-point
choice for y and y noise, or for scalar responses the y noise.  Subjects
are therefore independent of generation order and thread count.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass, field, replace
from threading import Lock

import numpy as np

from .errors import InvalidInputError, NumericalError
from .functionalize import LongitudinalSample

__all__ = [
    "SCENARIOS",
    "GpParams",
    "ScenarioConfig",
    "ScalarSubject",
    "CurveSubject",
    "Dataset",
    "default_config",
    "rbf_kernel",
    "sample_gp",
    "gen_scenario",
    "gen_fig1_demo",
]

SCENARIOS = ("A", "B", "C", "D", "fig1-demo")

_ROLE_COEF = 0
_ROLE_SUBJECT = 1

_JITTER_START = 1e-8
_JITTER_MAX = 1e-4


@dataclass(frozen=True)
class GpParams:
    """Amplitude and length scale of the squared-exponential kernel."""

    theta: float
    h: float

    def __post_init__(self):
        if not (np.isfinite(self.theta) and self.theta > 0):
            raise InvalidInputError(f"theta must be positive and finite, got {self.theta}")
        if not (np.isfinite(self.h) and self.h > 0):
            raise InvalidInputError(f"h must be positive and finite, got {self.h}")


@dataclass(frozen=True)
class ScenarioConfig:
    """Declarative description of one simulated dataset."""

    scenario: str
    n_train: int
    n_test: int
    m_x: int
    m_y: int | None = None
    gp_x: GpParams = GpParams(10.0, 10.0)
    gp_beta: GpParams = GpParams(15.0, 10.0)
    noise_sd: float = 1.0
    domain: tuple[float, float] = (0.0, 100.0)
    latent_grid_size: int = 1001
    response_grid_size: int = 101
    center_per_curve: bool = False
    seed: int | tuple[int, ...] = 0

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise InvalidInputError(f"unknown scenario {self.scenario!r}; expected one of {SCENARIOS}")
        if self.n_train < 1 or self.n_test < 0:
            raise InvalidInputError("n_train must be >= 1 and n_test >= 0")
        if self.latent_grid_size < 2 or self.response_grid_size < 2:
            raise InvalidInputError("grid sizes must be >= 2")
        if not (1 <= self.m_x <= self.latent_grid_size):
            raise InvalidInputError(
                f"m_x must lie in [1, latent_grid_size], got {self.m_x} vs {self.latent_grid_size}"
            )
        if self.scenario in ("C", "D"):
            if self.m_y is None or not (1 <= self.m_y <= self.response_grid_size):
                raise InvalidInputError(
                    "scenarios C and D need m_y in [1, response_grid_size]"
                )
        if not (np.isfinite(self.noise_sd) and self.noise_sd >= 0):
            raise InvalidInputError(f"noise_sd must be >= 0, got {self.noise_sd}")
        a, b = self.domain
        if not (np.isfinite(a) and np.isfinite(b) and a < b):
            raise InvalidInputError(f"domain must be a finite interval with a < b, got {self.domain}")
        object.__setattr__(self, "domain", (float(a), float(b)))

    @property
    def kind(self) -> str:
        if self.scenario == "fig1-demo":
            return "curvefit"
        return "sonf" if self.scenario in ("A", "B") else "fonf"


# Paper-style defaults: only the entry marked variable in the scenario
# tables differs from its fixed companion scenarios.
_DEFAULTS = {
    "A": dict(n_train=10, n_test=150, m_x=75, m_y=None),
    "B": dict(n_train=50, n_test=150, m_x=10, m_y=None),
    "C": dict(n_train=50, n_test=150, m_x=75, m_y=5),
    "D": dict(n_train=10, n_test=150, m_x=75, m_y=75),
    "fig1-demo": dict(n_train=1, n_test=0, m_x=15, m_y=None),
}


def default_config(scenario: str, **overrides) -> ScenarioConfig:
    """ScenarioConfig with the standard fixed values for one scenario."""
    if scenario not in _DEFAULTS:
        raise InvalidInputError(f"unknown scenario {scenario!r}; expected one of {SCENARIOS}")
    kwargs = dict(_DEFAULTS[scenario])
    kwargs.update(overrides)
    return ScenarioConfig(scenario=scenario, **kwargs)


@dataclass(frozen=True)
class ScalarSubject:
    """A functional predictor sample with a scalar response."""

    x: LongitudinalSample
    y: float
    signal: float  # noiseless integral of x * beta


@dataclass(frozen=True)
class CurveSubject:
    """A functional predictor sample with a functional response sample."""

    x: LongitudinalSample
    y: LongitudinalSample
    y_signal: np.ndarray = field(repr=False)  # noiseless response at y.times


@dataclass(frozen=True)
class Dataset:
    """Train/test subjects plus the latent grids they were sampled from."""

    kind: str  # "sonf" | "fonf" | "curvefit"
    train: tuple
    test: tuple
    grid: np.ndarray = field(repr=False)
    response_grid: np.ndarray | None = field(default=None, repr=False)
    truth: np.ndarray | None = field(default=None, repr=False)  # curvefit only


def rbf_kernel(t1: float, t2: float, p: GpParams) -> float:
    """Squared-exponential covariance theta^2 exp(-(t1-t2)^2 / h^2)."""
    if not (np.isfinite(t1) and np.isfinite(t2)):
        raise InvalidInputError("kernel inputs must be finite")
    d = t1 - t2
    return float(p.theta**2 * np.exp(-(d * d) / (p.h * p.h)))


def _rbf_cov(grid: np.ndarray, p: GpParams) -> np.ndarray:
    d = grid[:, None] - grid[None, :]
    return p.theta**2 * np.exp(-(d * d) / (p.h * p.h))


_factor_cache: OrderedDict[tuple, np.ndarray] = OrderedDict()
_factor_lock = Lock()
_FACTOR_CACHE_MAX = 8


def _gp_factor(grid: np.ndarray, p: GpParams) -> np.ndarray:
    """Cholesky factor of the kernel matrix, with escalating diagonal jitter.

    Factors are cached by grid contents and kernel parameters since the
    experiment sweeps reuse the same grid across replicates.
    """
    key = (grid.tobytes(), p.theta, p.h)
    with _factor_lock:
        cached = _factor_cache.get(key)
    if cached is not None:
        return cached
    cov = _rbf_cov(grid, p)
    jitter = _JITTER_START
    factor = None
    while jitter <= _JITTER_MAX * 1.01:
        try:
            factor = np.linalg.cholesky(cov + jitter * p.theta**2 * np.eye(grid.size))
            break
        except np.linalg.LinAlgError:
            jitter *= 10.0
    if factor is None:
        raise NumericalError(
            f"covariance factorization failed even with jitter {_JITTER_MAX} * theta^2"
        )
    with _factor_lock:
        _factor_cache[key] = factor
        while len(_factor_cache) > _FACTOR_CACHE_MAX:
            _factor_cache.popitem(last=False)
    return factor


def sample_gp(grid, p: GpParams, rng: np.random.Generator) -> np.ndarray:
    """One zero-mean GP draw on the grid, deterministic per rng state."""
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size < 1:
        raise InvalidInputError("grid must be a non-empty 1-d array")
    if grid.size > 1 and not (np.diff(grid) > 0).all():
        raise InvalidInputError("grid must be strictly increasing")
    factor = _gp_factor(grid, p)
    return factor @ rng.standard_normal(grid.size)


def _stream(seed, role: int, index: int) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(role, index))
    return np.random.default_rng(ss)


def _trapezoid_weights(grid: np.ndarray) -> np.ndarray:
    w = np.empty_like(grid)
    w[0] = (grid[1] - grid[0]) / 2.0
    w[-1] = (grid[-1] - grid[-2]) / 2.0
    w[1:-1] = (grid[2:] - grid[:-2]) / 2.0
    return w


def _centered_latents(cfg: ScenarioConfig, grid: np.ndarray, rngs) -> np.ndarray:
    factor = _gp_factor(grid, cfg.gp_x)
    z = np.column_stack([rng.standard_normal(grid.size) for rng in rngs])
    lat = (factor @ z).T
    if cfg.center_per_curve:
        return lat - lat.mean(axis=1, keepdims=True)
    return lat - lat.mean(axis=0, keepdims=True)


def _observe(rng, grid: np.ndarray, latent_row: np.ndarray, m: int, noise_sd: float):
    idx = np.sort(rng.choice(grid.size, size=m, replace=False))
    values = latent_row[idx] + noise_sd * rng.standard_normal(m)
    return LongitudinalSample(times=grid[idx], values=values), idx


def gen_scenario(cfg: ScenarioConfig) -> Dataset:
    """Generate one dataset according to the scenario configuration."""
    a, b = cfg.domain
    grid = np.linspace(a, b, cfg.latent_grid_size)
    if cfg.kind == "curvefit":
        rng = _stream(cfg.seed, _ROLE_SUBJECT, 0)
        sample, truth = gen_fig1_demo(
            rng,
            n_points=cfg.m_x,
            grid=grid,
            gp=cfg.gp_x,
            noise_sd=cfg.noise_sd,
        )
        return Dataset(kind="curvefit", train=(sample,), test=(), grid=grid, truth=truth)

    n_total = cfg.n_train + cfg.n_test
    rngs = [_stream(cfg.seed, _ROLE_SUBJECT, i) for i in range(n_total)]
    x_lat = _centered_latents(cfg, grid, rngs)
    coef_rng = _stream(cfg.seed, _ROLE_COEF, 0)
    coef_factor = _gp_factor(grid, cfg.gp_beta)
    w_s = _trapezoid_weights(grid)

    if cfg.kind == "sonf":
        beta = coef_factor @ coef_rng.standard_normal(grid.size)
        signals = (x_lat * w_s) @ beta
        subjects = []
        for i in range(n_total):
            rng = rngs[i]
            x_sample, _ = _observe(rng, grid, x_lat[i], cfg.m_x, cfg.noise_sd)
            y = float(signals[i] + cfg.noise_sd * rng.standard_normal())
            subjects.append(ScalarSubject(x=x_sample, y=y, signal=float(signals[i])))
        return Dataset(
            kind="sonf",
            train=tuple(subjects[: cfg.n_train]),
            test=tuple(subjects[cfg.n_train :]),
            grid=grid,
        )

    # Functional response: beta(s, t) sampled column-by-column over a coarse
    # response grid, one independent GP draw in s per response time.
    t_grid = np.linspace(a, b, cfg.response_grid_size)
    surface = coef_factor @ coef_rng.standard_normal((grid.size, t_grid.size))
    y_lat = (x_lat * w_s) @ surface
    subjects = []
    for i in range(n_total):
        rng = rngs[i]
        x_sample, _ = _observe(rng, grid, x_lat[i], cfg.m_x, cfg.noise_sd)
        y_idx = np.sort(rng.choice(t_grid.size, size=cfg.m_y, replace=False))
        y_sig = y_lat[i, y_idx]
        y_vals = y_sig + cfg.noise_sd * rng.standard_normal(cfg.m_y)
        subjects.append(
            CurveSubject(
                x=x_sample,
                y=LongitudinalSample(times=t_grid[y_idx], values=y_vals),
                y_signal=y_sig.copy(),
            )
        )
    return Dataset(
        kind="fonf",
        train=tuple(subjects[: cfg.n_train]),
        test=tuple(subjects[cfg.n_train :]),
        grid=grid,
        response_grid=t_grid,
    )


def gen_fig1_demo(
    rng: np.random.Generator,
    n_points: int = 15,
    grid: np.ndarray | None = None,
    gp: GpParams = GpParams(10.0, 10.0),
    noise_sd: float = 1.0,
) -> tuple[LongitudinalSample, np.ndarray]:
    """One GP curve observed at a few noisy points, plus its dense truth.

    Returns the observed sample and the noiseless curve values on the grid
    (default: 1001 equispaced points on [0, 100]).
    """
    if grid is None:
        grid = np.linspace(0.0, 100.0, 1001)
    grid = np.asarray(grid, dtype=np.float64)
    if not (1 <= n_points <= grid.size):
        raise InvalidInputError(f"n_points must lie in [1, {grid.size}], got {n_points}")
    truth = sample_gp(grid, gp, rng)
    idx = np.sort(rng.choice(grid.size, size=n_points, replace=False))
    values = truth[idx] + noise_sd * rng.standard_normal(n_points)
    return LongitudinalSample(times=grid[idx], values=values), truth


def replicate_config(cfg: ScenarioConfig, master_seed: int, replicate: int) -> ScenarioConfig:
    """Config for one replicate: entropy (master_seed, replicate)."""
    return replace(cfg, seed=(int(master_seed), int(replicate)))
